#pragma once

namespace prem::refs {

// Citation anchors attached to machine-readable verdicts.
inline constexpr const char* kThetaMoves = "S1 (double point obstruction)";
inline constexpr const char* kThetaZero = "S1, theta vanishes for n-prems";
inline constexpr const char* kMonodromy = "S2.1, monodromy map";
inline constexpr const char* kBasepointChange = "Theorem 2.3";
inline constexpr const char* kTransitivity = "Proposition 2.4";
inline constexpr const char* kStringLinkFactoring = "Proposition 2.6";
inline constexpr const char* kCoveringLift = "Theorem 2.7";
inline constexpr const char* kArtin = "S2.2, Artin representation";
inline constexpr const char* kSymmetricProjection =
    "S2.2, projection to the symmetric group";
inline constexpr const char* kLinking = "S2.2, linking numbers of pure braids";
inline constexpr const char* kPullback = "S2.1, pullback";
inline constexpr const char* kReducedFaithfulness = "S2.2, reduced free quotient";
inline constexpr const char* kHumphries = "S2.2, Humphries torsion criterion";
inline constexpr const char* kVerdict = "Corollary 2.10";
inline constexpr const char* kTowers = "Remark 2.12";
inline constexpr const char* kDiskModel = "S3.1";
inline constexpr const char* kWordGroup = "Example 3.1.1.1";
inline constexpr const char* kSimplicialLoops = "Example 3.1.2";
inline constexpr const char* kNestedModel = "S3.2";
inline constexpr const char* kThreeComponents = "Example 3.2.1";
inline constexpr const char* kAlternation = "Example 3.2.4";

// Imported-theorem caveat attached to verdicts that decide equality in the
// reduced free quotient by expansion.
inline constexpr const char* kReducedEqualityAssumption =
    "relies on the faithfulness of the reduced Magnus representation";

}  // namespace prem::refs
