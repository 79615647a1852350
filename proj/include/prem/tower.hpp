#pragma once

#include <vector>

#include "prem/braid.hpp"
#include "prem/perm.hpp"
#include "prem/series.hpp"

namespace prem {

// Image of a conjugacy-shaped automorphism in the automorphism group of the
// free nilpotent quotient at the given level: the Magnus expansions of the
// generator images truncated below degree `level`.
struct LevelImage {
  int rank;
  int level;
  std::vector<TruncatedSeries> images;

  bool operator==(const LevelImage& rhs) const {
    return rank == rhs.rank && level == rhs.level && images == rhs.images;
  }
};

LevelImage level_image(const ConjugacyAutomorphism& a, int level);
LevelImage level_identity(int rank, int level);
bool level_is_identity(const LevelImage& p);

// Componentwise exact equality; level or rank mismatch is an error.
bool tower_equal(const LevelImage& p, const LevelImage& q);

// Level image of the composite "p first, then q", computed by substituting
// q's generator series into p's and re-truncating.
LevelImage level_compose(const LevelImage& p, const LevelImage& q);

// Least level m in 2..cap at which the level image differs from the
// identity, or AtLeastCap when all those levels are trivial.
using KernelDegree = LcsDepth;
KernelDegree kernel_degree(const ConjugacyAutomorphism& a, int cap);

// Corollary-style obstruction verdict from a verified finite torsion order
// and its monodromy permutation.
struct PremVerdict {
  enum Verdict { Not2Prem, NoConclusion } verdict;
  Permutation monodromy;
  long long permutation_order;
  int divisor_witness;          // 2, 3 or 5 when Not2Prem, else 0
  bool order_consistent;        // permutation order divides the torsion order
};

PremVerdict prem_verdict(long long torsion_order, const Permutation& monodromy);

}  // namespace prem
