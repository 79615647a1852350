#pragma once

#include <cstdint>
#include <vector>

#include "prem/perm.hpp"
#include "prem/word.hpp"

namespace prem {

// Word in the standard braid generators: letter +i is sigma_i, -i its
// inverse, 1 <= i < strands.  Words act left to right throughout.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands_, std::vector<int> letters_);

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  static BraidWord commutator(const BraidWord& a, const BraidWord& b);
};

// Automorphism of F_d of the shape x_i -> w_i x_{pi(i)} w_i^-1 fixing the
// product x_1...x_d; the shape every braid and string-link action has.
class ConjugacyAutomorphism {
public:
  ConjugacyAutomorphism(int rank, Permutation perm,
                        std::vector<FreeWord> conjugators);

  static ConjugacyAutomorphism identity(int rank);

  int rank() const { return rank_; }
  const Permutation& permutation() const { return perm_; }
  const std::vector<FreeWord>& conjugators() const { return conjugators_; }

  // Reduced word w_i x_{pi(i)} w_i^-1, generators indexed from 1.
  FreeWord image_of_generator(int i) const;
  FreeWord apply(const FreeWord& w) const;

  // Apply *this first, then g.
  ConjugacyAutomorphism then(const ConjugacyAutomorphism& g) const;

  bool is_identity() const;
  bool operator==(const ConjugacyAutomorphism& rhs) const;

private:
  int rank_;
  Permutation perm_;
  std::vector<FreeWord> conjugators_;
};

Permutation permutation_of(const BraidWord& b);

ConjugacyAutomorphism artin_generator(int strands, int index, int sign);
ConjugacyAutomorphism artin_action(const BraidWord& b);

// Exact triviality in B_d through the Artin representation.
bool is_trivial_braid(const BraidWord& b);

// Pairwise linking numbers of a pure braid: half the signed crossing count
// between each pair of strands, tracked positionally.
std::vector<std::vector<long long>> linking_matrix(const BraidWord& b);

// Triviality of the image in the homotopy braid group, decided by reading
// the Artin images in the reduced tensor ring.
bool hb_is_trivial(const BraidWord& b);

struct HumphriesCertificate {
  enum Verdict { InfiniteOrder, NoConclusion } verdict;
  Permutation permutation;
  long long permutation_order;
  int divisor_witness;  // 2, 3 or 5 when InfiniteOrder, else 0
};

// Infinite order in HB_d whenever the underlying permutation has order
// divisible by 2, 3 or 5; no bound on the strand count.
HumphriesCertificate humphries_certificate(const BraidWord& b);

// Whether braids assigned to the 2g standard loops of a genus-g surface
// extend to a homomorphism from the surface group, i.e. whether the product
// of commutators [b1,b2]...[b_{2g-1},b_{2g}] is trivial.  This is the lifting
// condition for a covering induced from the assignment to be a 2-prem.
bool covering_lift_check(int genus, const std::vector<BraidWord>& images);

}  // namespace prem
