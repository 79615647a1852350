#pragma once

#include <vector>

#include "prem/series.hpp"
#include "prem/word.hpp"

namespace prem {

// Integer tensor ring on noncommuting X_1..X_d with every monomial containing
// a repeated variable set to zero.  The surviving basis is finite: monomials
// are injective index sequences of length <= d.
class ReducedTensor {
public:
  explicit ReducedTensor(int rank);

  static ReducedTensor one(int rank);
  static ReducedTensor generator(int rank, int index, int sign);
  static ReducedTensor from_terms(int rank, std::vector<Term> terms);

  int rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_one() const;
  Int coefficient(const Monomial& mono) const;

  ReducedTensor operator*(const ReducedTensor& rhs) const;
  ReducedTensor mul_serial(const ReducedTensor& rhs) const;

  bool operator==(const ReducedTensor& rhs) const {
    return rank_ == rhs.rank_ && terms_ == rhs.terms_;
  }
  bool operator!=(const ReducedTensor& rhs) const { return !(*this == rhs); }

private:
  int rank_;
  std::vector<Term> terms_;  // sorted by monomial, repetition-free, no zeros
};

// Multiplicative expansion of a free word into the reduced ring,
// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i.
ReducedTensor reduced_expand(const FreeWord& w);

std::vector<ReducedTensor> reduced_expand_batch(const std::vector<FreeWord>& words);

// Equality in the quotient of F_d by the product of the commutator subgroups
// of the normal closures of the generators, decided by reduced expansion.
// The "expansion 1 implies membership" direction rests on the faithfulness of
// the reduced Magnus representation, imported rather than re-proved here.
bool rf_equal(const FreeWord& u, const FreeWord& v);

// Coefficient of X_{i1}..X_{ik} in reduced_expand(longitude); the index
// entries must be pairwise distinct.
Int milnor_mu(const FreeWord& longitude, const std::vector<int>& index);

}  // namespace prem
