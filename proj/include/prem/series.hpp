#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "prem/word.hpp"

namespace prem {

using Int = boost::multiprecision::cpp_int;

// Monomial in noncommuting variables X_1..X_d, stored as the index sequence.
using Monomial = std::vector<std::uint32_t>;

struct Term {
  Monomial mono;
  Int coeff;
};

// Integer power series in noncommuting variables, truncated below degree
// `cap`: only monomials of length < cap are kept.  Terms are sorted
// lexicographically by monomial and never have coefficient zero, so equal
// series have identical representations.
class TruncatedSeries {
public:
  TruncatedSeries(int rank, int cap);

  static TruncatedSeries one(int rank, int cap);
  // Expansion of x_index^sign: 1 + X_i for sign +1, the truncated geometric
  // series 1 - X_i + X_i^2 - ... for sign -1.
  static TruncatedSeries generator(int rank, int cap, int index, int sign);
  static TruncatedSeries from_terms(int rank, int cap, std::vector<Term> terms);

  int rank() const { return rank_; }
  int cap() const { return cap_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_one() const;
  Int coefficient(const Monomial& mono) const;

  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries mul_serial(const TruncatedSeries& rhs) const;
  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;

  // Re-truncation to a smaller cap.
  TruncatedSeries truncated(int cap) const;

  // Substitutes X_j := images[j-1] - 1 into every monomial.  images[j] must
  // share rank and cap with the target ring.
  TruncatedSeries substituted(const std::vector<TruncatedSeries>& images) const;

  bool operator==(const TruncatedSeries& rhs) const {
    return rank_ == rhs.rank_ && cap_ == rhs.cap_ && terms_ == rhs.terms_;
  }
  bool operator!=(const TruncatedSeries& rhs) const { return !(*this == rhs); }

private:
  int rank_;
  int cap_;
  std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.mono == b.mono && a.coeff == b.coeff;
}

// Magnus expansion x_i -> 1 + X_i, truncated below degree cap.
TruncatedSeries magnus_expand(const FreeWord& w, int cap);

// Batch expansion; data-parallel over the input words.
std::vector<TruncatedSeries> magnus_expand_batch(
    const std::vector<FreeWord>& words, int cap);
std::vector<TruncatedSeries> magnus_expand_batch_serial(
    const std::vector<FreeWord>& words, int cap);

// Depth of a word in the lower central series, detected through the lowest
// degree of expand(w) - 1.
struct LcsDepth {
  enum Kind { Finite, AtLeastCap, Infinite } kind;
  int value;  // the depth when Finite, the cap when AtLeastCap, unused else

  bool operator==(const LcsDepth& rhs) const {
    return kind == rhs.kind && (kind != Finite || value == rhs.value);
  }
  std::string str() const {
    switch (kind) {
      case Finite: return std::to_string(value);
      case AtLeastCap: return ">= " + std::to_string(value);
      default: return "infinity";
    }
  }
};

LcsDepth lcs_depth(const FreeWord& w, int cap);

}  // namespace prem
