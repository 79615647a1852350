#include "prem/reduced.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prem {

namespace {

bool repetition_free(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i] == m[j]) return false;
  return true;
}

std::vector<Term> to_sorted_terms(std::map<Monomial, Int>&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) out.push_back(Term{mono, std::move(coeff)});
  return out;
}

}  // namespace

ReducedTensor::ReducedTensor(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("ReducedTensor: rank must be >= 1");
}

ReducedTensor ReducedTensor::one(int rank) {
  ReducedTensor t(rank);
  t.terms_.push_back(Term{{}, 1});
  return t;
}

ReducedTensor ReducedTensor::generator(int rank, int index, int sign) {
  if (index < 1 || index > rank)
    throw std::out_of_range("ReducedTensor: variable index out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("ReducedTensor: sign must be +1 or -1");
  ReducedTensor t(rank);
  t.terms_.push_back(Term{{}, 1});
  t.terms_.push_back(Term{{static_cast<std::uint32_t>(index)}, sign});
  return t;
}

ReducedTensor ReducedTensor::from_terms(int rank, std::vector<Term> terms) {
  std::map<Monomial, Int> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.mono.size()) > rank)
      throw std::invalid_argument("ReducedTensor: monomial longer than rank");
    for (auto v : t.mono)
      if (v < 1 || static_cast<int>(v) > rank)
        throw std::out_of_range("ReducedTensor: variable index out of range");
    if (!repetition_free(t.mono))
      throw std::invalid_argument("ReducedTensor: repeated index in monomial");
    acc[t.mono] += t.coeff;
  }
  ReducedTensor t(rank);
  t.terms_ = to_sorted_terms(std::move(acc));
  return t;
}

bool ReducedTensor::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff == 1;
}

Int ReducedTensor::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Monomial& m) { return t.mono < m; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return 0;
}

ReducedTensor ReducedTensor::mul_serial(const ReducedTensor& rhs) const {
  if (rank_ != rhs.rank_)
    throw std::invalid_argument("ReducedTensor: rank mismatch");
  std::map<Monomial, Int> acc;
  for (const Term& a : terms_) {
    for (const Term& b : rhs.terms_) {
      if (a.mono.size() + b.mono.size() > static_cast<std::size_t>(rank_))
        continue;
      bool clash = false;
      for (auto v : b.mono)
        if (std::find(a.mono.begin(), a.mono.end(), v) != a.mono.end()) {
          clash = true;
          break;
        }
      if (clash) continue;
      Monomial m = a.mono;
      m.insert(m.end(), b.mono.begin(), b.mono.end());
      acc[m] += a.coeff * b.coeff;
    }
  }
  ReducedTensor t(rank_);
  t.terms_ = to_sorted_terms(std::move(acc));
  return t;
}

ReducedTensor ReducedTensor::operator*(const ReducedTensor& rhs) const {
  return mul_serial(rhs);
}

ReducedTensor reduced_expand(const FreeWord& w) {
  ReducedTensor acc = ReducedTensor::one(w.rank());
  for (int a : w.letters()) {
    const int index = a > 0 ? a : -a;
    acc = acc * ReducedTensor::generator(w.rank(), index, a > 0 ? 1 : -1);
  }
  return acc;
}

std::vector<ReducedTensor> reduced_expand_batch(const std::vector<FreeWord>& words) {
#ifdef _OPENMP
  std::vector<ReducedTensor> out(words.size(), ReducedTensor(1));
  const std::size_t n = words.size();
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) out[i] = reduced_expand(words[i]);
  return out;
#else
  std::vector<ReducedTensor> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(reduced_expand(w));
  return out;
#endif
}

bool rf_equal(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    throw std::invalid_argument("rf_equal: rank mismatch");
  return reduced_expand(u) == reduced_expand(v);
}

Int milnor_mu(const FreeWord& longitude, const std::vector<int>& index) {
  Monomial mono;
  mono.reserve(index.size());
  for (int i : index) {
    if (i < 1 || i > longitude.rank())
      throw std::out_of_range("milnor_mu: index entry out of range");
    mono.push_back(static_cast<std::uint32_t>(i));
  }
  if (!repetition_free(mono))
    throw std::invalid_argument("milnor_mu: repeated index entry");
  return reduced_expand(longitude).coefficient(mono);
}

}  // namespace prem
