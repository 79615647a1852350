#include "prem/series.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prem {

namespace {

void check_ring(int rank, int cap) {
  if (rank < 1) throw std::invalid_argument("TruncatedSeries: rank must be >= 1");
  if (cap < 1) throw std::invalid_argument("TruncatedSeries: cap must be >= 1");
}

std::vector<Term> to_sorted_terms(std::map<Monomial, Int>&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) out.push_back(Term{mono, std::move(coeff)});
  return out;
}

// Number of term pairs below which the product stays on the serial path.
constexpr std::size_t kParallelGrain = 1u << 15;

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int cap) : rank_(rank), cap_(cap) {
  check_ring(rank, cap);
}

TruncatedSeries TruncatedSeries::one(int rank, int cap) {
  TruncatedSeries s(rank, cap);
  s.terms_.push_back(Term{{}, 1});
  return s;
}

TruncatedSeries TruncatedSeries::generator(int rank, int cap, int index, int sign) {
  check_ring(rank, cap);
  if (index < 1 || index > rank)
    throw std::out_of_range("TruncatedSeries: variable index out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("TruncatedSeries: sign must be +1 or -1");
  std::map<Monomial, Int> acc;
  Monomial m;
  Int c = 1;
  acc[m] = 1;
  for (int deg = 1; deg < cap; ++deg) {
    m.push_back(static_cast<std::uint32_t>(index));
    if (sign < 0) c = -c;
    acc[m] = c;
    if (sign > 0) break;  // 1 + X_i only
  }
  TruncatedSeries s(rank, cap);
  s.terms_ = to_sorted_terms(std::move(acc));
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(int rank, int cap,
                                            std::vector<Term> terms) {
  std::map<Monomial, Int> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.mono.size()) >= cap)
      throw std::invalid_argument("TruncatedSeries: monomial at or above cap");
    for (auto v : t.mono)
      if (v < 1 || static_cast<int>(v) > rank)
        throw std::out_of_range("TruncatedSeries: variable index out of range");
    acc[t.mono] += t.coeff;
  }
  TruncatedSeries s(rank, cap);
  s.terms_ = to_sorted_terms(std::move(acc));
  return s;
}

bool TruncatedSeries::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff == 1;
}

Int TruncatedSeries::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Monomial& m) { return t.mono < m; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return 0;
}

TruncatedSeries TruncatedSeries::mul_serial(const TruncatedSeries& rhs) const {
  if (rank_ != rhs.rank_ || cap_ != rhs.cap_)
    throw std::invalid_argument("TruncatedSeries: ring mismatch");
  std::map<Monomial, Int> acc;
  for (const Term& a : terms_) {
    const int room = cap_ - static_cast<int>(a.mono.size());
    for (const Term& b : rhs.terms_) {
      if (static_cast<int>(b.mono.size()) >= room) continue;
      Monomial m = a.mono;
      m.insert(m.end(), b.mono.begin(), b.mono.end());
      acc[m] += a.coeff * b.coeff;
    }
  }
  TruncatedSeries s(rank_, cap_);
  s.terms_ = to_sorted_terms(std::move(acc));
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
#ifdef _OPENMP
  if (terms_.size() * rhs.terms_.size() >= kParallelGrain &&
      omp_get_max_threads() > 1) {
    if (rank_ != rhs.rank_ || cap_ != rhs.cap_)
      throw std::invalid_argument("TruncatedSeries: ring mismatch");
    const std::size_t n = terms_.size();
    std::vector<std::map<Monomial, Int>> partial;
#pragma omp parallel
    {
#pragma omp single
      partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
      std::map<Monomial, Int>& acc =
          partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::size_t i = 0; i < n; ++i) {
        const Term& a = terms_[i];
        const int room = cap_ - static_cast<int>(a.mono.size());
        for (const Term& b : rhs.terms_) {
          if (static_cast<int>(b.mono.size()) >= room) continue;
          Monomial m = a.mono;
          m.insert(m.end(), b.mono.begin(), b.mono.end());
          acc[m] += a.coeff * b.coeff;
        }
      }
    }
    std::map<Monomial, Int> acc;
    for (auto& p : partial)
      for (auto& [mono, coeff] : p) acc[mono] += coeff;
    TruncatedSeries s(rank_, cap_);
    s.terms_ = to_sorted_terms(std::move(acc));
    return s;
  }
#endif
  return mul_serial(rhs);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  if (rank_ != rhs.rank_ || cap_ != rhs.cap_)
    throw std::invalid_argument("TruncatedSeries: ring mismatch");
  std::map<Monomial, Int> acc;
  for (const Term& t : terms_) acc[t.mono] += t.coeff;
  for (const Term& t : rhs.terms_) acc[t.mono] += t.coeff;
  TruncatedSeries s(rank_, cap_);
  s.terms_ = to_sorted_terms(std::move(acc));
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  if (rank_ != rhs.rank_ || cap_ != rhs.cap_)
    throw std::invalid_argument("TruncatedSeries: ring mismatch");
  std::map<Monomial, Int> acc;
  for (const Term& t : terms_) acc[t.mono] += t.coeff;
  for (const Term& t : rhs.terms_) acc[t.mono] -= t.coeff;
  TruncatedSeries s(rank_, cap_);
  s.terms_ = to_sorted_terms(std::move(acc));
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int cap) const {
  if (cap < 1 || cap > cap_)
    throw std::invalid_argument("TruncatedSeries: bad truncation cap");
  TruncatedSeries s(rank_, cap);
  for (const Term& t : terms_)
    if (static_cast<int>(t.mono.size()) < cap) s.terms_.push_back(t);
  return s;
}

TruncatedSeries TruncatedSeries::substituted(
    const std::vector<TruncatedSeries>& images) const {
  if (static_cast<int>(images.size()) != rank_)
    throw std::invalid_argument("TruncatedSeries: need one image per variable");
  const TruncatedSeries unit = one(rank_, cap_);
  std::vector<TruncatedSeries> deltas;
  deltas.reserve(images.size());
  for (const auto& g : images) {
    if (g.rank() != rank_ || g.cap() != cap_)
      throw std::invalid_argument("TruncatedSeries: ring mismatch in images");
    deltas.push_back(g - unit);
  }
  TruncatedSeries out(rank_, cap_);
  for (const Term& t : terms_) {
    TruncatedSeries prod = unit;
    for (auto v : t.mono) prod = prod * deltas[v - 1];
    std::vector<Term> scaled = prod.terms();
    for (auto& s : scaled) s.coeff *= t.coeff;
    out = out + from_terms(rank_, cap_, std::move(scaled));
  }
  return out;
}

TruncatedSeries magnus_expand(const FreeWord& w, int cap) {
  TruncatedSeries acc = TruncatedSeries::one(w.rank(), cap);
  for (int a : w.letters()) {
    const int index = a > 0 ? a : -a;
    acc = acc * TruncatedSeries::generator(w.rank(), cap, index, a > 0 ? 1 : -1);
  }
  return acc;
}

std::vector<TruncatedSeries> magnus_expand_batch_serial(
    const std::vector<FreeWord>& words, int cap) {
  std::vector<TruncatedSeries> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(magnus_expand(w, cap));
  return out;
}

std::vector<TruncatedSeries> magnus_expand_batch(
    const std::vector<FreeWord>& words, int cap) {
#ifdef _OPENMP
  std::vector<TruncatedSeries> out(words.size(), TruncatedSeries(1, 1));
  const std::size_t n = words.size();
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) out[i] = magnus_expand(words[i], cap);
  return out;
#else
  return magnus_expand_batch_serial(words, cap);
#endif
}

LcsDepth lcs_depth(const FreeWord& w, int cap) {
  if (cap < 2) throw std::invalid_argument("lcs_depth: cap must be >= 2");
  if (w.is_identity()) return LcsDepth{LcsDepth::Infinite, 0};
  const TruncatedSeries delta =
      magnus_expand(w, cap) - TruncatedSeries::one(w.rank(), cap);
  int lowest = cap;
  for (const Term& t : delta.terms())
    lowest = std::min(lowest, static_cast<int>(t.mono.size()));
  if (lowest >= cap) return LcsDepth{LcsDepth::AtLeastCap, cap};
  return LcsDepth{LcsDepth::Finite, lowest};
}

}  // namespace prem
