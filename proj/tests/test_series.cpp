#include <doctest.h>

#include <map>
#include <random>

#include "helpers.hpp"
#include "prem/series.hpp"

using prem::FreeWord;
using prem::Int;
using prem::LcsDepth;
using prem::Monomial;
using prem::Term;
using prem::TruncatedSeries;

namespace {

// Test-side naive polynomial arithmetic, kept independent of the library's
// product so it can serve as an oracle.
using Poly = std::map<Monomial, Int>;

Poly poly_mul(const Poly& a, const Poly& b, int cap) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (static_cast<int>(ma.size() + mb.size()) >= cap) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly poly_of(const TruncatedSeries& s) {
  Poly out;
  for (const auto& t : s.terms()) out[t.mono] = t.coeff;
  return out;
}

Poly poly_generator(int index, int sign, int cap) {
  Poly out;
  out[{}] = 1;
  Monomial m;
  Int c = 1;
  for (int deg = 1; deg < cap; ++deg) {
    m.push_back(static_cast<std::uint32_t>(index));
    if (sign < 0) c = -c;
    out[m] = c;
    if (sign > 0) break;
  }
  return out;
}

Poly poly_expand(const FreeWord& w, int cap) {
  Poly acc;
  acc[{}] = 1;
  for (int a : w.letters())
    acc = poly_mul(acc, poly_generator(a > 0 ? a : -a, a > 0 ? 1 : -1, cap), cap);
  return acc;
}

}  // namespace

TEST_CASE("expansion of a generator is 1 + X") {
  const auto s = magnus_expand(FreeWord::generator(2, 1), 4);
  CHECK(s.terms().size() == 2);
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1}) == 1);
}

TEST_CASE("inverse expansion is the truncated geometric series") {
  const auto inv = magnus_expand(FreeWord::generator(1, 1, -1), 3);
  CHECK(inv.coefficient({}) == 1);
  CHECK(inv.coefficient({1}) == -1);
  CHECK(inv.coefficient({1, 1}) == 1);
  // and it really is the inverse of 1 + X mod degree 3
  const auto prod = inv * magnus_expand(FreeWord::generator(1, 1), 3);
  CHECK(prod.is_one());
}

TEST_CASE("commutator expansion via the four-factor oracle") {
  const FreeWord c =
      FreeWord::commutator(FreeWord::generator(2, 1), FreeWord::generator(2, 2));
  const auto s = magnus_expand(c, 3);
  CHECK(poly_of(s) == poly_expand(c, 3));
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1, 2}) == 1);
  CHECK(s.coefficient({2, 1}) == -1);
  CHECK(s.coefficient({1}) == 0);
  CHECK(s.coefficient({2}) == 0);
}

TEST_CASE("expansion is a monoid homomorphism") {
  std::mt19937 rng(3);
  for (int k = 0; k < 500; ++k) {
    const int rank = 2 + static_cast<int>(rng() % 3);  // 2..4
    const int cap = 2 + static_cast<int>(rng() % 4);   // 2..5
    const FreeWord u = testutil::random_word(rng, rank, 8);
    const FreeWord v = testutil::random_word(rng, rank, 8);
    CHECK(magnus_expand(u * v, cap) ==
          magnus_expand(u, cap) * magnus_expand(v, cap));
  }
}

TEST_CASE("expansion against the naive oracle on random words") {
  std::mt19937 rng(4);
  for (int k = 0; k < 100; ++k) {
    const int rank = 2 + static_cast<int>(rng() % 3);
    const int cap = 2 + static_cast<int>(rng() % 4);
    const FreeWord w = testutil::random_word(rng, rank, 10);
    CHECK(poly_of(magnus_expand(w, cap)) == poly_expand(w, cap));
  }
}

TEST_CASE("serial and default products agree exactly") {
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto a = magnus_expand(testutil::random_word(rng, 4, 20), 5);
    const auto b = magnus_expand(testutil::random_word(rng, 4, 20), 5);
    CHECK(a * b == a.mul_serial(b));
  }
  const auto batch_in = [&] {
    std::vector<FreeWord> ws;
    for (int k = 0; k < 64; ++k) ws.push_back(testutil::random_word(rng, 4, 15));
    return ws;
  }();
  CHECK(magnus_expand_batch(batch_in, 4) ==
        magnus_expand_batch_serial(batch_in, 4));
}

TEST_CASE("lcs depth of generators and iterated commutators") {
  const FreeWord x1 = FreeWord::generator(2, 1);
  const FreeWord x2 = FreeWord::generator(2, 2);
  const FreeWord c = FreeWord::commutator(x1, x2);
  const FreeWord cc = FreeWord::commutator(c, x1);

  CHECK(lcs_depth(x1, 4) == LcsDepth{LcsDepth::Finite, 1});
  CHECK(lcs_depth(c, 4) == LcsDepth{LcsDepth::Finite, 2});
  CHECK(lcs_depth(cc, 4) == LcsDepth{LcsDepth::Finite, 3});
  CHECK(lcs_depth(FreeWord::identity(2), 4).kind == LcsDepth::Infinite);
  CHECK(lcs_depth(cc, 3).kind == LcsDepth::AtLeastCap);
  CHECK_THROWS_AS(lcs_depth(x1, 1), std::invalid_argument);
}

TEST_CASE("commutator grading of the lower central series") {
  std::mt19937 rng(6);
  const int cap = 5;
  for (int k = 0; k < 100; ++k) {
    const FreeWord u = testutil::random_word(rng, 3, 6);
    const FreeWord v = testutil::random_word(rng, 3, 6);
    const auto du = lcs_depth(u, cap);
    const auto dv = lcs_depth(v, cap);
    if (du.kind != LcsDepth::Finite || dv.kind != LcsDepth::Finite) continue;
    const auto dc = lcs_depth(FreeWord::commutator(u, v), cap);
    const int lower = du.value + dv.value;
    if (dc.kind == LcsDepth::Finite)
      CHECK(dc.value >= std::min(lower, cap));
    // AtLeastCap and Infinite both certify depth >= cap >= min(lower, cap).
  }
}

TEST_CASE("truncation forgets the top degree functorially") {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const FreeWord w = testutil::random_word(rng, 3, 10);
    CHECK(magnus_expand(w, 5).truncated(3) == magnus_expand(w, 3));
  }
}

TEST_CASE("substitution composes expansions") {
  // Substituting the expansions of images of generators realizes the
  // expansion of the composed endomorphism.
  const int rank = 2, cap = 4;
  const FreeWord w(rank, {1, 2, -1});
  // endomorphism x1 -> x1 x2, x2 -> x2^-1
  std::vector<TruncatedSeries> images = {
      magnus_expand(FreeWord(rank, {1, 2}), cap),
      magnus_expand(FreeWord(rank, {-2}), cap)};
  // image of w under the endomorphism: (x1 x2) x2^-1 (x1 x2)^-1
  const FreeWord image_word(rank, {1, 2, -2, -2, -1});
  CHECK(magnus_expand(w, cap).substituted(images) ==
        magnus_expand(image_word, cap));
}
