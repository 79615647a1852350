#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "prem/braid.hpp"
#include "prem/reduced.hpp"

using prem::BraidWord;
using prem::ConjugacyAutomorphism;
using prem::FreeWord;
using prem::Permutation;

TEST_CASE("permutation of generators and relations") {
  CHECK(permutation_of(BraidWord(3, {1})) ==
        Permutation::transposition(3, 0, 1));
  const BraidWord comm(3, {1, 2, -1, -2});
  CHECK(permutation_of(comm).order() == 3);
  CHECK(permutation_of(comm * comm * comm).is_identity());
}

TEST_CASE("permutation_of is a homomorphism") {
  std::mt19937 rng(31);
  for (int k = 0; k < 500; ++k) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const BraidWord a = testutil::random_braid(rng, d, 12);
    const BraidWord b = testutil::random_braid(rng, d, 12);
    CHECK(permutation_of(a * b) == permutation_of(a).then(permutation_of(b)));
  }
}

TEST_CASE("artin action of a single generator") {
  const auto a = artin_action(BraidWord(2, {1}));
  CHECK(a.image_of_generator(1) == FreeWord(2, {1, 2, -1}));
  CHECK(a.image_of_generator(2) == FreeWord(2, {1}));
  CHECK(a.permutation() == Permutation::transposition(2, 0, 1));

  const auto inv = artin_action(BraidWord(2, {-1}));
  CHECK(a.then(inv).is_identity());
  CHECK(inv.then(a).is_identity());
}

TEST_CASE("artin action composes left to right") {
  std::mt19937 rng(32);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const BraidWord a = testutil::random_braid(rng, d, 8);
    const BraidWord b = testutil::random_braid(rng, d, 8);
    CHECK(artin_action(a * b) == artin_action(a).then(artin_action(b)));
  }
}

TEST_CASE("artin respects the braid relations") {
  for (int d = 2; d <= 6; ++d) {
    for (int i = 1; i + 1 < d; ++i) {
      CHECK(artin_action(BraidWord(d, {i, i + 1, i})) ==
            artin_action(BraidWord(d, {i + 1, i, i + 1})));
    }
    for (int i = 1; i < d; ++i)
      for (int j = i + 2; j < d; ++j)
        CHECK(artin_action(BraidWord(d, {i, j})) ==
              artin_action(BraidWord(d, {j, i})));
  }
}

TEST_CASE("artin images fix the product of generators") {
  // Exercised by the construction invariant; spot-check the reduced product.
  std::mt19937 rng(33);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const auto a = artin_action(testutil::random_braid(rng, d, 20));
    std::vector<int> prod;
    for (int i = 1; i <= d; ++i) {
      const auto img = a.image_of_generator(i).letters();
      prod.insert(prod.end(), img.begin(), img.end());
    }
    std::vector<int> expect(d);
    for (int i = 0; i < d; ++i) expect[i] = i + 1;
    CHECK(FreeWord(d, prod) == FreeWord(d, expect));
  }
}

TEST_CASE("triviality in the braid group") {
  CHECK(is_trivial_braid(BraidWord(3, {})));
  CHECK_FALSE(is_trivial_braid(BraidWord(3, {1})));
  CHECK(is_trivial_braid(BraidWord(3, {1, -1})));
  CHECK(is_trivial_braid(BraidWord(3, {1, 2, 1, -2, -1, -2})));
  CHECK_FALSE(is_trivial_braid(BraidWord(3, {1, 2, -1, -2})));
}

TEST_CASE("linking matrix") {
  CHECK(linking_matrix(BraidWord(2, {})) ==
        std::vector<std::vector<long long>>{{0, 0}, {0, 0}});
  CHECK(linking_matrix(BraidWord(2, {1, 1})) ==
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(linking_matrix(BraidWord(2, {1})), std::invalid_argument);

  const BraidWord comm(3, {1, 2, -1, -2});
  const BraidWord cube = comm * comm * comm;
  const auto lk = linking_matrix(cube);
  for (const auto& row : lk)
    for (auto v : row) CHECK(v == 0);
}

TEST_CASE("linking matrix agrees with the abelianized conjugators") {
  // For a pure braid the exponent sum of x_j in the strand-i conjugator is
  // the linking number of strands i and j.  Pure inputs are random products
  // of the elementary twists A_ij = (s_{j-1}..s_{i+1}) s_i^2 (..)^-1.
  std::mt19937 rng(34);
  auto elementary_twist = [](int d, int i, int j, int sign) {
    std::vector<int> letters;
    for (int k = j - 1; k > i; --k) letters.push_back(k);
    letters.push_back(i);
    letters.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
    BraidWord b(d, letters);
    return sign > 0 ? b : b.inverse();
  };
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    BraidWord b(d, {});
    const int factors = 1 + static_cast<int>(rng() % 6);
    for (int f = 0; f < factors; ++f) {
      const int i = 1 + static_cast<int>(rng() % (d - 1));
      const int j = i + 1 + static_cast<int>(rng() % (d - i));
      b = b * elementary_twist(d, i, j, rng() % 2 ? 1 : -1);
    }
    REQUIRE(permutation_of(b).is_identity());
    const auto lk = linking_matrix(b);
    const auto act = artin_action(b);
    for (int i = 1; i <= d; ++i) {
      std::vector<long long> expo(d + 1, 0);
      for (int a : act.conjugators()[i - 1].letters())
        expo[a > 0 ? a : -a] += a > 0 ? 1 : -1;
      for (int j = 1; j <= d; ++j)
        if (j != i) CHECK(expo[j] == lk[i - 1][j - 1]);
    }
  }
}

TEST_CASE("hb triviality") {
  CHECK(prem::hb_is_trivial(BraidWord(3, {})));
  CHECK_FALSE(prem::hb_is_trivial(BraidWord(2, {1, 1})));

  const BraidWord comm(3, {1, 2, -1, -2});
  const BraidWord cube = comm * comm * comm;
  // Pairwise unlinked yet nontrivial up to link homotopy; triviality would
  // force the commutator to have order three, contradicting its infinite
  // order certificate.
  CHECK_FALSE(prem::hb_is_trivial(cube));
  CHECK(humphries_certificate(comm).verdict ==
        prem::HumphriesCertificate::InfiniteOrder);

  // braid-relation insertions do not change the verdict
  const BraidWord padded(3, {1, 1, 2, 1, -2, -1, -2, 1, -1, -1});
  CHECK(prem::hb_is_trivial(padded) == prem::hb_is_trivial(BraidWord(3, {})));
}

TEST_CASE("projection chain: trivial implies hb-trivial implies pure") {
  std::mt19937 rng(35);
  for (int k = 0; k < 200; ++k) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const BraidWord b = testutil::random_braid(rng, d, 10);
    if (is_trivial_braid(b)) CHECK(prem::hb_is_trivial(b));
    if (prem::hb_is_trivial(b)) CHECK(permutation_of(b).is_identity());
  }
}

TEST_CASE("humphries certificate") {
  const auto inf = humphries_certificate(BraidWord(3, {1, 2, -1, -2}));
  CHECK(inf.verdict == prem::HumphriesCertificate::InfiniteOrder);
  CHECK(inf.permutation_order == 3);
  CHECK(inf.divisor_witness == 3);

  const auto pure = humphries_certificate(BraidWord(2, {1, 1}));
  CHECK(pure.verdict == prem::HumphriesCertificate::NoConclusion);
  CHECK(pure.permutation_order == 1);

  // 7-cycle in B_7: order 7 is coprime to 30
  const auto seven = humphries_certificate(BraidWord(7, {1, 2, 3, 4, 5, 6}));
  CHECK(seven.permutation_order == 7);
  CHECK(seven.verdict == prem::HumphriesCertificate::NoConclusion);
}

TEST_CASE("covering lift check") {
  CHECK(prem::covering_lift_check(0, {}));
  CHECK(prem::covering_lift_check(1, {BraidWord(2, {1}), BraidWord(2, {1})}));
  CHECK_FALSE(prem::covering_lift_check(1, {BraidWord(3, {1}), BraidWord(3, {2})}));
  // abelian images always lift
  std::mt19937 rng(36);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<BraidWord> images;
    for (int g = 0; g < 2; ++g) {
      std::vector<int> letters(n, 1);
      images.push_back(BraidWord(2, letters));
    }
    CHECK(prem::covering_lift_check(1, images));
  }
  CHECK_THROWS_AS(prem::covering_lift_check(1, {BraidWord(2, {})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(prem::covering_lift_check(1, {BraidWord(2, {}), BraidWord(3, {})}),
                  std::invalid_argument);
}
