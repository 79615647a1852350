#pragma once

#include <random>
#include <vector>

#include "prem/braid.hpp"
#include "prem/word.hpp"

namespace testutil {

inline prem::FreeWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> letters;
  const int n = len(rng);
  letters.reserve(n);
  for (int k = 0; k < n; ++k) letters.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return prem::FreeWord(rank, letters);
}

inline prem::BraidWord random_braid(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> letters;
  const int n = len(rng);
  letters.reserve(n);
  for (int k = 0; k < n; ++k) letters.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return prem::BraidWord(strands, std::move(letters));
}

}  // namespace testutil
