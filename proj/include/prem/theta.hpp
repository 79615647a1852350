#pragma once

#include <vector>

#include "prem/subgroup.hpp"
#include "prem/word.hpp"

namespace prem {

struct SignedPoint {
  int sign;  // +1 or -1
  FreeWord word;
};

// Formal signed sum of double cosets H\G/H with G free, subject to two
// moves: cancellation of opposite-sign entries in one double coset, and
// (unless the map is a covering) deletion of entries lying in H.
struct DoubleCosetSum {
  int rank = 1;
  std::vector<FreeWord> subgroup_generators;
  bool covering = false;
  std::vector<SignedPoint> points;

  SubgroupGraph subgroup() const {
    return SubgroupGraph::fold(subgroup_generators, rank);
  }
};

// Entries left after applying the moves exhaustively in a fixed order.
std::vector<SignedPoint> surviving_points(const DoubleCosetSum& s);

// Same, but applying applicable moves in a seed-driven random order; the
// moves are confluent, so the surviving double cosets agree with the
// deterministic pass.
std::vector<SignedPoint> surviving_points_shuffled(const DoubleCosetSum& s,
                                                   unsigned seed);

struct CanonicalSum {
  std::vector<SignedPoint> surviving;
  int representative_bound;  // conjugator length explored per side
};

// Surviving entries with each representative replaced by the shortlex-least
// word h g h' over subgroup elements h, h' of length <= bound.
CanonicalSum canonicalize(const DoubleCosetSum& s, int representative_bound = 4);

bool is_zero(const DoubleCosetSum& s);

// Whether two surviving lists present the same signed multiset of double
// cosets of H.
bool same_signed_cosets(const SubgroupGraph& H,
                        const std::vector<SignedPoint>& a,
                        const std::vector<SignedPoint>& b);

}  // namespace prem
