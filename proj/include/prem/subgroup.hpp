#pragma once

#include <vector>

#include "prem/word.hpp"

namespace prem {

// Folded core graph of a finitely generated subgroup of F_d.  Edges carry a
// generator label and a direction; folded means no vertex has two outgoing or
// two incoming edges with the same label, so tracing a reduced word is
// deterministic.
class SubgroupGraph {
public:
  // Stallings folding of the wedge of loops spelling the generators.
  static SubgroupGraph fold(const std::vector<FreeWord>& generators, int rank);

  int rank() const { return rank_; }
  int base() const { return base_; }
  std::size_t vertex_count() const { return fwd_.size(); }
  bool folded() const { return true; }
  const std::vector<FreeWord>& generators() const { return generators_; }

  bool contains(const FreeWord& w) const;

  // All reduced words of length <= max_len readable as loops at the base.
  std::vector<FreeWord> loops_up_to(int max_len) const;

  friend bool double_coset_equal(const SubgroupGraph& H, const FreeWord& g,
                                 const FreeWord& g_prime);

private:
  SubgroupGraph() = default;

  // -1 when absent; fwd_[v][i-1] is the head of v --i-->, bwd_[v][i-1] the
  // tail of --i--> v.
  int step(int vertex, int letter) const;

  int rank_ = 1;
  int base_ = 0;
  std::vector<std::vector<int>> fwd_;
  std::vector<std::vector<int>> bwd_;
  std::vector<FreeWord> generators_;
};

bool subgroup_contains(const SubgroupGraph& H, const FreeWord& w);

// Whether g' lies in the double coset H g H, decided by searching for a
// common element of the cosets Hg and g'H in the product of the two folded
// graphs extended along g and g'^-1.
bool double_coset_equal(const SubgroupGraph& H, const FreeWord& g,
                        const FreeWord& g_prime);

}  // namespace prem
