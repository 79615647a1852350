#include "prem/theta.hpp"

#include <algorithm>
#include <random>

namespace prem {

namespace {

struct Move {
  enum Kind { DeleteSubgroupEntry, CancelPair } kind;
  std::size_t i, j;  // j unused for deletions
};

std::vector<Move> applicable_moves(const SubgroupGraph& H, bool covering,
                                   const std::vector<SignedPoint>& pts) {
  std::vector<Move> moves;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!covering && H.contains(pts[i].word))
      moves.push_back(Move{Move::DeleteSubgroupEntry, i, i});
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].sign == -pts[j].sign &&
          double_coset_equal(H, pts[i].word, pts[j].word))
        moves.push_back(Move{Move::CancelPair, i, j});
  return moves;
}

void apply_move(std::vector<SignedPoint>& pts, const Move& m) {
  if (m.kind == Move::DeleteSubgroupEntry) {
    pts.erase(pts.begin() + m.i);
  } else {
    pts.erase(pts.begin() + m.j);
    pts.erase(pts.begin() + m.i);
  }
}

}  // namespace

std::vector<SignedPoint> surviving_points(const DoubleCosetSum& s) {
  const SubgroupGraph H = s.subgroup();
  std::vector<SignedPoint> pts = s.points;
  for (;;) {
    const auto moves = applicable_moves(H, s.covering, pts);
    if (moves.empty()) return pts;
    apply_move(pts, moves.front());
  }
}

std::vector<SignedPoint> surviving_points_shuffled(const DoubleCosetSum& s,
                                                   unsigned seed) {
  const SubgroupGraph H = s.subgroup();
  std::mt19937 rng(seed);
  std::vector<SignedPoint> pts = s.points;
  for (;;) {
    const auto moves = applicable_moves(H, s.covering, pts);
    if (moves.empty()) return pts;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    apply_move(pts, moves[pick(rng)]);
  }
}

CanonicalSum canonicalize(const DoubleCosetSum& s, int representative_bound) {
  const SubgroupGraph H = s.subgroup();
  std::vector<SignedPoint> pts = surviving_points(s);

  const std::vector<FreeWord> hs = H.loops_up_to(representative_bound);
  for (auto& p : pts) {
    FreeWord best = p.word;
    for (const auto& h : hs)
      for (const auto& hp : hs) {
        const FreeWord cand = h * p.word * hp;
        if (cand.shortlex_less(best)) best = cand;
      }
    p.word = best;
  }
  std::sort(pts.begin(), pts.end(), [](const SignedPoint& a, const SignedPoint& b) {
    if (a.word != b.word) return a.word.shortlex_less(b.word);
    return a.sign > b.sign;
  });
  return CanonicalSum{std::move(pts), representative_bound};
}

bool is_zero(const DoubleCosetSum& s) { return surviving_points(s).empty(); }

bool same_signed_cosets(const SubgroupGraph& H,
                        const std::vector<SignedPoint>& a,
                        const std::vector<SignedPoint>& b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& pa : a) {
    bool matched = false;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k] || b[k].sign != pa.sign) continue;
      if (double_coset_equal(H, pa.word, b[k].word)) {
        used[k] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace prem
