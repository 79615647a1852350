#include "prem/tower.hpp"

namespace prem {

LevelImage level_image(const ConjugacyAutomorphism& a, int level) {
  if (level < 2) throw std::invalid_argument("level_image: level must be >= 2");
  std::vector<FreeWord> words;
  words.reserve(a.rank());
  for (int i = 1; i <= a.rank(); ++i) words.push_back(a.image_of_generator(i));
  return LevelImage{a.rank(), level, magnus_expand_batch(words, level)};
}

LevelImage level_identity(int rank, int level) {
  if (level < 2) throw std::invalid_argument("level_identity: level must be >= 2");
  std::vector<TruncatedSeries> images;
  images.reserve(rank);
  for (int i = 1; i <= rank; ++i)
    images.push_back(TruncatedSeries::generator(rank, level, i, +1));
  return LevelImage{rank, level, std::move(images)};
}

bool level_is_identity(const LevelImage& p) {
  return p == level_identity(p.rank, p.level);
}

bool tower_equal(const LevelImage& p, const LevelImage& q) {
  if (p.rank != q.rank) throw std::invalid_argument("tower_equal: rank mismatch");
  if (p.level != q.level)
    throw std::invalid_argument("tower_equal: level mismatch");
  return p.images == q.images;
}

LevelImage level_compose(const LevelImage& p, const LevelImage& q) {
  if (p.rank != q.rank || p.level != q.level)
    throw std::invalid_argument("level_compose: tower mismatch");
  std::vector<TruncatedSeries> images;
  images.reserve(p.images.size());
  for (const auto& s : p.images) images.push_back(s.substituted(q.images));
  return LevelImage{p.rank, p.level, std::move(images)};
}

KernelDegree kernel_degree(const ConjugacyAutomorphism& a, int cap) {
  if (cap < 2) throw std::invalid_argument("kernel_degree: cap must be >= 2");
  for (int m = 2; m <= cap; ++m)
    if (!level_is_identity(level_image(a, m)))
      return KernelDegree{KernelDegree::Finite, m};
  return KernelDegree{KernelDegree::AtLeastCap, cap};
}

PremVerdict prem_verdict(long long torsion_order, const Permutation& monodromy) {
  if (torsion_order < 2)
    throw std::invalid_argument(
        "prem_verdict: torsion order must be >= 2 (a trivial element carries "
        "no obstruction)");
  const long long order = monodromy.order();
  int witness = 0;
  for (int q : {2, 3, 5})
    if (order % q == 0) {
      witness = q;
      break;
    }
  return PremVerdict{witness ? PremVerdict::Not2Prem : PremVerdict::NoConclusion,
                     monodromy, order, witness,
                     torsion_order % order == 0};
}

}  // namespace prem
