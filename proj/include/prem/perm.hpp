#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace prem {

// Permutation of {0..d-1}.  Products are diagrammatic: (p.then(q))(i) = q(p(i)).
class Permutation {
public:
  explicit Permutation(int degree) : images_(degree) {
    if (degree < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
    std::iota(images_.begin(), images_.end(), 0);
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<char> hit(images.size(), 0);
    for (int v : images) {
      if (v < 0 || v >= static_cast<int>(images.size()) || hit[v])
        throw std::invalid_argument("Permutation: not a bijection");
      hit[v] = 1;
    }
    p.images_ = std::move(images);
    return p;
  }

  static Permutation transposition(int degree, int a, int b) {
    Permutation p(degree);
    if (a < 0 || b < 0 || a >= degree || b >= degree)
      throw std::out_of_range("Permutation: transposition out of range");
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation then(const Permutation& q) const {
    if (degree() != q.degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.images_[i] = q.images_[images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
    return r;
  }

  std::vector<int> cycle_lengths() const {
    std::vector<int> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      out.push_back(len);
    }
    return out;
  }

  long long order() const {
    long long ord = 1;
    for (int len : cycle_lengths()) ord = std::lcm<long long>(ord, len);
    return ord;
  }

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }

private:
  std::vector<int> images_;
};

}  // namespace prem
