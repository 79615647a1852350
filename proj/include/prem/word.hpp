#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prem {

// Freely reduced word in the free group F_d.  Letters are nonzero integers:
// +i stands for the generator x_i, -i for its inverse, 1 <= i <= rank.
class FreeWord {
public:
  FreeWord() : rank_(1) {}

  FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("FreeWord: rank must be >= 1");
    letters_.reserve(letters.size());
    for (int a : letters) push(a);
  }

  static FreeWord identity(int rank) { return FreeWord(rank, {}); }

  static FreeWord generator(int rank, int index, int sign = +1) {
    if (index < 1 || index > rank)
      throw std::out_of_range("FreeWord: generator index out of range");
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("FreeWord: sign must be +1 or -1");
    return FreeWord(rank, {sign * index});
  }

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord operator*(const FreeWord& rhs) const {
    require_same_rank(rhs);
    FreeWord out;
    out.rank_ = rank_;
    out.letters_ = letters_;
    out.letters_.reserve(letters_.size() + rhs.letters_.size());
    for (int a : rhs.letters_) out.push(a);
    return out;
  }

  FreeWord inverse() const {
    FreeWord out;
    out.rank_ = rank_;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      out.letters_.push_back(-*it);
    return out;
  }

  // w * this * w^-1
  FreeWord conjugated_by(const FreeWord& w) const {
    return w * (*this) * w.inverse();
  }

  // u v u^-1 v^-1
  static FreeWord commutator(const FreeWord& u, const FreeWord& v) {
    return u * v * u.inverse() * v.inverse();
  }

  bool operator==(const FreeWord& rhs) const {
    return rank_ == rhs.rank_ && letters_ == rhs.letters_;
  }
  bool operator!=(const FreeWord& rhs) const { return !(*this == rhs); }

  // shortlex: by length first, then letter sequence with x_1 < x_1^-1 < x_2 < ...
  bool shortlex_less(const FreeWord& rhs) const {
    if (letters_.size() != rhs.letters_.size())
      return letters_.size() < rhs.letters_.size();
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      int a = letter_key(letters_[k]), b = letter_key(rhs.letters_[k]);
      if (a != b) return a < b;
    }
    return false;
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int a : letters_) {
      if (!s.empty()) s += '.';
      s += 'x' + std::to_string(a > 0 ? a : -a);
      if (a < 0) s += '\'';
    }
    return s;
  }

private:
  void require_same_rank(const FreeWord& rhs) const {
    if (rank_ != rhs.rank_)
      throw std::invalid_argument("FreeWord: rank mismatch");
  }

  void push(int a) {
    int i = a > 0 ? a : -a;
    if (i < 1 || i > rank_)
      throw std::out_of_range("FreeWord: letter index out of range");
    if (!letters_.empty() && letters_.back() == -a)
      letters_.pop_back();
    else
      letters_.push_back(a);
  }

  static int letter_key(int a) { return a > 0 ? 2 * a - 2 : -2 * a - 1; }

  int rank_;
  std::vector<int> letters_;
};

// Free reduction of a raw letter sequence; rejects indices outside 1..rank.
inline FreeWord reduce(const std::vector<int>& letters, int rank) {
  return FreeWord(rank, letters);
}

}  // namespace prem
