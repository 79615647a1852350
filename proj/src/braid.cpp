#include "prem/braid.hpp"

#include <algorithm>

#include "prem/reduced.hpp"

namespace prem {

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
  for (int a : letters) {
    const int i = a > 0 ? a : -a;
    if (i < 1 || i >= strands)
      throw std::out_of_range("BraidWord: generator index out of range");
  }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands != rhs.strands)
    throw std::invalid_argument("BraidWord: strand count mismatch");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands = strands;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord BraidWord::commutator(const BraidWord& a, const BraidWord& b) {
  return a * b * a.inverse() * b.inverse();
}

ConjugacyAutomorphism::ConjugacyAutomorphism(int rank, Permutation perm,
                                             std::vector<FreeWord> conjugators)
    : rank_(rank), perm_(std::move(perm)), conjugators_(std::move(conjugators)) {
  if (rank_ < 1)
    throw std::invalid_argument("ConjugacyAutomorphism: rank must be >= 1");
  if (perm_.degree() != rank_ ||
      static_cast<int>(conjugators_.size()) != rank_)
    throw std::invalid_argument("ConjugacyAutomorphism: size mismatch");
  for (const auto& w : conjugators_)
    if (w.rank() != rank_)
      throw std::invalid_argument("ConjugacyAutomorphism: conjugator rank mismatch");
  // Construction invariant: the product x_1...x_d is fixed.
  std::vector<int> lhs, rhs;
  for (int i = 1; i <= rank_; ++i) {
    const auto img = image_of_generator(i).letters();
    lhs.insert(lhs.end(), img.begin(), img.end());
    rhs.push_back(i);
  }
  if (FreeWord(rank_, lhs) != FreeWord(rank_, rhs))
    throw std::invalid_argument(
        "ConjugacyAutomorphism: images do not fix the product of generators");
}

ConjugacyAutomorphism ConjugacyAutomorphism::identity(int rank) {
  return ConjugacyAutomorphism(
      rank, Permutation(rank),
      std::vector<FreeWord>(rank, FreeWord::identity(rank)));
}

FreeWord ConjugacyAutomorphism::image_of_generator(int i) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("ConjugacyAutomorphism: generator index out of range");
  const int target = perm_.apply(i - 1) + 1;
  return FreeWord::generator(rank_, target).conjugated_by(conjugators_[i - 1]);
}

FreeWord ConjugacyAutomorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("ConjugacyAutomorphism: word rank mismatch");
  std::vector<int> letters;
  for (int a : w.letters()) {
    const FreeWord img = image_of_generator(a > 0 ? a : -a);
    if (a > 0) {
      letters.insert(letters.end(), img.letters().begin(), img.letters().end());
    } else {
      const FreeWord inv = img.inverse();
      letters.insert(letters.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return FreeWord(rank_, letters);
}

ConjugacyAutomorphism ConjugacyAutomorphism::then(
    const ConjugacyAutomorphism& g) const {
  if (rank_ != g.rank_)
    throw std::invalid_argument("ConjugacyAutomorphism: rank mismatch");
  std::vector<FreeWord> conj;
  conj.reserve(rank_);
  for (int i = 0; i < rank_; ++i)
    conj.push_back(g.apply(conjugators_[i]) * g.conjugators_[perm_.apply(i)]);
  return ConjugacyAutomorphism(rank_, perm_.then(g.perm_), std::move(conj));
}

bool ConjugacyAutomorphism::is_identity() const {
  if (!perm_.is_identity()) return false;
  for (int i = 1; i <= rank_; ++i)
    if (image_of_generator(i) != FreeWord::generator(rank_, i)) return false;
  return true;
}

bool ConjugacyAutomorphism::operator==(const ConjugacyAutomorphism& rhs) const {
  if (rank_ != rhs.rank_ || perm_ != rhs.perm_) return false;
  for (int i = 1; i <= rank_; ++i)
    if (image_of_generator(i) != rhs.image_of_generator(i)) return false;
  return true;
}

Permutation permutation_of(const BraidWord& b) {
  Permutation p(b.strands);
  for (int a : b.letters) {
    const int i = a > 0 ? a : -a;
    p = p.then(Permutation::transposition(b.strands, i - 1, i));
  }
  return p;
}

ConjugacyAutomorphism artin_generator(int strands, int index, int sign) {
  if (index < 1 || index >= strands)
    throw std::out_of_range("artin_generator: index out of range");
  std::vector<FreeWord> conj(strands, FreeWord::identity(strands));
  if (sign > 0) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    conj[index - 1] = FreeWord::generator(strands, index);
  } else {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    conj[index] = FreeWord::generator(strands, index + 1, -1);
  }
  return ConjugacyAutomorphism(
      strands, Permutation::transposition(strands, index - 1, index),
      std::move(conj));
}

ConjugacyAutomorphism artin_action(const BraidWord& b) {
  ConjugacyAutomorphism acc = ConjugacyAutomorphism::identity(b.strands);
  for (int a : b.letters)
    acc = acc.then(artin_generator(b.strands, a > 0 ? a : -a, a > 0 ? 1 : -1));
  return acc;
}

bool is_trivial_braid(const BraidWord& b) {
  return artin_action(b).is_identity();
}

std::vector<std::vector<long long>> linking_matrix(const BraidWord& b) {
  if (!permutation_of(b).is_identity())
    throw std::invalid_argument("linking_matrix: braid is not pure");
  const int d = b.strands;
  std::vector<std::vector<long long>> twice(d, std::vector<long long>(d, 0));
  std::vector<int> at(d);  // strand currently at each position
  for (int k = 0; k < d; ++k) at[k] = k;
  for (int a : b.letters) {
    const int i = (a > 0 ? a : -a) - 1;
    const int s = at[i], t = at[i + 1];
    twice[s][t] += a > 0 ? 1 : -1;
    twice[t][s] += a > 0 ? 1 : -1;
    std::swap(at[i], at[i + 1]);
  }
  for (auto& row : twice)
    for (auto& v : row) v /= 2;
  return twice;
}

bool hb_is_trivial(const BraidWord& b) {
  const ConjugacyAutomorphism a = artin_action(b);
  if (!a.permutation().is_identity()) return false;
  for (int i = 1; i <= b.strands; ++i) {
    if (reduced_expand(a.image_of_generator(i)) !=
        reduced_expand(FreeWord::generator(b.strands, i)))
      return false;
  }
  return true;
}

HumphriesCertificate humphries_certificate(const BraidWord& b) {
  Permutation p = permutation_of(b);
  const long long order = p.order();
  int witness = 0;
  for (int q : {2, 3, 5})
    if (order % q == 0) {
      witness = q;
      break;
    }
  return HumphriesCertificate{
      witness ? HumphriesCertificate::InfiniteOrder
              : HumphriesCertificate::NoConclusion,
      std::move(p), order, witness};
}

bool covering_lift_check(int genus, const std::vector<BraidWord>& images) {
  if (genus < 0) throw std::invalid_argument("covering_lift_check: genus < 0");
  if (static_cast<int>(images.size()) != 2 * genus)
    throw std::invalid_argument("covering_lift_check: need 2*genus braids");
  if (genus == 0) return true;
  const int d = images[0].strands;
  BraidWord acc(d, {});
  for (int k = 0; k < genus; ++k) {
    if (images[2 * k].strands != d || images[2 * k + 1].strands != d)
      throw std::invalid_argument("covering_lift_check: strand count mismatch");
    acc = acc * BraidWord::commutator(images[2 * k], images[2 * k + 1]);
  }
  return is_trivial_braid(acc);
}

}  // namespace prem
