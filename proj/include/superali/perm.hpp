#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "superali/errors.hpp"
#include "superali/generators.hpp"

namespace superali {

/// Permutation of {1..k}, stored 0-based. Composition follows
/// (s1 o s2)(i) = s1(s2(i)).
class Permutation {
public:
  explicit Permutation(std::vector<std::uint32_t> images_zero_based)
      : img_(std::move(images_zero_based)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw precondition_error("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t k) {
    std::vector<std::uint32_t> v(k);
    std::iota(v.begin(), v.end(), 0u);
    return Permutation(std::move(v));
  }

  static Permutation from_one_based(const std::vector<std::uint32_t>& images) {
    std::vector<std::uint32_t> v;
    v.reserve(images.size());
    for (auto x : images) {
      if (x == 0) throw precondition_error("one-based image contains 0");
      v.push_back(x - 1);
    }
    return Permutation(std::move(v));
  }

  std::size_t size() const { return img_.size(); }
  std::uint32_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  friend Permutation compose(const Permutation& s1, const Permutation& s2) {
    if (s1.size() != s2.size()) throw precondition_error("composing permutations of different size");
    std::vector<std::uint32_t> v(s1.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s1.img_[s2.img_[i]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(v));
  }

private:
  std::vector<std::uint32_t> img_;
};

using ParityVector = std::vector<Parity>;

/// Two inequivalent readings of the sign of a permutation acting on factors
/// of the given parities. They agree whenever all parities are equal and
/// differ on mixed-parity inputs (e.g. a transposition with P = (even, odd)
/// gets +1 under envelope and -1 under odd_induced).
enum class SignRule {
  /// Normative: the sign produced by reordering supercommutative elements of
  /// parities p_i + 1 ("Grassmann envelope"). This is the sign that powers of
  /// a generic element compute, hence the default everywhere.
  envelope,
  /// sgn(s) times the sgn of the permutation induced on the odd slots;
  /// equivalently the reordering sign of super exterior powers.
  odd_induced,
};

inline int classical_sign(const Permutation& s) {
  int r = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s(i) > s(j)) r = -r;
  return r;
}

inline int super_sign(const Permutation& s, const ParityVector& P,
                      SignRule rule = SignRule::envelope) {
  if (s.size() != P.size()) throw precondition_error("super_sign: length mismatch");
  int r = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s(i) <= s(j)) continue;
      int pa = static_cast<int>(P[s(i)]);
      int pb = static_cast<int>(P[s(j)]);
      int e = rule == SignRule::envelope ? (pa + 1) * (pb + 1) : 1 + pa * pb;
      if (e & 1) r = -r;
    }
  }
  return r;
}

/// s(P) = (p_{s(1)}, ..., p_{s(k)}).
inline ParityVector permute(const Permutation& s, const ParityVector& P) {
  ParityVector r(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) r[i] = P[s(i)];
  return r;
}

/// Calls fn(perm) for every permutation of {1..k} in lexicographic order.
template <class Fn>
void for_each_permutation(std::size_t k, Fn&& fn) {
  std::vector<std::uint32_t> v(k);
  std::iota(v.begin(), v.end(), 0u);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace superali
