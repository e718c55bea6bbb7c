#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "superali/errors.hpp"
#include "superali/generators.hpp"
#include "superali/small_vec.hpp"

namespace superali {

/// Monomial in a free supercommutative algebra: even generators with positive
/// exponents and a strictly increasing set of odd generators (exponent 1).
/// Factors are stored sorted by generator id; canonical order throughout is
/// graded, then position-lexicographic by id.
class Monomial {
public:
  Monomial() = default;

  static Monomial one() { return {}; }

  static Monomial generator(GenId g) {
    Monomial m;
    m.f_.push_back(pack(g, 1));
    return m;
  }

  static Monomial power(GenId g, std::uint32_t e) {
    Monomial m;
    if (e) m.f_.push_back(pack(g, e));
    return m;
  }

  /// Append a factor; g must exceed every id already present.
  void append_factor(GenId g, std::uint32_t e) {
    if (!f_.empty() && static_cast<GenId>(f_.back() >> 32) >= g)
      throw precondition_error("append_factor: ids must increase");
    if (e) f_.push_back(pack(g, e));
  }

  bool is_one() const { return f_.empty(); }

  std::uint32_t factor_count() const { return f_.size(); }
  GenId factor_gen(std::uint32_t i) const { return static_cast<GenId>(f_[i] >> 32); }
  std::uint32_t factor_exp(std::uint32_t i) const { return static_cast<std::uint32_t>(f_[i]); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto w : f_) d += static_cast<std::uint32_t>(w);
    return d;
  }

  std::uint32_t exponent_of(GenId g) const {
    for (auto w : f_)
      if (static_cast<GenId>(w >> 32) == g) return static_cast<std::uint32_t>(w);
    return 0;
  }

  Parity parity(const GeneratorTable& tab) const {
    int p = 0;
    for (auto w : f_)
      if (is_odd(tab.parity(static_cast<GenId>(w >> 32)))) p ^= 1;
    return static_cast<Parity>(p);
  }

  std::uint32_t odd_factor_count(const GeneratorTable& tab) const {
    std::uint32_t c = 0;
    for (auto w : f_)
      if (is_odd(tab.parity(static_cast<GenId>(w >> 32)))) ++c;
    return c;
  }

  /// Product. Returns the sign from reordering odd factors, or nullopt when an
  /// odd generator repeats (square of an odd generator is zero).
  static std::optional<std::pair<Monomial, int>>
  mul(const Monomial& a, const Monomial& b, const GeneratorTable& tab) {
    Monomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    std::uint32_t ia = 0, ib = 0;
    // odd factors of a not yet consumed
    std::uint32_t odd_left = a.odd_factor_count(tab);
    int sign = 1;
    while (ia < a.f_.size() || ib < b.f_.size()) {
      std::uint64_t ga = ia < a.f_.size() ? (a.f_[ia] >> 32) : UINT64_MAX;
      std::uint64_t gb = ib < b.f_.size() ? (b.f_[ib] >> 32) : UINT64_MAX;
      if (ga < gb) {
        if (is_odd(tab.parity(static_cast<GenId>(ga)))) --odd_left;
        r.f_.push_back(a.f_[ia++]);
      } else if (gb < ga) {
        if (is_odd(tab.parity(static_cast<GenId>(gb))) && (odd_left & 1)) sign = -sign;
        r.f_.push_back(b.f_[ib++]);
      } else {
        if (is_odd(tab.parity(static_cast<GenId>(ga)))) return std::nullopt;
        std::uint64_t e = static_cast<std::uint32_t>(a.f_[ia]) +
                          static_cast<std::uint64_t>(static_cast<std::uint32_t>(b.f_[ib]));
        r.f_.push_back((ga << 32) | e);
        ++ia;
        ++ib;
      }
    }
    return std::make_pair(std::move(r), sign);
  }

  /// Canonical order: graded, then lexicographic scanning ids upward with the
  /// larger exponent at the first difference ranking higher.
  static int compare(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::uint32_t ia = 0, ib = 0;
    while (ia < a.f_.size() || ib < b.f_.size()) {
      std::uint64_t ga = ia < a.f_.size() ? (a.f_[ia] >> 32) : UINT64_MAX;
      std::uint64_t gb = ib < b.f_.size() ? (b.f_[ib] >> 32) : UINT64_MAX;
      if (ga < gb) return 1;  // a has positive exponent first
      if (gb < ga) return -1;
      std::uint32_t ea = static_cast<std::uint32_t>(a.f_[ia]);
      std::uint32_t eb = static_cast<std::uint32_t>(b.f_[ib]);
      if (ea != eb) return ea > eb ? 1 : -1;
      ++ia;
      ++ib;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.f_ == b.f_); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : f_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

  std::string to_string(const GeneratorTable& tab) const {
    if (is_one()) return "1";
    std::string s;
    for (std::uint32_t i = 0; i < f_.size(); ++i) {
      if (i) s += "*";
      s += tab.display_name(factor_gen(i));
      if (factor_exp(i) > 1) s += "^" + std::to_string(factor_exp(i));
    }
    return s;
  }

private:
  static std::uint64_t pack(GenId g, std::uint32_t e) {
    return (static_cast<std::uint64_t>(g) << 32) | e;
  }

  SmallVec<std::uint64_t, 8> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace superali
