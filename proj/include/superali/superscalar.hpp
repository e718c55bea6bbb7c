#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superali/errors.hpp"
#include "superali/generators.hpp"
#include "superali/monomial.hpp"
#include "superali/rat.hpp"

namespace superali {

/// Element of a free supercommutative algebra over exact rationals.
///
/// Invariants: terms sorted by canonical monomial order, no zero coefficients,
/// every odd generator appears at most once per monomial. The empty term list
/// is the unique representation of zero. Values are immutable after
/// construction; all operations are pure.
class SuperScalar {
public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  SuperScalar() = default;

  explicit SuperScalar(const Rational& c, const GeneratorTable* tab = nullptr) : tab_(tab) {
    if (!rat_is_zero(c)) terms_.push_back(Term{Monomial::one(), c});
  }

  explicit SuperScalar(long c, const GeneratorTable* tab = nullptr)
      : SuperScalar(Rational(c), tab) {}

  static SuperScalar generator(const GeneratorTable& tab, GenId g) {
    SuperScalar s;
    s.tab_ = &tab;
    s.terms_.push_back(Term{Monomial::generator(g), Rational(1)});
    return s;
  }

  static SuperScalar from_terms(const GeneratorTable& tab, std::vector<Term> terms) {
    SuperScalar s;
    s.tab_ = &tab;
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    for (auto& t : terms) {
      if (rat_is_zero(t.coeff)) continue;
      if (!s.terms_.empty() && s.terms_.back().mono == t.mono) {
        s.terms_.back().coeff += t.coeff;
        if (rat_is_zero(s.terms_.back().coeff)) s.terms_.pop_back();
      } else {
        s.terms_.push_back(std::move(t));
      }
    }
    return s;
  }

  const GeneratorTable* table() const { return tab_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Rational constant_term() const {
    if (!terms_.empty() && terms_[0].mono.is_one()) return terms_[0].coeff;
    return Rational(0);
  }

  Rational coefficient_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.mono < k; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
  }

  /// Parity when homogeneous; nullopt for mixed. Zero counts as even.
  std::optional<Parity> parity() const {
    if (terms_.empty()) return Parity::even;
    if (!tab_) return Parity::even;
    Parity p = terms_[0].mono.parity(*tab_);
    for (const Term& t : terms_)
      if (t.mono.parity(*tab_) != p) return std::nullopt;
    return p;
  }

  friend SuperScalar operator-(const SuperScalar& a) {
    SuperScalar r = a;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend SuperScalar operator+(const SuperScalar& a, const SuperScalar& b) {
    const GeneratorTable* tab = merge_tables(a, b);
    SuperScalar r;
    r.tab_ = tab;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t ia = 0, ib = 0;
    while (ia < a.terms_.size() || ib < b.terms_.size()) {
      int c;
      if (ia == a.terms_.size()) c = 1;
      else if (ib == b.terms_.size()) c = -1;
      else c = Monomial::compare(a.terms_[ia].mono, b.terms_[ib].mono);
      if (c < 0) r.terms_.push_back(a.terms_[ia++]);
      else if (c > 0) r.terms_.push_back(b.terms_[ib++]);
      else {
        Rational s = a.terms_[ia].coeff + b.terms_[ib].coeff;
        if (!rat_is_zero(s)) r.terms_.push_back(Term{a.terms_[ia].mono, std::move(s)});
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  friend SuperScalar operator-(const SuperScalar& a, const SuperScalar& b) { return a + (-b); }

  friend SuperScalar operator*(const SuperScalar& a, const Rational& c) {
    if (rat_is_zero(c)) return SuperScalar(Rational(0), a.tab_);
    SuperScalar r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  friend SuperScalar operator*(const Rational& c, const SuperScalar& a) { return a * c; }

  friend SuperScalar operator*(const SuperScalar& a, const SuperScalar& b) {
    const GeneratorTable* tab = merge_tables(a, b);
    if (a.is_zero() || b.is_zero()) return SuperScalar(Rational(0), tab);
    if (!tab) {
      // both rational constants
      return SuperScalar(a.terms_[0].coeff * b.terms_[0].coeff, nullptr);
    }
    // k-way merge of streams (big * small_term); multiplying a sorted term
    // list by one fixed monomial preserves canonical order.
    const SuperScalar& big = a.terms_.size() >= b.terms_.size() ? a : b;
    const SuperScalar& small = a.terms_.size() >= b.terms_.size() ? b : a;
    bool big_left = &big == &a;
    struct Stream {
      std::size_t small_idx;
      std::size_t big_idx;
      Monomial key;
      Rational coeff;
    };
    std::vector<Stream> heap;
    heap.reserve(small.terms_.size());
    auto advance = [&](std::size_t si, std::size_t from) -> std::optional<Stream> {
      const Term& ts = small.terms_[si];
      for (std::size_t bi = from; bi < big.terms_.size(); ++bi) {
        const Term& tb = big.terms_[bi];
        auto prod = big_left ? Monomial::mul(tb.mono, ts.mono, *tab)
                             : Monomial::mul(ts.mono, tb.mono, *tab);
        if (!prod) continue;
        Rational c = tb.coeff * ts.coeff;
        if (prod->second < 0) c = -c;
        return Stream{si, bi, std::move(prod->first), std::move(c)};
      }
      return std::nullopt;
    };
    auto heap_less = [](const Stream& x, const Stream& y) {
      return Monomial::compare(x.key, y.key) > 0;  // min-heap
    };
    for (std::size_t si = 0; si < small.terms_.size(); ++si)
      if (auto s = advance(si, 0)) {
        heap.push_back(std::move(*s));
        std::push_heap(heap.begin(), heap.end(), heap_less);
      }
    SuperScalar r;
    r.tab_ = tab;
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), heap_less);
      Stream top = std::move(heap.back());
      heap.pop_back();
      if (!r.terms_.empty() && r.terms_.back().mono == top.key) {
        r.terms_.back().coeff += top.coeff;
        if (rat_is_zero(r.terms_.back().coeff)) r.terms_.pop_back();
      } else {
        r.terms_.push_back(Term{std::move(top.key), std::move(top.coeff)});
      }
      if (auto s = advance(top.small_idx, top.big_idx + 1)) {
        heap.push_back(std::move(*s));
        std::push_heap(heap.begin(), heap.end(), heap_less);
      }
    }
    return r;
  }

  SuperScalar pow(std::uint32_t k) const {
    SuperScalar r(Rational(1), tab_);
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const SuperScalar& a, const SuperScalar& b) {
    if (a.tab_ && b.tab_ && a.tab_ != b.tab_)
      throw table_mismatch_error("comparing scalars over different generator tables");
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const SuperScalar& a, const SuperScalar& b) { return !(a == b); }

  /// d/dg. For odd g this is the left derivative: the sign is (-1)^(number of
  /// odd factors preceding g in the monomial).
  SuperScalar derivative(GenId g) const {
    SuperScalar r;
    r.tab_ = tab_;
    if (!tab_) return r;
    bool odd = is_odd(tab_->parity(g));
    for (const Term& t : terms_) {
      if (odd) {
        int before = 0;
        bool found = false;
        Monomial m;
        for (std::uint32_t i = 0; i < t.mono.factor_count(); ++i) {
          GenId h = t.mono.factor_gen(i);
          if (h == g) {
            found = true;
            continue;
          }
          if (!found && is_odd(tab_->parity(h))) ++before;
          m.append_factor(h, t.mono.factor_exp(i));
        }
        if (!found) continue;
        Rational c = (before & 1) ? -t.coeff : t.coeff;
        r.terms_.push_back(Term{std::move(m), std::move(c)});
      } else {
        std::uint32_t e = t.mono.exponent_of(g);
        if (!e) continue;
        Monomial m;
        for (std::uint32_t i = 0; i < t.mono.factor_count(); ++i) {
          GenId h = t.mono.factor_gen(i);
          std::uint32_t ex = t.mono.factor_exp(i);
          if (h == g) ex -= 1;
          m.append_factor(h, ex);
        }
        r.terms_.push_back(Term{std::move(m), t.coeff * e});
      }
    }
    return r;
  }

  /// Exact inverse of c + nil where c is a nonzero rational and every other
  /// term contains at least one odd generator (hence nil is nilpotent).
  SuperScalar invert_unipotent() const {
    Rational c = constant_term();
    if (rat_is_zero(c)) throw not_invertible_error("constant term is zero");
    if (tab_) {
      for (const Term& t : terms_)
        if (!t.mono.is_one() && t.mono.odd_factor_count(*tab_) == 0)
          throw precondition_error("non-constant purely even term is not nilpotent");
    }
    Rational cinv = Rational(1) / c;
    SuperScalar u = SuperScalar(Rational(1), tab_) - *this * cinv;  // nilpotent
    SuperScalar r(Rational(1), tab_);
    SuperScalar p = u;
    while (!p.is_zero()) {
      r = r + p;
      p = p * u;
    }
    return r * cinv;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      std::string cs = rat_string(t.coeff);
      std::string ms = tab_ ? t.mono.to_string(*tab_) : std::string("1");
      std::string piece;
      if (t.mono.is_one()) piece = cs;
      else if (cs == "1") piece = ms;
      else if (cs == "-1") piece = "-" + ms;
      else piece = cs + "*" + ms;
      if (i) s += " + ";
      s += piece;
    }
    return s;
  }

private:
  static const GeneratorTable* merge_tables(const SuperScalar& a, const SuperScalar& b) {
    if (a.tab_ && b.tab_ && a.tab_ != b.tab_)
      throw table_mismatch_error("scalars over different generator tables");
    return a.tab_ ? a.tab_ : b.tab_;
  }

  const GeneratorTable* tab_ = nullptr;
  std::vector<Term> terms_;
};

} // namespace superali
