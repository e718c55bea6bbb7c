#pragma once

#include <map>
#include <optional>
#include <string>

#include "superali/domain.hpp"
#include "superali/errors.hpp"
#include "superali/monomial.hpp"
#include "superali/superscalar.hpp"

namespace superali {

/// Superdifferential operator with polynomial coefficients, kept in normal
/// form: every coefficient stands left of every derivative. A term is
/// coeff * d^beta d_gamma, keyed by a monomial in the derivative symbols
/// (even exponents beta over the x's, the square-free set gamma over the odd
/// coordinates, listed ascending). Odd derivative symbols anticommute exactly
/// like odd generators, so the key reuses Monomial.
///
/// operator* is operator composition.
class DiffOp {
public:
  DiffOp() = default;
  explicit DiffOp(const SuperDomain& dom) : dom_(&dom) {}

  static DiffOp zero(const SuperDomain& dom) { return DiffOp(dom); }

  /// Order-0 operator "multiply by f".
  static DiffOp multiplication(const SuperDomain& dom, const SuperScalar& f) {
    DiffOp r(dom);
    r.add_term(Monomial::one(), f);
    return r;
  }

  /// d/d(coordinate g).
  static DiffOp partial(const SuperDomain& dom, GenId g) {
    if (!dom.is_coordinate(g)) throw precondition_error("partial: not a coordinate");
    DiffOp r(dom);
    r.add_term(Monomial::generator(g), dom.constant(rat(1)));
    return r;
  }

  const SuperDomain* domain() const { return dom_; }
  const std::map<Monomial, SuperScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& key, const SuperScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// max |beta| + |gamma| over the terms; -1 for the zero operator.
  int order() const {
    int o = -1;
    for (const auto& [k, c] : terms_) o = std::max<int>(o, static_cast<int>(k.total_degree()));
    return o;
  }

  int min_order() const {
    int o = -1;
    for (const auto& [k, c] : terms_) {
      int d = static_cast<int>(k.total_degree());
      if (o < 0 || d < o) o = d;
    }
    return o;
  }

  /// First-order with no multiplication part.
  bool is_vector_field() const { return !is_zero() && order() == 1 && min_order() == 1; }

  /// Coefficient of the derivative key (zero scalar if absent).
  SuperScalar coefficient(const Monomial& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? SuperScalar(Rational(0), &dom_->table()) : it->second;
  }

  /// Parity: p(coefficient) + number of odd derivative symbols, when
  /// homogeneous.
  std::optional<Parity> parity() const {
    std::optional<Parity> p;
    for (const auto& [k, c] : terms_) {
      auto pc = c.parity();
      if (!pc) return std::nullopt;
      Parity pt = parity_add(*pc, k.parity(dom_->table()));
      if (!p) p = pt;
      else if (*p != pt) return std::nullopt;
    }
    return p ? p : std::optional<Parity>(Parity::even);
  }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    check_domains(a, b);
    DiffOp r = a;
    if (!r.dom_) r.dom_ = b.dom_;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }

  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    check_domains(a, b);
    DiffOp r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }

  friend DiffOp operator-(const DiffOp& a) {
    DiffOp r = a;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend DiffOp operator*(const SuperScalar& f, const DiffOp& t) {
    DiffOp r(*t.dom_);
    for (const auto& [k, c] : t.terms_) r.add_term(k, f * c);
    return r;
  }

  friend DiffOp operator*(const Rational& f, const DiffOp& t) {
    DiffOp r(*t.dom_);
    for (const auto& [k, c] : t.terms_) r.add_term(k, c * f);
    return r;
  }

  /// Composition, normal-ordered via the super Leibniz rule.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    check_domains(a, b);
    const SuperDomain& dom = *(a.dom_ ? a.dom_ : b.dom_);
    DiffOp r(dom);
    for (const auto& [ka, ca] : a.terms_) {
      // push ka's derivative block across b, rightmost factor first
      DiffOp cur = b;
      for (std::uint32_t i = ka.factor_count(); i-- > 0;) {
        GenId g = ka.factor_gen(i);
        if (is_odd(dom.table().parity(g))) {
          cur = apply_odd(dom, g, cur);
        } else {
          for (std::uint32_t e = 0; e < ka.factor_exp(i); ++e) cur = apply_even(dom, g, cur);
        }
      }
      for (const auto& [k, c] : cur.terms_) r.add_term(k, ca * c);
    }
    return r;
  }

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  /// Evaluation on a polynomial.
  SuperScalar apply(const SuperScalar& f) const {
    SuperScalar acc(Rational(0), &dom_->table());
    for (const auto& [k, c] : terms_) {
      SuperScalar g = f;
      for (std::uint32_t i = k.factor_count(); i-- > 0;) {
        GenId d = k.factor_gen(i);
        for (std::uint32_t e = 0; e < k.factor_exp(i); ++e) g = g.derivative(d);
        if (g.is_zero()) break;
      }
      acc = acc + c * g;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.to_string() + ")";
      for (std::uint32_t i = 0; i < k.factor_count(); ++i) {
        s += "*d(" + dom_->table().display_name(k.factor_gen(i)) + ")";
        if (k.factor_exp(i) > 1) s += "^" + std::to_string(k.factor_exp(i));
      }
    }
    return s;
  }

private:
  static void check_domains(const DiffOp& a, const DiffOp& b) {
    if (a.dom_ && b.dom_ && a.dom_ != b.dom_)
      throw domain_mismatch_error("operators on different superdomains");
  }

  /// d_x o T for an even coordinate x.
  static DiffOp apply_even(const SuperDomain& dom, GenId x, const DiffOp& t) {
    DiffOp r(dom);
    Monomial dx = Monomial::generator(x);
    for (const auto& [k, c] : t.terms_) {
      r.add_term(k, c.derivative(x));
      auto prod = Monomial::mul(dx, k, dom.table());
      r.add_term(prod->first, c);  // even symbols never collide or sign
    }
    return r;
  }

  /// d_g o T for an odd coordinate g:
  ///   d_g o (c d^K) = (d_g c) d^K + (-1)^{p(c)} c (d_g o d^K).
  static DiffOp apply_odd(const SuperDomain& dom, GenId g, const DiffOp& t) {
    DiffOp r(dom);
    Monomial dg = Monomial::generator(g);
    for (const auto& [k, c] : t.terms_) {
      r.add_term(k, c.derivative(g));
      auto prod = Monomial::mul(dg, k, dom.table());
      if (!prod) continue;  // d_g^2 = 0
      // split c by parity of each monomial
      SuperScalar even_part(Rational(0), &dom.table()), odd_part(Rational(0), &dom.table());
      for (const auto& term : c.terms()) {
        SuperScalar one = SuperScalar::from_terms(dom.table(), {term});
        if (is_odd(term.mono.parity(dom.table()))) odd_part = odd_part + one;
        else even_part = even_part + one;
      }
      SuperScalar signed_c = even_part - odd_part;
      if (prod->second < 0) signed_c = -signed_c;
      r.add_term(prod->first, signed_c);
    }
    return r;
  }

  const SuperDomain* dom_ = nullptr;
  std::map<Monomial, SuperScalar> terms_;
};

/// X o Y - (-1)^{p(X)p(Y)} Y o X for homogeneous operators.
inline DiffOp commutator(const DiffOp& x, const DiffOp& y) {
  auto px = x.parity();
  auto py = y.parity();
  if (!px || !py) throw parity_error("commutator needs homogeneous operators");
  if (is_odd(*px) && is_odd(*py)) return x * y + y * x;
  return x * y - y * x;
}

} // namespace superali
