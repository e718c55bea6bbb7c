#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "superali/matrix_algebras.hpp"
#include "superali/parallel.hpp"
#include "superali/perm.hpp"
#include "superali/prng.hpp"
#include "superali/supermatrix.hpp"

namespace superali {

/// Factorial cap on the permutation-sum path.
inline constexpr std::uint32_t naive_cap = 8;

/// Uniformly typed operators with their declared parities.
template <class Op>
struct OperatorTuple {
  std::vector<Op> ops;
  ParityVector parities;
};

template <class Op>
OperatorTuple<Op> make_tuple(std::vector<Op> ops, ParityVector parities) {
  if (ops.size() != parities.size())
    throw precondition_error("operator tuple: length mismatch");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    auto p = ops[i].parity();
    if (!p) throw parity_error("operator tuple: inhomogeneous operator");
    if (*p != parities[i] && !ops[i].is_zero())
      throw parity_error("operator tuple: parity does not match declaration");
  }
  return OperatorTuple<Op>{std::move(ops), std::move(parities)};
}

/// Signed sum over all |S_N| orderings of the composition, N <= 8.
/// Reduces to the classical alternating sum when every parity is even.
template <class Op>
Op antisymmetrize_naive(const OperatorTuple<Op>& t, SignRule rule = SignRule::envelope) {
  std::size_t k = t.ops.size();
  if (k == 0) throw precondition_error("empty operator tuple");
  if (k > naive_cap) throw precondition_error("naive antisymmetrizer capped at 8 factors");
  std::optional<Op> acc;
  for_each_permutation(k, [&](const Permutation& s) {
    Op prod = t.ops[s(k - 1)];
    for (std::size_t i = k - 1; i-- > 0;) prod = t.ops[s(i)] * prod;
    int sg = super_sign(s, t.parities, rule);
    if (sg < 0) {
      if (acc) *acc = *acc - prod;
      else acc = -prod;
    } else {
      if (acc) *acc = *acc + prod;
      else acc = prod;
    }
  });
  return *acc;
}

/// Shuffle product of antisymmetrizers on k+l-1 even operators: the inner
/// l-fold antisymmetrizer feeds the first slot of the outer k-fold one.
template <class Op>
Op star_product_eval(std::uint32_t k, std::uint32_t l, const OperatorTuple<Op>& t) {
  for (Parity p : t.parities)
    if (is_odd(p)) throw parity_error("star product is defined for even operators only");
  if (k < 1 || l < 1) throw precondition_error("star product needs k, l >= 1");
  std::size_t N = t.ops.size();
  if (N != k + l - 1) throw precondition_error("star product needs k+l-1 operators");
  std::optional<Op> acc;
  std::vector<std::uint32_t> sel(l);
  // enumerate ascending l-subsets
  for (std::uint32_t i = 0; i < l; ++i) sel[i] = i;
  for (;;) {
    std::vector<std::uint32_t> images(sel.begin(), sel.end());
    std::vector<bool> in_sel(N, false);
    for (auto s : sel) in_sel[s] = true;
    for (std::uint32_t i = 0; i < N; ++i)
      if (!in_sel[i]) images.push_back(i);
    Permutation sigma(images);
    int sg = classical_sign(sigma);

    OperatorTuple<Op> inner;
    for (auto s : sel) {
      inner.ops.push_back(t.ops[s]);
      inner.parities.push_back(Parity::even);
    }
    OperatorTuple<Op> outer;
    outer.ops.push_back(antisymmetrize_naive(inner));
    outer.parities.push_back(Parity::even);
    for (std::uint32_t i = 0; i < N; ++i)
      if (!in_sel[i]) {
        outer.ops.push_back(t.ops[i]);
        outer.parities.push_back(Parity::even);
      }
    Op term = antisymmetrize_naive(outer);
    if (sg < 0) {
      if (acc) *acc = *acc - term;
      else acc = -term;
    } else {
      if (acc) *acc = *acc + term;
      else acc = term;
    }

    // next subset
    std::uint32_t i = l;
    while (i-- > 0) {
      if (sel[i] + (l - i) < N) {
        ++sel[i];
        for (std::uint32_t j = i + 1; j < l; ++j) sel[j] = sel[j - 1] + 1;
        break;
      }
      if (i == 0) return *acc;
    }
    if (l == 0) return *acc;
  }
}

/// X^r for the generic element X of the algebra; X^r = 0 iff the r-fold
/// antisymmetrizer vanishes identically on the algebra.
struct GenericPower {
  std::unique_ptr<GeneratorTable> table;
  GenericElement elem;
  SuperMatrix power;
  std::uint32_t r = 0;
};

inline GenericPower antisymmetrize_generic(const MatrixAlgebraSpec& spec, std::uint32_t r) {
  if (r < 1) throw precondition_error("power must be at least 1");
  GenericPower gp;
  gp.table = std::make_unique<GeneratorTable>();
  gp.elem = generic_element(spec, *gp.table);
  gp.power = gp.elem.X.pow(r);
  gp.r = r;
  return gp;
}

/// Splits a matrix with polynomial entries into rational coefficient matrices
/// by theta monomial. Each coefficient carries parity p(P) + p(monomial).
inline std::map<Monomial, SuperMatrix> theta_coefficients(const SuperMatrix& P, Parity pP) {
  std::map<Monomial, SuperMatrix> out;
  const GeneratorTable* tab = P.table();
  std::uint32_t N = P.format().total();
  for (std::uint32_t i = 0; i < N; ++i)
    for (std::uint32_t j = 0; j < N; ++j)
      for (const auto& term : P.at(i, j).terms()) {
        auto it = out.find(term.mono);
        if (it == out.end()) {
          SuperMatrix C(P.format());
          C.declare_parity(tab ? parity_add(pP, term.mono.parity(*tab)) : pP);
          it = out.emplace(term.mono, std::move(C)).first;
        }
        it->second.at(i, j) = SuperScalar(term.coeff);
      }
  return out;
}

/// exp! multiplicity carried by repeated even theta factors.
inline Rational theta_multiplicity(const Monomial& m, const GeneratorTable& tab) {
  Rational f(1);
  for (std::uint32_t i = 0; i < m.factor_count(); ++i) {
    if (is_odd(tab.parity(m.factor_gen(i)))) continue;
    for (std::uint32_t e = 2; e <= m.factor_exp(i); ++e) f *= e;
  }
  return f;
}

enum class Closure { lands_in_spec, leaves_spec };

inline const char* closure_name(Closure c) {
  return c == Closure::lands_in_spec ? "lands-in-spec" : "leaves-spec";
}

/// Result of a spectrum scan of the antisymmetrizers on one algebra.
/// nonvanishing holds the k for which a_k is a nonzero operation *valued in
/// the algebra* (all theta coefficients of X^k pass the membership predicate);
/// closure records lands/leaves for every k with X^k != 0, so the raw
/// nonvanishing set is closure's key set.
struct SpanReport {
  MatrixAlgebraSpec spec;
  std::uint32_t kmax = 0;
  std::set<std::uint32_t> nonvanishing;
  std::map<std::uint32_t, Closure> closure;
  std::optional<std::uint32_t> minimal_identity;
};

inline SpanReport span_scan(const MatrixAlgebraSpec& spec, std::uint32_t kmax) {
  if (kmax < 2) throw precondition_error("span scan needs kmax >= 2");
  SpanReport rep{spec, kmax, {}, {}, std::nullopt};
  GeneratorTable tab;
  auto ge = generic_element(spec, tab);
  std::vector<SuperMatrix> powers;  // powers[i] = X^(i+2)
  SuperMatrix P = ge.X * ge.X;
  for (std::uint32_t k = 2; k <= kmax; ++k) {
    powers.push_back(P);
    if (k < kmax) P = P * ge.X;
  }
  std::vector<int> lands = parallel_map<int>(powers.size(), [&](std::size_t i) -> int {
    const SuperMatrix& Xk = powers[i];
    if (Xk.is_zero()) return -1;
    Parity pk = static_cast<Parity>((i + 2) & 1);
    for (const auto& [mono, C] : theta_coefficients(Xk, pk))
      if (!member(spec, C)) return 0;
    return 1;
  });
  for (std::uint32_t k = 2; k <= kmax; ++k) {
    int v = lands[k - 2];
    if (v < 0) {
      if (!rep.minimal_identity) rep.minimal_identity = k;
      continue;
    }
    rep.closure.emplace(k, v ? Closure::lands_in_spec : Closure::leaves_spec);
    if (v) rep.nonvanishing.insert(k);
  }
  return rep;
}

/// Compares the theta-coefficient extraction of X^r against the naive
/// permutation sum on basis tuples; exact equality including the exp!
/// multiplicity of repeated odd basis elements. samples = 0 runs every
/// admissible non-decreasing tuple.
inline bool oracle_equivalence_check(const MatrixAlgebraSpec& spec, std::uint32_t r,
                                     std::uint64_t samples, std::uint64_t seed) {
  if (r > naive_cap) throw precondition_error("oracle path capped at r <= 8");
  GeneratorTable tab;
  auto ge = generic_element(spec, tab);
  SuperMatrix Xr = ge.X.pow(r);
  std::size_t nb = ge.basis_elements.size();

  auto check_tuple = [&](const std::vector<std::uint32_t>& tup) -> bool {
    OperatorTuple<SuperMatrix> t;
    Monomial mono;
    std::uint32_t i = 0;
    while (i < tup.size()) {
      std::uint32_t j = i;
      while (j < tup.size() && tup[j] == tup[i]) ++j;
      mono.append_factor(ge.thetas[tup[i]], j - i);
      i = j;
    }
    for (auto b : tup) {
      t.ops.push_back(ge.basis_elements[b]);
      t.parities.push_back(*ge.basis_elements[b].declared_parity());
    }
    SuperMatrix naive = antisymmetrize_naive(t);
    Rational mult = theta_multiplicity(mono, tab);
    std::uint32_t N = Xr.format().total();
    for (std::uint32_t a = 0; a < N; ++a)
      for (std::uint32_t b = 0; b < N; ++b) {
        Rational coeff = Xr.at(a, b).coefficient_of(mono);
        if (naive.at(a, b).constant_term() != mult * coeff) return false;
      }
    return true;
  };

  auto admissible = [&](const std::vector<std::uint32_t>& tup) {
    for (std::size_t i = 0; i + 1 < tup.size(); ++i)
      if (tup[i] == tup[i + 1] &&
          *ge.basis_elements[tup[i]].declared_parity() == Parity::even)
        return false;
    return true;
  };

  if (samples == 0) {
    // exhaustive over non-decreasing tuples
    std::vector<std::uint32_t> tup(r, 0);
    for (;;) {
      if (admissible(tup) && !check_tuple(tup)) return false;
      std::uint32_t i = r;
      while (i-- > 0) {
        if (tup[i] + 1 < nb) {
          ++tup[i];
          for (std::uint32_t j = i + 1; j < r; ++j) tup[j] = tup[i];
          break;
        }
        if (i == 0) return true;
      }
    }
  }
  SplitMix64 rng(seed);
  std::uint64_t done = 0;
  for (std::uint64_t attempts = 0; done < samples && attempts < samples * 64 + 64; ++attempts) {
    std::vector<std::uint32_t> tup;
    for (std::uint32_t i = 0; i < r; ++i)
      tup.push_back(static_cast<std::uint32_t>(rng.below(nb)));
    std::sort(tup.begin(), tup.end());
    if (!admissible(tup)) continue;  // collision at an even basis element
    if (!check_tuple(tup)) return false;
    ++done;
  }
  return true;
}

} // namespace superali
