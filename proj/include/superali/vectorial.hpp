#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superali/antisym.hpp"
#include "superali/diffop.hpp"
#include "superali/linalg.hpp"
#include "superali/prng.hpp"

namespace superali {

enum class VectorialFamily { vect, svect, h };

inline const char* vectorial_family_name(VectorialFamily f) {
  switch (f) {
    case VectorialFamily::vect: return "vect";
    case VectorialFamily::svect: return "svect";
    case VectorialFamily::h: return "h";
  }
  return "?";
}

/// Vectorial Lie algebra descriptor. Text grammar: vect(n), svect(n), h(2n);
/// the degree cap d on polynomial coefficients travels separately.
struct VectorialSpec {
  VectorialFamily family;
  std::uint32_t coords = 1;  // number of even coordinates of the realization
  std::uint32_t degree = 2;  // coefficient degree cap d

  std::string to_string() const {
    return std::string(vectorial_family_name(family)) + "(" + std::to_string(coords) + ")";
  }

  static VectorialSpec parse(std::string_view text, std::uint32_t degree = 2) {
    auto fail = [&]() -> VectorialSpec {
      throw parse_error("bad vectorial spec '" + std::string(text) +
                        "'; grammar: vect(n), svect(n), h(2n)");
    };
    std::size_t lp = text.find('(');
    if (lp == std::string_view::npos || text.back() != ')') return fail();
    std::string name(text.substr(0, lp));
    std::string_view arg = text.substr(lp + 1, text.size() - lp - 2);
    std::uint32_t v = 0;
    if (arg.empty()) return fail();
    for (char c : arg) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    VectorialFamily fam;
    if (name == "vect") fam = VectorialFamily::vect;
    else if (name == "svect") fam = VectorialFamily::svect;
    else if (name == "h") fam = VectorialFamily::h;
    else return fail();
    if (v < 1) return fail();
    if (fam == VectorialFamily::h && v % 2 != 0) return fail();
    return VectorialSpec{fam, v, degree};
  }
};

/// Multi-indices alpha with |alpha| <= d over the even coordinates, as
/// monomials, graded order.
inline std::vector<Monomial> coordinate_monomials(const SuperDomain& dom, std::uint32_t max_deg,
                                                  std::uint32_t min_deg = 0) {
  std::vector<Monomial> out;
  std::uint32_t n = dom.even_count();
  std::vector<std::uint32_t> exp(n, 0);
  auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t left) -> void {
    if (i == n) {
      std::uint32_t deg = 0;
      for (auto e : exp) deg += e;
      if (deg < min_deg) return;
      Monomial m;
      for (std::uint32_t j = 0; j < n; ++j)
        if (exp[j]) m.append_factor(dom.even_coord(j), exp[j]);
      out.push_back(std::move(m));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exp[i] = e;
      self(self, i + 1, left - e);
    }
    exp[i] = 0;
  };
  rec(rec, 0, max_deg);
  std::sort(out.begin(), out.end());
  return out;
}

inline SuperScalar monomial_scalar(const SuperDomain& dom, const Monomial& m) {
  return SuperScalar::from_terms(dom.table(), {SuperScalar::Term{m, Rational(1)}});
}

/// Vector field sum_i coeffs[i] d_{x_i} (even coordinates).
inline DiffOp vector_field(const SuperDomain& dom, const std::vector<SuperScalar>& coeffs) {
  DiffOp X(dom);
  for (std::uint32_t i = 0; i < coeffs.size(); ++i)
    X.add_term(Monomial::generator(dom.even_coord(i)), coeffs[i]);
  return X;
}

/// Divergence sum_i d_{x_i} u_i + sum_j (-1)^{p(v_j)} d_{xi_j} v_j of a first
/// order operator with no multiplication part.
inline SuperScalar divergence(const DiffOp& X) {
  const SuperDomain& dom = *X.domain();
  SuperScalar acc(Rational(0), &dom.table());
  for (const auto& [key, c] : X.terms()) {
    if (key.total_degree() != 1)
      throw precondition_error("divergence is defined for vector fields");
    GenId g = key.factor_gen(0);
    if (is_odd(dom.table().parity(g))) {
      // (-1)^{p(f)} d_g f, split by monomial parity
      SuperScalar even_part(Rational(0), &dom.table()), odd_part(Rational(0), &dom.table());
      for (const auto& t : c.terms()) {
        SuperScalar one = SuperScalar::from_terms(dom.table(), {t});
        if (is_odd(t.mono.parity(dom.table()))) odd_part = odd_part + one;
        else even_part = even_part + one;
      }
      acc = acc + (even_part - odd_part).derivative(g);
    } else {
      acc = acc + c.derivative(g);
    }
  }
  return acc;
}

/// X(f) + f * lambda * Div(X): the weight-lambda density action.
inline SuperScalar lambda_density_action(const DiffOp& X, const SuperScalar& f,
                                         const Rational& lambda) {
  return X.apply(f) + (f * divergence(X)) * lambda;
}

/// Hamiltonian field of the generating function f on coordinates (p, q):
/// X_f = (d_p f) d_q - (d_q f) d_p.
inline DiffOp hamiltonian_field(const SuperDomain& dom, const SuperScalar& f) {
  if (dom.even_count() != 2 || dom.odd_count() != 0)
    throw precondition_error("hamiltonian fields live on two even coordinates (p, q)");
  GenId p = dom.even_coord(0), q = dom.even_coord(1);
  DiffOp X(dom);
  X.add_term(Monomial::generator(q), f.derivative(p));
  X.add_term(Monomial::generator(p), -f.derivative(q));
  return X;
}

/// {f, g} = X_f(g).
inline SuperScalar poisson_bracket(const SuperDomain& dom, const SuperScalar& f,
                                   const SuperScalar& g) {
  return hamiltonian_field(dom, f).apply(g);
}

/// The generic odd derivation D = sum_b eta_b * b over a basis of the
/// degree-capped coefficient fields of the family; eta_b fresh odd generators.
struct GenericDerivation {
  std::unique_ptr<SuperDomain> dom;
  DiffOp D;
  std::vector<GenId> etas;
  std::vector<DiffOp> basis_fields;  // rational-coefficient fields, one per eta
  VectorialSpec spec;
};

inline GenericDerivation generic_odd_derivation(const VectorialSpec& spec) {
  GenericDerivation gd;
  gd.spec = spec;
  gd.dom = std::make_unique<SuperDomain>(spec.coords, 0);
  SuperDomain& dom = *gd.dom;
  std::vector<DiffOp> fields;
  switch (spec.family) {
    case VectorialFamily::vect: {
      auto monos = coordinate_monomials(dom, spec.degree);
      for (std::uint32_t j = 0; j < dom.even_count(); ++j)
        for (const auto& m : monos) {
          DiffOp b(dom);
          b.add_term(Monomial::generator(dom.even_coord(j)), monomial_scalar(dom, m));
          fields.push_back(std::move(b));
        }
      break;
    }
    case VectorialFamily::svect: {
      // divergence-free rational combinations of x^alpha d_j, |alpha| <= d
      auto monos = coordinate_monomials(dom, spec.degree);
      std::vector<std::pair<std::uint32_t, Monomial>> slots;
      for (std::uint32_t j = 0; j < dom.even_count(); ++j)
        for (const auto& m : monos) slots.emplace_back(j, m);
      auto target = coordinate_monomials(dom, spec.degree ? spec.degree - 1 : 0);
      RatMatrix M = rat_matrix(target.size(), slots.size());
      for (std::size_t s = 0; s < slots.size(); ++s) {
        SuperScalar d = monomial_scalar(dom, slots[s].second)
                            .derivative(dom.even_coord(slots[s].first));
        for (std::size_t t = 0; t < target.size(); ++t)
          M[t][s] = d.coefficient_of(target[t]);
      }
      for (auto& v : nullspace(std::move(M), slots.size())) {
        DiffOp b(dom);
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (!rat_is_zero(v[s]))
            b.add_term(Monomial::generator(dom.even_coord(slots[s].first)),
                       monomial_scalar(dom, slots[s].second) * v[s]);
        fields.push_back(std::move(b));
      }
      break;
    }
    case VectorialFamily::h: {
      // X_f over generating monomials f, 1 <= deg f <= d+1
      if (dom.even_count() != 2)
        throw precondition_error("hamiltonian scans are implemented for h(2)");
      auto monos = coordinate_monomials(dom, spec.degree + 1, 1);
      for (const auto& m : monos)
        fields.push_back(hamiltonian_field(dom, monomial_scalar(dom, m)));
      break;
    }
  }
  gd.D = DiffOp(dom);
  int idx = 0;
  for (auto& b : fields) {
    GenId eta = dom.fresh("eta", {idx}, Parity::odd);
    gd.etas.push_back(eta);
    gd.D = gd.D + SuperScalar::generator(dom.table(), eta) * b;
    ++idx;
  }
  gd.basis_fields = std::move(fields);
  return gd;
}

enum class PowerClass { zero, commutator, higher_order };

inline const char* power_class_name(PowerClass c) {
  switch (c) {
    case PowerClass::zero: return "zero";
    case PowerClass::commutator: return "commutator";
    case PowerClass::higher_order: return "higher-order";
  }
  return "?";
}

struct CriticalScanItem {
  std::uint32_t N = 0;
  PowerClass classification = PowerClass::zero;
  int order = -1;
};

struct CriticalScanReport {
  VectorialSpec spec;
  std::uint32_t degree = 0;  // truncation degree of the statement
  std::vector<CriticalScanItem> items;
};

/// Classifies D^N for N in [nmin, nmax] at the spec's truncation degree:
/// zero, a vector field (N-commutator witness), or order >= 2.
inline CriticalScanReport critical_scan(const VectorialSpec& spec, std::uint32_t nmin,
                                        std::uint32_t nmax) {
  if (nmin < 2 || nmax < nmin) throw precondition_error("critical scan needs 2 <= nmin <= nmax");
  CriticalScanReport rep{spec, spec.degree, {}};
  auto gd = generic_odd_derivation(spec);
  DiffOp P = gd.D;
  for (std::uint32_t N = 2; N <= nmax; ++N) {
    P = gd.D * P;
    if (N < nmin) continue;
    CriticalScanItem item;
    item.N = N;
    item.order = P.order();
    if (P.is_zero()) item.classification = PowerClass::zero;
    else if (P.is_vector_field()) item.classification = PowerClass::commutator;
    else item.classification = PowerClass::higher_order;
    rep.items.push_back(item);
    if (P.is_zero()) {
      for (std::uint32_t M = N + 1; M <= nmax; ++M)
        rep.items.push_back(CriticalScanItem{M, PowerClass::zero, -1});
      break;
    }
  }
  return rep;
}

/// k abstract fields with independent even polynomial coefficients
/// c[i,j,alpha], plus one odd tag per field so that the k-fold antisymmetrizer
/// is the tag-monomial coefficient of (sum_i eta_i X_i)^k.
struct GenericFieldFamily {
  std::unique_ptr<SuperDomain> dom;
  std::vector<DiffOp> fields;
  std::vector<GenId> tags;
  std::uint32_t coords = 0, count = 0, degree = 0;

  DiffOp tagged_sum() const {
    DiffOp Y(*dom);
    for (std::size_t i = 0; i < fields.size(); ++i)
      Y = Y + SuperScalar::generator(dom->table(), tags[i]) * fields[i];
    return Y;
  }

  /// Coefficient of eta_1...eta_k in P: equals the classical antisymmetrizer
  /// of the fields when P = tagged_sum()^k.
  DiffOp untag(const DiffOp& P) const {
    Monomial full;
    for (GenId t : tags) full.append_factor(t, 1);
    DiffOp R(*dom);
    for (const auto& [key, c] : P.terms()) {
      SuperScalar kept(Rational(0), &dom->table());
      for (const auto& term : c.terms()) {
        // strip the tag block when every tag is present; tags are the only
        // odd generators here, so no sign is picked up
        Monomial rest;
        std::uint32_t seen = 0;
        for (std::uint32_t i = 0; i < term.mono.factor_count(); ++i) {
          GenId g = term.mono.factor_gen(i);
          bool tag = false;
          for (GenId t : tags)
            if (t == g) {
              tag = true;
              break;
            }
          if (tag) ++seen;
          else rest.append_factor(g, term.mono.factor_exp(i));
        }
        if (seen == tags.size())
          kept = kept + SuperScalar::from_terms(dom->table(),
                                                {SuperScalar::Term{rest, term.coeff}});
      }
      R.add_term(key, kept);
    }
    return R;
  }
};

inline GenericFieldFamily make_generic_field_family(std::uint32_t n, std::uint32_t k,
                                                    std::uint32_t degree) {
  GenericFieldFamily fam;
  fam.coords = n;
  fam.count = k;
  fam.degree = degree;
  fam.dom = std::make_unique<SuperDomain>(n, 0);
  SuperDomain& dom = *fam.dom;
  auto monos = coordinate_monomials(dom, degree);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<SuperScalar> coeffs;
    for (std::uint32_t j = 0; j < n; ++j) {
      SuperScalar u(Rational(0), &dom.table());
      int aidx = 0;
      for (const auto& m : monos) {
        GenId c = dom.fresh("c", {static_cast<int>(i + 1), static_cast<int>(j + 1), aidx},
                            Parity::even);
        u = u + SuperScalar::generator(dom.table(), c) * monomial_scalar(dom, m);
        ++aidx;
      }
      coeffs.push_back(std::move(u));
    }
    fam.fields.push_back(vector_field(dom, coeffs));
  }
  for (std::uint32_t i = 0; i < k; ++i)
    fam.tags.push_back(dom.fresh("tag", {static_cast<int>(i + 1)}, Parity::odd));
  return fam;
}

/// Coefficient of the ascending product of `block` (odd generators) in every
/// coefficient of P; even factors commute past the block, so no sign appears.
/// For P = D^k this extracts the k-fold antisymmetrizer of the basis fields
/// tagged by the block.
inline DiffOp odd_block_coefficient(const DiffOp& P, const std::vector<GenId>& block) {
  const SuperDomain& dom = *P.domain();
  DiffOp R(dom);
  for (const auto& [key, c] : P.terms()) {
    SuperScalar kept(Rational(0), &dom.table());
    for (const auto& term : c.terms()) {
      Monomial rest;
      std::uint32_t seen = 0;
      for (std::uint32_t i = 0; i < term.mono.factor_count(); ++i) {
        GenId g = term.mono.factor_gen(i);
        bool in_block = false;
        for (GenId b : block)
          if (b == g) {
            in_block = true;
            break;
          }
        if (in_block) ++seen;
        else rest.append_factor(g, term.mono.factor_exp(i));
      }
      if (seen == block.size())
        kept = kept + SuperScalar::from_terms(dom.table(), {SuperScalar::Term{rest, term.coeff}});
    }
    R.add_term(key, kept);
  }
  return R;
}

/// Classical N-fold antisymmetrizer of vector fields via the permutation sum.
inline DiffOp n_commutator(const std::vector<DiffOp>& fields, std::uint32_t N,
                           SignRule rule = SignRule::envelope) {
  if (fields.size() != N) throw precondition_error("n_commutator: need N fields");
  OperatorTuple<DiffOp> t;
  for (const auto& f : fields) {
    auto p = f.parity();
    if (!p) throw parity_error("n_commutator: inhomogeneous field");
    t.ops.push_back(f);
    t.parities.push_back(*p);
  }
  return antisymmetrize_naive(t, rule);
}

/// A_k(ad_{X_1},...,ad_{X_k})(Y): the alternating sum of nested brackets.
inline DiffOp adjoint_antisymmetrizer(const std::vector<DiffOp>& fields, const DiffOp& Y) {
  std::size_t k = fields.size();
  if (k > naive_cap) throw precondition_error("adjoint sum capped at 8 factors");
  std::optional<DiffOp> acc;
  for_each_permutation(k, [&](const Permutation& s) {
    DiffOp cur = Y;
    for (std::size_t i = k; i-- > 0;) cur = commutator(fields[s(i)], cur);
    if (classical_sign(s) < 0) {
      if (acc) *acc = *acc - cur;
      else acc = -cur;
    } else {
      if (acc) *acc = *acc + cur;
      else acc = cur;
    }
  });
  return *acc;
}

struct SubcriticalResult {
  DiffOp value;                  // A_3(ad)(Y)
  SuperScalar multiplier;        // -2 * Wronskian(x_1, x_2, x_3)
  bool equals_multiplier_times_y = false;
};

/// On vect(1), the triple adjoint antisymmetrizer acts as multiplication by
/// -2 det W(x_1, x_2, x_3) on the adjoint argument.
inline SubcriticalResult subcritical_eval(const std::vector<DiffOp>& fields, const DiffOp& Y) {
  if (fields.size() != 3) throw precondition_error("subcritical: need three fields");
  const SuperDomain& dom = *Y.domain();
  if (dom.even_count() != 1 || dom.odd_count() != 0)
    throw precondition_error("subcritical: vect(1) only");
  GenId t = dom.even_coord(0);
  SubcriticalResult res{adjoint_antisymmetrizer(fields, Y),
                        SuperScalar(Rational(0), &dom.table()), false};
  SuperMatrix W(Format{3, 0}, &dom.table());
  for (std::uint32_t j = 0; j < 3; ++j) {
    SuperScalar xj = fields[j].coefficient(Monomial::generator(t));
    W.at(0, j) = xj;
    W.at(1, j) = xj.derivative(t);
    W.at(2, j) = xj.derivative(t).derivative(t);
  }
  res.multiplier = W.det_even() * rat(-2);
  res.equals_multiplier_times_y = (res.value == res.multiplier * Y);
  return res;
}

/// First-order part of the k-commutator, written as the sum over exponent
/// patterns of k x k coefficient-derivative determinants.
inline DiffOp kcomm_first_order(const std::vector<DiffOp>& fields, std::uint32_t k) {
  if (fields.size() != k || k < 2) throw precondition_error("kcomm: need k >= 2 fields");
  const SuperDomain& dom = *fields[0].domain();
  std::uint32_t n = dom.even_count();
  // u[j][a] = coefficient of d_{x_a} in X_{j+1}
  std::vector<std::vector<SuperScalar>> u(k);
  for (std::uint32_t j = 0; j < k; ++j)
    for (std::uint32_t a = 0; a < n; ++a)
      u[j].push_back(fields[j].coefficient(Monomial::generator(dom.even_coord(a))));

  DiffOp R(dom);
  std::vector<std::uint32_t> avec(k, 0);
  std::vector<std::uint32_t> svec(k - 1);
  auto iterate_s = [&](auto&& self, std::uint32_t i) -> void {
    if (i == k - 1) {
      // row derivative pattern: row s gets one d_{x_{a_i}} per i with svec[i] = s
      std::vector<std::vector<std::uint32_t>> brow(k, std::vector<std::uint32_t>(n, 0));
      for (std::uint32_t t = 0; t + 1 < k; ++t) brow[svec[t]][avec[t]] += 1;
      SuperMatrix M(Format{k, 0}, &dom.table());
      for (std::uint32_t row = 0; row < k; ++row) {
        bool all_zero = true;
        for (std::uint32_t col = 0; col < k; ++col) {
          SuperScalar e = u[col][avec[row]];
          for (std::uint32_t var = 0; var < n && !e.is_zero(); ++var)
            for (std::uint32_t d = 0; d < brow[row][var]; ++d)
              e = e.derivative(dom.even_coord(var));
          if (!e.is_zero()) all_zero = false;
          M.at(row, col) = std::move(e);
        }
        if (all_zero) return;
      }
      SuperScalar det = M.det_even();
      if (!det.is_zero()) R.add_term(Monomial::generator(dom.even_coord(avec[k - 1])), det);
      return;
    }
    for (std::uint32_t s = i + 1; s < k; ++s) {
      svec[i] = s;
      self(self, i + 1);
    }
  };
  auto iterate_a = [&](auto&& self, std::uint32_t i) -> void {
    if (i == k) {
      iterate_s(iterate_s, 0);
      return;
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      avec[i] = a;
      self(self, i + 1);
    }
  };
  iterate_a(iterate_a, 0);
  return R;
}

/// The 5x5 determinant with rows d_q, d_p, d_p^2, d_q^2, d_p d_q applied to
/// the generating functions. Proportional to the h(2) 5-commutator.
inline SuperScalar h5_determinant(const SuperDomain& dom, const std::vector<SuperScalar>& fs) {
  if (fs.size() != 5) throw precondition_error("h5 determinant needs five functions");
  GenId p = dom.even_coord(0), q = dom.even_coord(1);
  SuperMatrix M(Format{5, 0}, &dom.table());
  for (std::uint32_t j = 0; j < 5; ++j) {
    M.at(0, j) = fs[j].derivative(q);
    M.at(1, j) = fs[j].derivative(p);
    M.at(2, j) = fs[j].derivative(p).derivative(p);
    M.at(3, j) = fs[j].derivative(q).derivative(q);
    M.at(4, j) = fs[j].derivative(p).derivative(q);
  }
  return M.det_even();
}

/// The seven-determinant expression for the first-order part of the vect(2)
/// 6-commutator. The d_2 coefficient applies the literal mirror (derivative
/// subscripts and second coefficient subscripts swapped); validation against
/// the permutation sum fixed the relative sign as +.
inline DiffOp vect6_first_order(const std::vector<DiffOp>& fields) {
  if (fields.size() != 6) throw precondition_error("vect6: need six fields");
  const SuperDomain& dom = *fields[0].domain();
  if (dom.even_count() != 2) throw precondition_error("vect6: vect(2) only");
  GenId x1 = dom.even_coord(0), x2 = dom.even_coord(1);

  // mirror = false: coefficient of d_1 as printed; mirror = true: subscripts
  // 1 and 2 interchanged (for derivatives and for the u second subscript)
  auto coefficient = [&](bool mirror) -> SuperScalar {
    GenId d1 = mirror ? x2 : x1;
    GenId d2 = mirror ? x1 : x2;
    auto uu = [&](std::uint32_t j, int which) -> SuperScalar {
      // which = 1 or 2: the coefficient subscript, mirrored if requested
      int w = mirror ? 3 - which : which;
      return fields[j].coefficient(Monomial::generator(w == 1 ? x1 : x2));
    };
    auto row_u = [&](int which) {
      std::vector<SuperScalar> r;
      for (std::uint32_t j = 0; j < 6; ++j) r.push_back(uu(j, which));
      return r;
    };
    auto row_du = [&](GenId d, int which) {
      std::vector<SuperScalar> r;
      for (std::uint32_t j = 0; j < 6; ++j) r.push_back(uu(j, which).derivative(d));
      return r;
    };
    auto row_ddu = [&](GenId da, GenId db, int which) {
      std::vector<SuperScalar> r;
      for (std::uint32_t j = 0; j < 6; ++j)
        r.push_back(uu(j, which).derivative(da).derivative(db));
      return r;
    };
    auto det6 = [&](const std::vector<std::vector<SuperScalar>>& rows) -> SuperScalar {
      SuperMatrix M(Format{6, 0}, &dom.table());
      for (std::uint32_t i = 0; i < 6; ++i)
        for (std::uint32_t j = 0; j < 6; ++j) M.at(i, j) = rows[i][j];
      return M.det_even();
    };
    SuperScalar acc(Rational(0), &dom.table());
    auto add = [&](long w, const std::vector<std::vector<SuperScalar>>& rows) {
      acc = acc + det6(rows) * rat(w);
    };
    add(1, {row_u(1), row_u(2), row_du(d2, 1), row_du(d1, 2), row_du(d2, 2), row_ddu(d2, d2, 2)});
    add(1, {row_u(1), row_u(2), row_du(d1, 1), row_du(d2, 1), row_du(d2, 2), row_ddu(d1, d1, 1)});
    add(1, {row_u(1), row_u(2), row_du(d1, 1), row_du(d2, 1), row_du(d1, 2), row_ddu(d2, d2, 2)});
    add(-2, {row_u(1), row_u(2), row_du(d2, 1), row_du(d1, 2), row_du(d2, 2), row_ddu(d1, d2, 1)});
    add(-2, {row_u(1), row_u(2), row_du(d1, 1), row_du(d2, 1), row_du(d1, 2), row_ddu(d1, d2, 1)});
    add(3, {row_u(1), row_u(2), row_du(d1, 1), row_du(d1, 2), row_du(d2, 2), row_ddu(d2, d2, 1)});
    add(-2, {row_u(1), row_u(2), row_du(d1, 1), row_du(d2, 1), row_du(d2, 2), row_ddu(d1, d2, 2)});
    return acc;
  };

  DiffOp R(dom);
  R.add_term(Monomial::generator(x1), coefficient(false));
  R.add_term(Monomial::generator(x2), coefficient(true));
  return R;
}

/// Random integer-coefficient vector field, degree-capped, for sampled checks.
inline DiffOp random_integer_field(const SuperDomain& dom, std::uint32_t degree,
                                   SplitMix64& rng) {
  auto monos = coordinate_monomials(dom, degree);
  std::vector<SuperScalar> coeffs;
  for (std::uint32_t j = 0; j < dom.even_count(); ++j) {
    SuperScalar u(Rational(0), &dom.table());
    for (const auto& m : monos)
      if (rng.below(2)) u = u + monomial_scalar(dom, m) * rat(rng.range(-2, 2));
    coeffs.push_back(std::move(u));
  }
  return vector_field(dom, coeffs);
}

/// Does A_k(ad)(Y) vanish on the family? samples = 0 runs the fully symbolic
/// generic fields at the spec's degree cap (k + 1 fields including Y).
inline bool adjoint_identity_check(const VectorialSpec& spec, std::uint32_t k,
                                   std::uint64_t samples, std::uint64_t seed) {
  if (k > naive_cap) throw precondition_error("adjoint check capped at k <= 8");
  if (samples == 0) {
    auto fam = make_generic_field_family(spec.coords, k + 1, spec.degree);
    std::vector<DiffOp> fields(fam.fields.begin(), fam.fields.end() - 1);
    if (spec.family == VectorialFamily::h)
      throw precondition_error("symbolic adjoint check is implemented for vect");
    return adjoint_antisymmetrizer(fields, fam.fields.back()).is_zero();
  }
  SplitMix64 rng(seed);
  SuperDomain dom(spec.coords, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<DiffOp> fields;
    DiffOp Y(dom);
    if (spec.family == VectorialFamily::h) {
      auto monos = coordinate_monomials(dom, spec.degree + 1, 1);
      auto random_ham = [&]() {
        SuperScalar f(Rational(0), &dom.table());
        for (const auto& m : monos)
          if (rng.below(2)) f = f + monomial_scalar(dom, m) * rat(rng.range(-2, 2));
        return hamiltonian_field(dom, f);
      };
      for (std::uint32_t i = 0; i < k; ++i) fields.push_back(random_ham());
      Y = random_ham();
    } else {
      for (std::uint32_t i = 0; i < k; ++i)
        fields.push_back(random_integer_field(dom, spec.degree, rng));
      Y = random_integer_field(dom, spec.degree, rng);
    }
    if (!adjoint_antisymmetrizer(fields, Y).is_zero()) return false;
  }
  return true;
}

} // namespace superali
