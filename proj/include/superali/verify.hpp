#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "superali/antisym.hpp"
#include "superali/report.hpp"
#include "superali/vectorial.hpp"

namespace superali {

/// One acceptance sub-check. Criteria are exact (zero tolerance); the one
/// timing-based check says so in its details.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double ms = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace verify_detail {

inline double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

/// Every admissible non-decreasing index tuple (repeats only at odd basis
/// elements).
inline void for_each_multiset(const std::vector<SuperMatrix>& basis, std::uint32_t k,
                              const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> tup(k, 0);
  std::size_t nb = basis.size();
  auto admissible = [&]() {
    for (std::size_t i = 0; i + 1 < tup.size(); ++i)
      if (tup[i] == tup[i + 1] && *basis[tup[i]].declared_parity() == Parity::even) return false;
    return true;
  };
  for (;;) {
    if (admissible()) fn(tup);
    std::uint32_t i = k;
    while (i-- > 0) {
      if (tup[i] + 1 < nb) {
        ++tup[i];
        for (std::uint32_t j = i + 1; j < k; ++j) tup[j] = tup[i];
        break;
      }
      if (i == 0) return;
    }
  }
}

/// Does every a_k output (under the given sign rule) satisfy the membership
/// predicate? Exhaustive over basis multisets, hence exact by multilinearity.
inline bool closure_exhaustive(const MatrixAlgebraSpec& spec, std::uint32_t k, SignRule rule,
                               std::string* witness = nullptr) {
  auto bs = basis(spec);
  bool ok = true;
  for_each_multiset(bs, k, [&](const std::vector<std::uint32_t>& tup) {
    if (!ok) return;
    OperatorTuple<SuperMatrix> t;
    for (auto i : tup) {
      t.ops.push_back(bs[i]);
      t.parities.push_back(*bs[i].declared_parity());
    }
    auto out = antisymmetrize_naive(t, rule);
    Parity p = Parity::even;
    for (auto q : t.parities) p = parity_add(p, q);
    out.declare_parity(p);
    if (!member(spec, out)) {
      ok = false;
      if (witness) {
        std::ostringstream os;
        os << "tuple (";
        for (std::size_t i = 0; i < tup.size(); ++i) os << (i ? "," : "") << tup[i];
        os << ")";
        *witness = os.str();
      }
    }
  });
  return ok;
}

/// Is a_k identically zero under the rule? Exhaustive over basis multisets.
inline bool vanishes_exhaustive(const MatrixAlgebraSpec& spec, std::uint32_t k, SignRule rule) {
  auto bs = basis(spec);
  bool zero = true;
  for_each_multiset(bs, k, [&](const std::vector<std::uint32_t>& tup) {
    if (!zero) return;
    OperatorTuple<SuperMatrix> t;
    for (auto i : tup) {
      t.ops.push_back(bs[i]);
      t.parities.push_back(*bs[i].declared_parity());
    }
    if (!antisymmetrize_naive(t, rule).is_zero()) zero = false;
  });
  return zero;
}

inline std::string set_string(const std::set<std::uint32_t>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto k : s) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "}";
  return os.str();
}

inline std::vector<SuperMatrix> generic_matrices(GeneratorTable& tab, std::uint32_t dim,
                                                 std::uint32_t count) {
  std::vector<SuperMatrix> out;
  for (std::uint32_t s = 0; s < count; ++s) {
    SuperMatrix M(Format{dim, 0}, &tab);
    for (std::uint32_t i = 0; i < dim; ++i)
      for (std::uint32_t j = 0; j < dim; ++j)
        M.at(i, j) = SuperScalar::generator(
            tab, tab.add_even("c", {static_cast<int>(s), static_cast<int>(i),
                                    static_cast<int>(j)}));
    M.declare_parity(Parity::even);
    out.push_back(std::move(M));
  }
  return out;
}

struct BenchStats {
  double ms = 0;
  std::uint64_t naive_multiplications = 0;  // r! (r-1) per tuple times tuples
  std::uint64_t generic_terms = 0;
  bool zero = true;
};

/// Verifies a_r == 0 on the algebra by the permutation sum over every
/// ascending basis tuple.
inline BenchStats bench_naive(const MatrixAlgebraSpec& spec, std::uint32_t r) {
  BenchStats st;
  auto bs = basis(spec);
  double t0 = now_ms();
  std::uint64_t fact = 1;
  for (std::uint32_t i = 2; i <= r; ++i) fact *= i;
  std::vector<std::uint32_t> idx(r);
  for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
  bool zero = true;
  std::uint64_t tuples = 0;
  for (;;) {
    OperatorTuple<SuperMatrix> t;
    for (auto i : idx) {
      t.ops.push_back(bs[i]);
      t.parities.push_back(Parity::even);
    }
    ++tuples;
    if (!antisymmetrize_naive(t).is_zero()) zero = false;
    // next ascending tuple
    std::uint32_t i = r;
    bool brk = true;
    while (i-- > 0) {
      if (idx[i] + (r - i) < bs.size()) {
        ++idx[i];
        for (std::uint32_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        brk = false;
        break;
      }
    }
    if (brk) break;
  }
  st.ms = now_ms() - t0;
  st.naive_multiplications = tuples * fact * (r - 1);
  st.zero = zero;
  return st;
}

inline BenchStats bench_generic(const MatrixAlgebraSpec& spec, std::uint32_t r) {
  BenchStats st;
  double t0 = now_ms();
  GeneratorTable tab;
  auto ge = generic_element(spec, tab);
  auto count_terms = [](const SuperMatrix& M) {
    std::uint64_t terms = 0;
    std::uint32_t N = M.format().total();
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = 0; j < N; ++j) terms += M.at(i, j).term_count();
    return terms;
  };
  SuperMatrix P = ge.X;
  std::uint64_t peak = count_terms(P);
  for (std::uint32_t k = 2; k <= r; ++k) {
    P = P * ge.X;
    peak = std::max(peak, count_terms(P));
  }
  st.ms = now_ms() - t0;
  st.zero = P.is_zero();
  st.generic_terms = peak;  // peak term count across the intermediate powers
  return st;
}

} // namespace verify_detail

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

/// vect(3) critical scans (and anything at least that large) are gated behind
/// the long-running flag.
inline bool requires_long_run(const VectorialSpec& spec, std::uint32_t nmax) {
  (void)nmax;
  return spec.family == VectorialFamily::vect && spec.coords >= 3;
}

inline CriterionResult criterion_1() {
  using namespace verify_detail;
  CriterionResult r{1, "classical matrix identity: X^(2n) = 0, X^(2n-1) != 0 on gl(n), n <= 3", {}, 0};
  for (int n = 1; n <= 3; ++n) {
    auto spec = MatrixAlgebraSpec::parse("gl(" + std::to_string(n) + ")");
    GeneratorTable tab;
    auto ge = generic_element(spec, tab);
    auto Xlow = ge.X.pow(2 * n - 1);
    bool low_nonzero = !Xlow.is_zero();
    bool high_zero = (Xlow * ge.X).is_zero();
    r.checks.push_back({"gl(" + std::to_string(n) + "): X^" + std::to_string(2 * n - 1) +
                            " != 0 and X^" + std::to_string(2 * n) + " = 0",
                        low_nonzero && high_zero, ""});
  }
  return r;
}

inline CriterionResult criterion_2() {
  CriterionResult r{2, "minimal identities for o/sp", {}, 0};
  auto check = [&](const char* name, std::uint32_t rr) {
    auto spec = MatrixAlgebraSpec::parse(name);
    GeneratorTable tab;
    auto ge = generic_element(spec, tab);
    auto Xprev = ge.X.pow(rr - 2);
    bool prev_nonzero = !Xprev.is_zero();
    bool zero = (Xprev * ge.X * ge.X).is_zero();
    r.checks.push_back({std::string(name) + ": X^" + std::to_string(rr) + " = 0, X^" +
                            std::to_string(rr - 2) + " != 0",
                        prev_nonzero && zero, ""});
  };
  check("sp(2)", 4);
  check("sp(4)", 8);
  check("o(3)", 4);
  check("o(4)", 6);
  return r;
}

inline CriterionResult criterion_3() {
  using namespace verify_detail;
  CriterionResult r{3, "span structure of the nonvanishing in-algebra antisymmetrizers", {}, 0};
  struct Case {
    const char* name;
    std::set<std::uint32_t> expect;
  };
  const Case cases[] = {
      {"sl(2)", {2}},      {"sl(3)", {2, 4}},    {"sl(4)", {2, 4, 6}},
      {"sp(4)", {2, 5, 6}}, {"o(5)", {2, 5, 6}}, {"o(4)", {2, 5, 6}},
  };
  for (const auto& c : cases) {
    auto rep = span_scan(MatrixAlgebraSpec::parse(c.name), 10);
    bool ok = rep.nonvanishing == c.expect;
    r.checks.push_back({std::string(c.name) + " -> " + set_string(c.expect),
                        ok,
                        ok ? "" : "scan reports " + set_string(rep.nonvanishing)});
  }
  return r;
}

inline CriterionResult criterion_4() {
  using namespace verify_detail;
  CriterionResult r{4, "super closure lemmas", {}, 0};
  // supertrace of a_{2l} vanishes on arbitrary Mat(1|1), Mat(2|1) tuples:
  // str X^{2l} = 0 certifies every tuple at once by multilinearity
  for (const char* name : {"gl(1|1)", "gl(2|1)"}) {
    GeneratorTable tab;
    auto ge = generic_element(MatrixAlgebraSpec::parse(name), tab);
    SuperMatrix P = ge.X;
    bool ok = true;
    for (int l = 1; l <= 3; ++l) {
      P = P * ge.X;  // X^{2l}
      if (!P.supertrace().is_zero()) ok = false;
      P = P * ge.X;
    }
    r.checks.push_back({std::string("str a_2l = 0 on ") + name + ", l <= 3", ok, ""});
  }
  // form preservation of a_5 and a_6 outputs (osp(1|2), osp(2|2), pe(2));
  // a_6 closure is a theorem for the odd-induced signs, and envelope a_5
  // closure is also checked via the generic element
  for (const char* name : {"osp(1|2)", "osp(2|2)", "pe(2)"}) {
    auto spec = MatrixAlgebraSpec::parse(name);
    std::string w;
    bool a5 = closure_exhaustive(spec, 5, SignRule::odd_induced, &w);
    bool a6 = closure_exhaustive(spec, 6, SignRule::odd_induced, &w);
    GeneratorTable tab;
    auto ge = generic_element(spec, tab);
    auto X5 = ge.X.pow(5);
    bool a5env = true;
    for (const auto& [mono, C] : theta_coefficients(X5, Parity::odd))
      if (!member(spec, C)) {
        a5env = false;
        break;
      }
    r.checks.push_back({std::string("a_5, a_6 outputs preserve the form on ") + name,
                        a5 && a6 && a5env,
                        a5 && a6 && a5env ? "" : ("violation at " + w)});
  }
  // osp(1|2): a_4 == 0 as stated
  {
    auto spec = MatrixAlgebraSpec::parse("osp(1|2)");
    GeneratorTable tab;
    auto ge = generic_element(spec, tab);
    bool generic_zero = ge.X.pow(4).is_zero();
    bool naive_zero = vanishes_exhaustive(spec, 4, SignRule::odd_induced);
    bool pass = generic_zero && naive_zero;
    r.checks.push_back(
        {"osp(1|2): a_4 == 0", pass,
         pass ? ""
              : "a_4 != 0 under both sign rules (X^4 != 0, X^6 = 0; the minimal "
                "identity sits at degree 6 = 4n+2)"});
  }
  // q(2)/sq(2) closure
  {
    auto repq = span_scan(MatrixAlgebraSpec::parse("q(2)"), 5);
    bool q_ok = true;
    for (auto& [k, c] : repq.closure)
      if (c != Closure::lands_in_spec) q_ok = false;
    bool q_nonzero = repq.nonvanishing == std::set<std::uint32_t>{2, 3, 4, 5};
    auto sq = MatrixAlgebraSpec::parse("sq(2)");
    bool sq2 = closure_exhaustive(sq, 2, SignRule::odd_induced);
    bool sq4 = closure_exhaustive(sq, 4, SignRule::odd_induced);
    r.checks.push_back({"q(2) closed under a_k, k <= 5; sq(2) closed under a_2, a_4",
                        q_ok && q_nonzero && sq2 && sq4, ""});
  }
  return r;
}

inline CriterionResult criterion_5() {
  using namespace verify_detail;
  CriterionResult r{5, "star product relations as operator identities", {}, 0};
  for (std::uint32_t dim : {2u, 3u}) {
    bool all = true;
    std::string detail;
    auto verify = [&](std::uint32_t k, std::uint32_t l) {
      GeneratorTable tab;
      auto ops = generic_matrices(tab, dim, k + l - 1);
      OperatorTuple<SuperMatrix> t;
      for (auto& m : ops) {
        t.ops.push_back(m);
        t.parities.push_back(Parity::even);
      }
      auto star = star_product_eval(k, l, t);
      bool ok;
      if (k % 2 == 0 && l % 2 == 0) ok = star.is_zero();
      else if (l % 2 == 1) ok = (star == rat(static_cast<long>(k)) * antisymmetrize_naive(t));
      else ok = (star == antisymmetrize_naive(t));
      if (!ok) {
        all = false;
        detail += "(" + std::to_string(k) + "," + std::to_string(l) + ") failed ";
      }
    };
    verify(2, 2);
    verify(2, 3);
    verify(3, 2);
    verify(3, 3);
    r.checks.push_back({"(2,2)->0, (2,3)->2a4, (3,2)->a4, (3,3)->3a5 on generic dim-" +
                            std::to_string(dim) + " operators",
                        all, detail});
  }
  return r;
}

inline CriterionResult criterion_6() {
  CriterionResult r{6, "supertrace powers, det(1-UV)det(1-VU) = 1, Ber of the queer unit", {}, 0};
  // str X^{2r} = 0 for n <= 3, r <= n
  {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      GeneratorTable tab;
      auto ge = generic_element(MatrixAlgebraSpec::parse("gl(" + std::to_string(n) + ")"), tab);
      SuperMatrix P = ge.X;
      for (int rr = 1; rr <= n; ++rr) {
        P = P * ge.X;  // X^{2r}
        if (!P.supertrace().is_zero()) ok = false;
        P = P * ge.X;
      }
    }
    r.checks.push_back({"str X^(2r) = 0 for generic odd X, n <= 3, r <= n", ok, ""});
  }
  // det(1_p - UV) det(1_q - VU) = 1 for odd-entry U, V, p, q <= 3
  {
    bool ok = true;
    for (std::uint32_t p = 1; p <= 3; ++p)
      for (std::uint32_t q = 1; q <= 3; ++q) {
        GeneratorTable tab;
        std::vector<std::vector<SuperScalar>> U, V;
        for (std::uint32_t i = 0; i < p; ++i) {
          U.emplace_back();
          for (std::uint32_t j = 0; j < q; ++j)
            U.back().push_back(SuperScalar::generator(
                tab, tab.add_odd("u", {static_cast<int>(i), static_cast<int>(j)})));
        }
        for (std::uint32_t i = 0; i < q; ++i) {
          V.emplace_back();
          for (std::uint32_t j = 0; j < p; ++j)
            V.back().push_back(SuperScalar::generator(
                tab, tab.add_odd("v", {static_cast<int>(i), static_cast<int>(j)})));
        }
        SuperMatrix A(Format{p, 0}, &tab), B(Format{q, 0}, &tab);
        for (std::uint32_t i = 0; i < p; ++i)
          for (std::uint32_t j = 0; j < p; ++j) {
            SuperScalar s(i == j ? rat(1) : rat(0), &tab);
            for (std::uint32_t k = 0; k < q; ++k) s = s - U[i][k] * V[k][j];
            A.at(i, j) = s;
          }
        for (std::uint32_t i = 0; i < q; ++i)
          for (std::uint32_t j = 0; j < q; ++j) {
            SuperScalar s(i == j ? rat(1) : rat(0), &tab);
            for (std::uint32_t k = 0; k < p; ++k) s = s - V[i][k] * U[k][j];
            B.at(i, j) = s;
          }
        if (!(A.det_even() * B.det_even() == SuperScalar(rat(1), &tab))) ok = false;
      }
    r.checks.push_back({"det(1-UV) det(1-VU) = 1 for odd U, V with p, q <= 3", ok, ""});
  }
  // Ber(1 lambda X; lambda X 1) = 1 for n <= 2
  {
    bool ok = true;
    for (std::uint32_t n = 1; n <= 2; ++n) {
      GeneratorTable tab;
      GenId lam = tab.add_even("lambda");
      SuperMatrix Z = SuperMatrix::identity(Format{n, n}, &tab);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
          auto x = SuperScalar::generator(
              tab, tab.add_odd("x", {static_cast<int>(i), static_cast<int>(j)}));
          auto lx = SuperScalar::generator(tab, lam) * x;
          Z.at(i, n + j) = lx;
          Z.at(n + i, j) = lx;
        }
      if (!(Z.berezinian() == SuperScalar(rat(1), &tab))) ok = false;
    }
    r.checks.push_back({"Ber(1 lambda X; lambda X 1) = 1 for n <= 2", ok, ""});
  }
  return r;
}

inline CriterionResult criterion_7() {
  CriterionResult r{7, "sign cocycle identity", {}, 0};
  bool s3 = true;
  for (int mask = 0; mask < 8; ++mask) {
    ParityVector P;
    for (int i = 0; i < 3; ++i) P.push_back(static_cast<Parity>((mask >> i) & 1));
    for_each_permutation(3, [&](const Permutation& s1) {
      for_each_permutation(3, [&](const Permutation& s2) {
        if (super_sign(compose(s1, s2), P) !=
            super_sign(s1, P) * super_sign(s2, permute(s1, P)))
          s3 = false;
      });
    });
  }
  r.checks.push_back({"exhaustive on S3 x (Z/2)^3", s3, ""});
  bool s4 = true;
  SplitMix64 rng(0);
  for (int mask = 0; mask < 16; ++mask) {
    ParityVector P;
    for (int i = 0; i < 4; ++i) P.push_back(static_cast<Parity>((mask >> i) & 1));
    for (int it = 0; it < 60; ++it) {
      std::vector<std::uint32_t> v1{0, 1, 2, 3}, v2{0, 1, 2, 3};
      for (int i = 3; i > 0; --i) {
        std::swap(v1[i], v1[rng.below(i + 1)]);
        std::swap(v2[i], v2[rng.below(i + 1)]);
      }
      Permutation s1(v1), s2(v2);
      if (super_sign(compose(s1, s2), P) != super_sign(s1, P) * super_sign(s2, permute(s1, P)))
        s4 = false;
    }
  }
  r.checks.push_back({"sampled on S4, all parity vectors", s4, ""});
  return r;
}

inline CriterionResult criterion_8() {
  CriterionResult r{8, "vect(1): critical pair (1,2), a_3 identity, subcritical, adjoint bound", {}, 0};
  for (std::uint32_t d : {3u, 4u}) {
    auto gd = generic_odd_derivation(VectorialSpec{VectorialFamily::vect, 1, d});
    auto D2 = gd.D * gd.D;
    bool ok2 = D2.is_vector_field();
    auto D3 = gd.D * D2;
    bool ok3 = D3.is_zero();
    // zero claims re-verified at degree d+1
    auto gd2 = generic_odd_derivation(VectorialSpec{VectorialFamily::vect, 1, d + 1});
    bool ok3up = (gd2.D * (gd2.D * gd2.D)).is_zero();
    r.checks.push_back({"d = " + std::to_string(d) +
                            ": D^2 is a vector field, D^3 = 0 (re-verified at d+1)",
                        ok2 && ok3 && ok3up, ""});
  }
  {
    auto fam = make_generic_field_family(1, 4, 4);
    std::vector<DiffOp> xs(fam.fields.begin(), fam.fields.begin() + 3);
    auto res = subcritical_eval(xs, fam.fields[3]);
    r.checks.push_back({"A_3(ad)(Y) = -2 Wronskian * Y symbolically at d = 4",
                        res.equals_multiplier_times_y && !res.multiplier.is_zero(), ""});
  }
  {
    bool a4 = adjoint_identity_check(VectorialSpec{VectorialFamily::vect, 1, 4}, 4, 0, 0);
    bool a2 = !adjoint_identity_check(VectorialSpec{VectorialFamily::vect, 1, 4}, 2, 0, 0);
    r.checks.push_back({"adjoint A_4 == 0 symbolically at d = 4 (and A_2 != 0)", a4 && a2, ""});
  }
  return r;
}

inline CriterionResult criterion_9() {
  using namespace verify_detail;
  CriterionResult r{9, "vect(2): critical pair (2,6), the 6-commutator determinants, k-commutator formula", {}, 0};
  for (std::uint32_t d : {2u, 3u}) {
    auto gd = generic_odd_derivation(VectorialSpec{VectorialFamily::vect, 2, d});
    DiffOp P = gd.D;
    for (int i = 0; i < 5; ++i) P = gd.D * P;  // D^6
    bool ok6 = P.is_vector_field();
    DiffOp P7 = gd.D * P;
    bool ok7 = P7.is_zero();
    r.checks.push_back({"d = " + std::to_string(d) + ": D^6 is a nonzero vector field, D^7 = 0",
                        ok6 && ok7,
                        d == 2 ? "zero claim re-verified by the d = 3 run" : ""});
  }
  {
    // order-1 part of a_6 vs the determinant combination, certified on every
    // ascending basis 6-tuple at degree cap 2 (equivalent to symbolic generic
    // fields by multilinearity)
    auto gd = generic_odd_derivation(VectorialSpec{VectorialFamily::vect, 2, 2});
    DiffOp P = gd.D;
    for (int i = 0; i < 5; ++i) P = gd.D * P;
    bool all = true;
    std::size_t checked = 0;
    std::vector<std::uint32_t> sel(6);
    std::size_t nb = gd.etas.size();
    std::vector<std::uint32_t> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
      std::vector<GenId> block;
      std::vector<DiffOp> fields;
      for (auto i : idx) {
        block.push_back(gd.etas[i]);
        fields.push_back(gd.basis_fields[i]);
      }
      DiffOp a6 = odd_block_coefficient(P, block);
      DiffOp expect = vect6_first_order(fields);
      DiffOp first_order(*gd.dom);
      for (const auto& [key, c] : a6.terms())
        if (key.total_degree() == 1) first_order.add_term(key, c);
      if (!(first_order == expect)) all = false;
      ++checked;
      std::uint32_t i = 6;
      bool done = true;
      while (i-- > 0) {
        if (idx[i] + (6 - i) < nb) {
          ++idx[i];
          for (std::uint32_t j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
          done = false;
          break;
        }
      }
      if (done) break;
    }
    r.checks.push_back({"order-1 part of a_6 equals the seven-determinant combination "
                        "(both coordinates, mirror rule) on all " +
                            std::to_string(checked) + " basis 6-tuples at d = 2",
                        all, ""});
  }
  {
    SuperDomain dom(2, 0);
    SplitMix64 rng(0);
    bool all = true;
    for (int it = 0; it < 10; ++it) {
      std::vector<DiffOp> fields;
      for (int i = 0; i < 6; ++i) fields.push_back(random_integer_field(dom, 2, rng));
      auto K = kcomm_first_order(fields, 6);
      auto A = n_commutator(fields, 6);
      DiffOp first(dom);
      for (const auto& [key, c] : A.terms())
        if (key.total_degree() == 1) first.add_term(key, c);
      if (!(K == first)) all = false;
    }
    r.checks.push_back({"k-commutator first-order formula agrees with the permutation sum "
                        "on 10 sampled integer 6-tuples",
                        all, ""});
  }
  return r;
}

inline CriterionResult criterion_10() {
  CriterionResult r{10, "h(2): critical pair (2,5) and the 5x5 determinant law", {}, 0};
  {
    auto gd = generic_odd_derivation(VectorialSpec{VectorialFamily::h, 2, 2});
    DiffOp P = gd.D;
    for (int i = 0; i < 4; ++i) P = gd.D * P;  // D^5
    r.checks.push_back({"generating degree <= 3: D^5 is a nonzero vector field",
                        P.is_vector_field(), ""});
  }
  {
    SuperDomain dom(2, 0);
    SplitMix64 rng(1);
    auto monos = coordinate_monomials(dom, 3, 1);
    std::optional<Rational> c;
    bool constant = true, divfree = true, matched = true;
    int used = 0;
    for (int it = 0; used < 20 && it < 200; ++it) {
      std::vector<SuperScalar> fs;
      std::vector<DiffOp> fields;
      for (int i = 0; i < 5; ++i) {
        SuperScalar f(Rational(0), &dom.table());
        for (const auto& m : monos)
          if (rng.below(2)) f = f + monomial_scalar(dom, m) * rat(rng.range(-2, 2));
        fs.push_back(f);
        fields.push_back(hamiltonian_field(dom, f));
      }
      auto det = h5_determinant(dom, fs);
      auto target = hamiltonian_field(dom, det);
      if (target.is_zero()) continue;
      auto a5 = n_commutator(fields, 5);
      if (!divergence(a5).is_zero() && !a5.is_zero()) divfree = false;
      // solve a5 = c * X_det from the first matching coefficient
      Rational cc;
      bool found = false;
      for (const auto& [key, tc] : target.terms()) {
        for (const auto& term : tc.terms()) {
          Rational num = a5.coefficient(key).coefficient_of(term.mono);
          cc = num / term.coeff;
          found = true;
          break;
        }
        if (found) break;
      }
      if (!found) continue;
      if (!(a5 == cc * target)) matched = false;
      if (!c) c = cc;
      else if (*c != cc) constant = false;
      ++used;
    }
    bool pass = used >= 20 && matched && constant && divfree && c.has_value();
    std::string det = pass ? "c = " + rat_string(*c) + " across " + std::to_string(used) +
                                 " sampled tuples; outputs divergence-free"
                           : "";
    r.checks.push_back({"a_5 of Hamiltonian fields equals c * X_det with one constant c",
                        pass, det});
  }
  return r;
}

inline CriterionResult criterion_11() {
  CriterionResult r{11, "svect(2): the 5-commutator is a divergence-free vector field", {}, 0};
  auto gd = generic_odd_derivation(VectorialSpec{VectorialFamily::svect, 2, 2});
  DiffOp P = gd.D;
  for (int i = 0; i < 4; ++i) P = gd.D * P;  // D^5
  bool vf = P.is_vector_field();
  bool df = vf && divergence(P).is_zero();
  r.checks.push_back({"d = 2: D^5 is a nonzero vector field", vf, ""});
  r.checks.push_back({"d = 2: D^5 is divergence-free", df, ""});
  return r;
}

inline CriterionResult criterion_12() {
  CriterionResult r{12, "desk-scale gate: vect(3) scans sit behind the long flag", {}, 0};
  bool gate = requires_long_run(VectorialSpec{VectorialFamily::vect, 3, 2}, 10) &&
              requires_long_run(VectorialSpec{VectorialFamily::vect, 3, 2}, 13) &&
              !requires_long_run(VectorialSpec{VectorialFamily::vect, 2, 3}, 7) &&
              !requires_long_run(VectorialSpec{VectorialFamily::vect, 1, 4}, 5);
  r.checks.push_back({"vect(3) N-scans are gated; vect(1), vect(2) runs are not", gate,
                      "gated scans are declared not reproducible at desk scale and are "
                      "excluded from acceptance"});
  return r;
}

inline CriterionResult criterion_13() {
  using namespace verify_detail;
  CriterionResult r{13, "generic-element path beats the naive factorial sum by >= 10x", {}, 0};
  auto spec = MatrixAlgebraSpec::parse("gl(3)");
  std::vector<double> naive_ms, generic_ms;
  BenchStats sn{}, sg{};
  for (int run = 0; run < 3; ++run) {
    sn = bench_naive(spec, 6);
    sg = bench_generic(spec, 6);
    naive_ms.push_back(sn.ms);
    generic_ms.push_back(sg.ms);
  }
  std::sort(naive_ms.begin(), naive_ms.end());
  std::sort(generic_ms.begin(), generic_ms.end());
  double ratio = generic_ms[1] > 0 ? naive_ms[1] / generic_ms[1] : 1e9;
  std::ostringstream os;
  os << "3-run medians: naive " << naive_ms[1] << " ms (" << sn.naive_multiplications
     << " products), generic " << generic_ms[1] << " ms (" << sg.generic_terms
     << " terms); ratio " << ratio << "; timing-based check";
  bool agree = sn.zero == sg.zero && sn.zero;
  r.checks.push_back({"gl(3), r = 6: both methods report zero and ratio >= 10",
                      agree && ratio >= 10.0, os.str()});
  return r;
}

inline CriterionResult run_criterion(int id) {
  double t0 = verify_detail::now_ms();
  CriterionResult r;
  switch (id) {
    case 1: r = criterion_1(); break;
    case 2: r = criterion_2(); break;
    case 3: r = criterion_3(); break;
    case 4: r = criterion_4(); break;
    case 5: r = criterion_5(); break;
    case 6: r = criterion_6(); break;
    case 7: r = criterion_7(); break;
    case 8: r = criterion_8(); break;
    case 9: r = criterion_9(); break;
    case 10: r = criterion_10(); break;
    case 11: r = criterion_11(); break;
    case 12: r = criterion_12(); break;
    case 13: r = criterion_13(); break;
    default: throw precondition_error("criterion id out of range");
  }
  r.ms = verify_detail::now_ms() - t0;
  return r;
}

struct SuiteEntry {
  const char* name;
  std::vector<int> criteria;
};

inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> s = {
      {"ali", {1}},           {"matrix-minimal", {2}}, {"span", {3}},
      {"super-closure", {4}}, {"star-product", {5}},   {"appendix", {6}},
      {"sign-cocycle", {7}},  {"vect1", {8}},          {"vect2", {9}},
      {"h2", {10}},           {"svect2", {11}},        {"gating", {12}},
      {"bench", {13}},        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
  };
  return s;
}

inline std::vector<CriterionResult> run_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (name != s.name) continue;
    std::vector<CriterionResult> out;
    for (int id : s.criteria) out.push_back(run_criterion(id));
    return out;
  }
  throw parse_error("unknown suite '" + name + "'");
}

} // namespace superali
