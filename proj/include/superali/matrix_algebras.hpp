#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superali/linalg.hpp"
#include "superali/supermatrix.hpp"

namespace superali {

enum class Family { gl, sl, o, sp, osp, pe, q, sq };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::o: return "o";
    case Family::sp: return "sp";
    case Family::osp: return "osp";
    case Family::pe: return "pe";
    case Family::q: return "q";
    case Family::sq: return "sq";
  }
  return "?";
}

/// Symbolic descriptor of a classical matrix Lie (super)algebra in its
/// defining representation. Text grammar:
///   gl(m), gl(m|n), sl(m), sl(m|n), o(k), sp(2k), osp(m|2n), pe(n), q(n), sq(n)
struct MatrixAlgebraSpec {
  Family family;
  int a = 0;  // first size
  int b = 0;  // second size (gl/sl/osp only)

  Format format() const {
    switch (family) {
      case Family::gl:
      case Family::sl: return Format{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
      case Family::o: return Format{static_cast<std::uint32_t>(a), 0};
      case Family::sp: return Format{static_cast<std::uint32_t>(a), 0};
      case Family::osp: return Format{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
      case Family::pe:
      case Family::q:
      case Family::sq: return Format{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a)};
    }
    return {};
  }

  bool is_super() const {
    switch (family) {
      case Family::gl:
      case Family::sl: return b > 0;
      case Family::o:
      case Family::sp: return false;
      default: return true;
    }
  }

  std::string to_string() const {
    std::string s = family_name(family);
    s += "(";
    s += std::to_string(a);
    if ((family == Family::gl || family == Family::sl || family == Family::osp) && b > 0)
      s += "|" + std::to_string(b);
    s += ")";
    return s;
  }

  static MatrixAlgebraSpec parse(std::string_view text);
};

inline MatrixAlgebraSpec MatrixAlgebraSpec::parse(std::string_view text) {
  auto fail = [&]() -> MatrixAlgebraSpec {
    throw parse_error("bad algebra spec '" + std::string(text) +
                      "'; grammar: gl(m), gl(m|n), sl(m), sl(m|n), o(k), sp(2k), "
                      "osp(m|2n), pe(n), q(n), sq(n)");
  };
  std::size_t lp = text.find('(');
  if (lp == std::string_view::npos || text.back() != ')') return fail();
  std::string name(text.substr(0, lp));
  std::string_view args = text.substr(lp + 1, text.size() - lp - 2);
  Family fam;
  if (name == "gl") fam = Family::gl;
  else if (name == "sl") fam = Family::sl;
  else if (name == "o") fam = Family::o;
  else if (name == "sp") fam = Family::sp;
  else if (name == "osp") fam = Family::osp;
  else if (name == "pe") fam = Family::pe;
  else if (name == "q") fam = Family::q;
  else if (name == "sq") fam = Family::sq;
  else return fail();
  auto parse_int = [&](std::string_view s) -> std::optional<int> {
    if (s.empty()) return std::nullopt;
    int v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  MatrixAlgebraSpec spec{fam, 0, 0};
  std::size_t bar = args.find('|');
  if (bar != std::string_view::npos) {
    if (fam != Family::gl && fam != Family::sl && fam != Family::osp) return fail();
    auto x = parse_int(args.substr(0, bar));
    auto y = parse_int(args.substr(bar + 1));
    if (!x || !y) return fail();
    spec.a = *x;
    spec.b = *y;
  } else {
    auto x = parse_int(args);
    if (!x) return fail();
    spec.a = *x;
  }
  // size validity
  switch (fam) {
    case Family::gl:
    case Family::sl:
      if (spec.a + spec.b < 1) return fail();
      break;
    case Family::o:
      if (spec.a < 1) return fail();
      break;
    case Family::sp:
      if (spec.a < 2 || spec.a % 2 != 0) return fail();
      break;
    case Family::osp:
      if (spec.a < 1 || spec.b < 2 || spec.b % 2 != 0) return fail();
      break;
    case Family::pe:
    case Family::q:
    case Family::sq:
      if (spec.a < 1) return fail();
      break;
  }
  return spec;
}

namespace detail {

/// Trace of the upper-right block, with no shape validation.
inline SuperScalar odd_block_trace(const SuperMatrix& X) {
  SuperScalar t(Rational(0), X.table());
  for (std::uint32_t i = 0; i < X.format().m; ++i) t = t + X.at(i, X.format().m + i);
  return t;
}

inline SuperMatrix unit_matrix(Format fmt, std::uint32_t i, std::uint32_t j) {
  SuperMatrix E(fmt);
  E.at(i, j) = SuperScalar(rat(1));
  E.declare_parity(E.slot_parity(i, j));
  return E;
}

inline SuperMatrix from_coords(Format fmt, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& slots,
                               const std::vector<Rational>& v, Parity p) {
  SuperMatrix X(fmt);
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (!rat_is_zero(v[k])) X.at(slots[k].first, slots[k].second) = SuperScalar(v[k]);
  X.declare_parity(p);
  return X;
}

} // namespace detail

/// J_{2k} = antidiag(1_k, -1_k): the Gram matrix normal form of sp(2k) and of
/// the symplectic block of osp.
inline SuperMatrix symplectic_gram(std::uint32_t two_k) {
  SuperMatrix J(Format{two_k, 0});
  std::uint32_t k = two_k / 2;
  for (std::uint32_t i = 0; i < k; ++i) {
    J.at(i, k + i) = SuperScalar(rat(1));
    J.at(k + i, i) = SuperScalar(rat(-1));
  }
  J.declare_parity(Parity::even);
  return J;
}

/// Gram matrix of the defining form, where the family has one.
inline std::optional<BilinearForm> defining_form(const MatrixAlgebraSpec& spec) {
  Format fmt = spec.format();
  switch (spec.family) {
    case Family::o: {
      SuperMatrix G = SuperMatrix::identity(fmt);
      return BilinearForm{G, Parity::even};
    }
    case Family::sp: {
      return BilinearForm{symplectic_gram(fmt.m), Parity::even};
    }
    case Family::osp: {
      SuperMatrix G(fmt);
      for (std::uint32_t i = 0; i < fmt.m; ++i) G.at(i, i) = SuperScalar(rat(1));
      std::uint32_t k = fmt.n / 2;
      for (std::uint32_t i = 0; i < k; ++i) {
        G.at(fmt.m + i, fmt.m + k + i) = SuperScalar(rat(1));
        G.at(fmt.m + k + i, fmt.m + i) = SuperScalar(rat(-1));
      }
      G.declare_parity(Parity::even);
      return BilinearForm{G, Parity::even};
    }
    case Family::pe: {
      // J_{n|n} = antidiag(1_n, -1_n), odd
      std::uint32_t n = fmt.m;
      SuperMatrix G(fmt);
      for (std::uint32_t i = 0; i < n; ++i) {
        G.at(i, n + i) = SuperScalar(rat(1));
        G.at(n + i, i) = SuperScalar(rat(-1));
      }
      G.declare_parity(Parity::odd);
      return BilinearForm{G, Parity::odd};
    }
    default: return std::nullopt;
  }
}

/// The odd operator J = (0 1_n; -1_n 0) whose supercommutant cuts out q(n).
inline SuperMatrix queer_J(std::uint32_t n) {
  SuperMatrix J(Format{n, n});
  for (std::uint32_t i = 0; i < n; ++i) {
    J.at(i, n + i) = SuperScalar(rat(1));
    J.at(n + i, i) = SuperScalar(rat(-1));
  }
  J.declare_parity(Parity::odd);
  return J;
}

/// Membership of a parity-homogeneous matrix in the algebra.
inline bool member(const MatrixAlgebraSpec& spec, const SuperMatrix& X) {
  auto p = X.parity();
  if (!p) throw parity_error("membership needs a parity-homogeneous matrix");
  switch (spec.family) {
    case Family::gl: return true;
    case Family::sl: return X.supertrace().is_zero();
    case Family::o:
    case Family::sp:
    case Family::osp:
    case Family::pe: return preserves_form(*defining_form(spec), X);
    case Family::q:
    case Family::sq: {
      SuperMatrix J = queer_J(spec.format().m);
      SuperMatrix lhs = X * J;
      SuperMatrix rhs = J * X;
      SuperMatrix br = is_odd(*p) ? lhs + rhs : lhs - rhs;
      if (!br.is_zero()) return false;
      if (spec.family == Family::sq) return X.queer_trace().is_zero();
      return true;
    }
  }
  return false;
}

/// Parity-homogeneous basis of the algebra (rational entries, no linear
/// dependencies). gl/sl use matrix units and diagonal differences; the
/// form/commutant families solve their defining linear equations per parity
/// sector.
inline std::vector<SuperMatrix> basis(const MatrixAlgebraSpec& spec) {
  Format fmt = spec.format();
  std::uint32_t N = fmt.total();
  std::vector<SuperMatrix> out;
  switch (spec.family) {
    case Family::gl: {
      for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t j = 0; j < N; ++j) out.push_back(detail::unit_matrix(fmt, i, j));
      return out;
    }
    case Family::sl: {
      for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t j = 0; j < N; ++j)
          if (i != j) out.push_back(detail::unit_matrix(fmt, i, j));
      for (std::uint32_t i = 0; i + 1 < N; ++i) {
        SuperMatrix H(fmt);
        H.at(i, i) = SuperScalar(rat(1));
        // str(E_ii) flips sign across the block boundary
        bool crossing = (i + 1 == fmt.m);
        H.at(i + 1, i + 1) = SuperScalar(rat(crossing ? 1 : -1));
        H.declare_parity(Parity::even);
        out.push_back(H);
      }
      return out;
    }
    default: break;
  }
  // families defined by linear conditions: solve per parity sector
  for (Parity p : {Parity::even, Parity::odd}) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = 0; j < N; ++j) {
        SuperMatrix probe(fmt);
        if (probe.slot_parity(i, j) == p) slots.emplace_back(i, j);
      }
    if (slots.empty()) continue;
    auto conditions = [&](const SuperMatrix& X) -> std::vector<Rational> {
      std::vector<Rational> c;
      auto push_matrix = [&](const SuperMatrix& M) {
        for (std::uint32_t i = 0; i < N; ++i)
          for (std::uint32_t j = 0; j < N; ++j) c.push_back(M.at(i, j).constant_term());
      };
      switch (spec.family) {
        case Family::o:
        case Family::sp:
        case Family::osp:
        case Family::pe: {
          auto B = *defining_form(spec);
          SuperMatrix lhs = B.gram * X;
          SuperMatrix rhs = X.supertranspose() * B.gram;
          bool flip = is_odd(p) && is_odd(B.parity);
          push_matrix(flip ? lhs - rhs : lhs + rhs);
          break;
        }
        case Family::q:
        case Family::sq: {
          SuperMatrix J = queer_J(fmt.m);
          SuperMatrix lhs = X * J;
          SuperMatrix rhs = J * X;
          push_matrix(is_odd(p) ? lhs + rhs : lhs - rhs);
          if (spec.family == Family::sq)
            c.push_back(detail::odd_block_trace(X).constant_term());
          break;
        }
        default: break;
      }
      return c;
    };
    // constraint matrix: rows = conditions, cols = slots
    std::vector<std::vector<Rational>> cols_of_conditions;
    for (auto [i, j] : slots) {
      SuperMatrix probe(fmt);
      probe.at(i, j) = SuperScalar(rat(1));
      probe.declare_parity(p);
      cols_of_conditions.push_back(conditions(probe));
    }
    std::size_t ncons = cols_of_conditions.empty() ? 0 : cols_of_conditions[0].size();
    RatMatrix M = rat_matrix(ncons, slots.size());
    for (std::size_t r = 0; r < ncons; ++r)
      for (std::size_t ci = 0; ci < slots.size(); ++ci) M[r][ci] = cols_of_conditions[ci][r];
    for (auto& v : nullspace(std::move(M), slots.size()))
      out.push_back(detail::from_coords(fmt, slots, v, p));
  }
  return out;
}

/// Generic element X = sum_b theta_b * b over the basis, theta_b a fresh
/// generator of parity p(b)+1. X is odd-homogeneous; its r-th power encodes the
/// r-antisymmetrizer on the algebra.
struct GenericElement {
  SuperMatrix X;
  std::vector<GenId> thetas;          // one per basis element, declaration order
  std::vector<SuperMatrix> basis_elements;
};

inline GenericElement generic_element(const MatrixAlgebraSpec& spec, GeneratorTable& tab,
                                      const std::string& name = "th") {
  auto bs = basis(spec);
  GenericElement ge{SuperMatrix(spec.format(), &tab), {}, {}};
  int idx = 0;
  for (const auto& b : bs) {
    Parity pb = *b.declared_parity();
    GenId g = tab.add(name, {idx}, parity_add(pb, Parity::odd));
    ge.thetas.push_back(g);
    ge.X = ge.X + SuperScalar::generator(tab, g) * b;
    ++idx;
  }
  ge.basis_elements = std::move(bs);
  ge.X.declare_parity(Parity::odd);
  return ge;
}

} // namespace superali
