#include <catch2/catch.hpp>

#include <array>

#include "superali/matrix_algebras.hpp"
#include "superali/supermatrix.hpp"
#include "test_helpers.hpp"

using namespace superali;

namespace {

SuperMatrix unit(Format f, std::uint32_t i, std::uint32_t j, const GeneratorTable* tab = nullptr) {
  SuperMatrix E(f, tab);
  E.at(i, j) = SuperScalar(rat(1), tab);
  return E;
}

/// Random even matrix 1 + N with Grassmann-nilpotent entries.
SuperMatrix random_unipotent(Format f, const GeneratorTable& tab, SplitMix64& rng) {
  SuperMatrix Z = SuperMatrix::identity(f, &tab);
  std::vector<GenId> odds;
  for (GenId g = 0; g < tab.size(); ++g)
    if (is_odd(tab.parity(g))) odds.push_back(g);
  for (std::uint32_t i = 0; i < f.total(); ++i)
    for (std::uint32_t j = 0; j < f.total(); ++j) {
      Parity slot = Z.slot_parity(i, j);
      SuperScalar v(Rational(0), &tab);
      if (slot == Parity::odd) {
        v = rat(rng.range(-2, 2)) * SuperScalar::generator(tab, odds[rng.below(odds.size())]);
      } else {
        GenId a = odds[rng.below(odds.size())];
        GenId b = odds[rng.below(odds.size())];
        if (a != b)
          v = rat(rng.range(-2, 2)) * SuperScalar::generator(tab, a) *
              SuperScalar::generator(tab, b);
      }
      Z.at(i, j) = Z.at(i, j) + v;
    }
  Z.declare_parity(Parity::even);
  return Z;
}

} // namespace

TEST_CASE("matrix product basics") {
  Format f{2, 0};
  auto I = SuperMatrix::identity(f);
  auto E12 = unit(f, 0, 1);
  auto E21 = unit(f, 1, 0);
  REQUIRE(I * E12 == E12);
  REQUIRE(E12 * E21 == unit(f, 0, 0));
  REQUIRE_THROWS_AS(SuperMatrix(Format{1, 0}) * I, format_mismatch_error);
}

TEST_CASE("scalar coefficients ride along with their signs") {
  GeneratorTable tab;
  GenId x1 = tab.add_odd("xi", {1});
  GenId x2 = tab.add_odd("xi", {2});
  Format f{2, 0};
  auto A = SuperScalar::generator(tab, x1) * unit(f, 0, 1, &tab);
  auto B = SuperScalar::generator(tab, x2) * unit(f, 1, 0, &tab);
  auto xi12 = SuperScalar::generator(tab, x1) * SuperScalar::generator(tab, x2);
  REQUIRE(A * B == xi12 * unit(f, 0, 0, &tab));
  REQUIRE(B * A == -(xi12 * unit(f, 1, 1, &tab)));  // xi2 xi1 = -xi1 xi2
}

TEST_CASE("supertrace examples") {
  Format f{2, 1};
  auto I = SuperMatrix::identity(f);
  REQUIRE(I.supertrace() == SuperScalar(rat(1)));  // m - n = 1
  auto off = unit(f, 0, 2);
  off.declare_parity(Parity::odd);
  REQUIRE(off.supertrace().is_zero());
  SuperMatrix mixed(f);
  mixed.at(0, 0) = SuperScalar(rat(1));
  mixed.at(0, 2) = SuperScalar(rat(1));
  REQUIRE_THROWS_AS(mixed.supertrace(), parity_error);
}

TEST_CASE("supertrace is supersymmetric: str(XY) = (-1)^{pq} str(YX)") {
  GeneratorTable tab;
  for (int i = 0; i < 4; ++i) tab.add_odd("a", {i});
  for (int i = 0; i < 2; ++i) tab.add_even("u", {i});
  Format f{2, 1};
  SplitMix64 rng(5);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    Parity px = static_cast<Parity>(rng.below(2));
    Parity py = static_cast<Parity>(rng.below(2));
    SuperMatrix X(f, &tab), Y(f, &tab);
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j) {
        X.at(i, j) = testing::random_homogeneous(tab, rng, parity_add(px, X.slot_parity(i, j)), 2);
        Y.at(i, j) = testing::random_homogeneous(tab, rng, parity_add(py, Y.slot_parity(i, j)), 2);
      }
    X.declare_parity(px);
    Y.declare_parity(py);
    auto lhs = (X * Y).supertrace();
    auto rhs = (Y * X).supertrace();
    if (lhs.is_zero() && rhs.is_zero()) continue;
    ++checked;
    if (is_odd(px) && is_odd(py)) REQUIRE(lhs == -rhs);
    else REQUIRE(lhs == rhs);
  }
  REQUIRE(checked > 10);
}

TEST_CASE("queer trace") {
  Format f{2, 2};
  SuperMatrix X(f);
  // A = 0, B = E11 in both off-diagonal blocks
  X.at(0, 2) = SuperScalar(rat(1));
  X.at(2, 0) = SuperScalar(rat(1));
  REQUIRE(X.queer_trace() == SuperScalar(rat(1)));

  SuperMatrix Y(f);
  Y.at(0, 0) = SuperScalar(rat(5));
  Y.at(2, 2) = SuperScalar(rat(5));
  Y.at(0, 1) = SuperScalar(rat(2));
  Y.at(2, 3) = SuperScalar(rat(2));
  REQUIRE(Y.queer_trace().is_zero());

  SuperMatrix bad(f);
  bad.at(0, 0) = SuperScalar(rat(1));
  REQUIRE_THROWS_AS(bad.queer_trace(), format_mismatch_error);
}

TEST_CASE("qtr(XY) = qtr(YX) for X even, Y odd in Q(2)") {
  auto spec = MatrixAlgebraSpec::parse("q(2)");
  auto bs = basis(spec);
  SplitMix64 rng(17);
  for (int it = 0; it < 20; ++it) {
    SuperMatrix X(spec.format()), Y(spec.format());
    for (const auto& b : bs) {
      Rational c = rat(rng.range(-2, 2));
      if (*b.declared_parity() == Parity::even) X = X + c * b;
      else Y = Y + c * b;
    }
    REQUIRE((X * Y).queer_trace() == (Y * X).queer_trace());
  }
}

TEST_CASE("supertransposition") {
  Format f{1, 1};
  SuperMatrix X(f);
  X.at(0, 0) = SuperScalar(rat(2));
  X.at(1, 1) = SuperScalar(rat(3));
  auto st = X.supertranspose();
  REQUIRE(st == X);  // block diagonal: (A 0; 0 D) -> (A^t 0; 0 D^t)
  REQUIRE(SuperMatrix::identity(f).supertranspose() == SuperMatrix::identity(f));

  SplitMix64 rng(23);
  GeneratorTable tab;
  tab.add_odd("a", {0});
  tab.add_odd("a", {1});
  tab.add_even("u", {0});
  for (int it = 0; it < 10; ++it) {
    SuperMatrix M(f, &tab);
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j)
        M.at(i, j) = testing::random_scalar(tab, rng, 3, 2);
    auto M4 = M.supertranspose().supertranspose().supertranspose().supertranspose();
    REQUIRE(M4 == M);
  }
}

TEST_CASE("det_even examples") {
  GeneratorTable tab;
  GenId x1 = tab.add_odd("xi", {1});
  GenId x2 = tab.add_odd("xi", {2});
  Format f1{1, 0};
  SuperMatrix M(f1, &tab);
  // 1 - UV with U = (xi1), V = (xi2)
  M.at(0, 0) = SuperScalar(rat(1), &tab) -
               SuperScalar::generator(tab, x1) * SuperScalar::generator(tab, x2);
  REQUIRE(M.det_even() == M.at(0, 0));

  Format f2{2, 0};
  REQUIRE(SuperMatrix::identity(f2).det_even() == SuperScalar(rat(1)));
  SuperMatrix D(f2);
  D.at(0, 0) = SuperScalar(rat(3));
  D.at(1, 1) = SuperScalar(rat(5));
  REQUIRE(D.det_even() == SuperScalar(rat(15)));
  SuperMatrix odd_entry(f2, &tab);
  odd_entry.at(0, 1) = SuperScalar::generator(tab, x1);
  REQUIRE_THROWS_AS(odd_entry.det_even(), parity_error);
}

TEST_CASE("det_even agrees with permutation expansion on random 3x3") {
  GeneratorTable tab;
  for (int i = 0; i < 4; ++i) tab.add_odd("a", {i});
  SplitMix64 rng(31);
  Format f{3, 0};
  for (int it = 0; it < 10; ++it) {
    SuperMatrix M(f, &tab);
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j)
        M.at(i, j) = testing::random_homogeneous(tab, rng, Parity::even, 2);
    SuperScalar acc(Rational(0), &tab);
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& p : perms) {
      int inv = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (p[i] > p[j]) ++inv;
      SuperScalar t = M.at(0, p[0]) * M.at(1, p[1]) * M.at(2, p[2]);
      acc = (inv & 1) ? acc - t : acc + t;
    }
    REQUIRE(M.det_even() == acc);
  }
}

TEST_CASE("berezinian basics and inverse under pi conjugation") {
  Format f{1, 1};
  REQUIRE(SuperMatrix::identity(f).berezinian() == SuperScalar(rat(1)));

  GeneratorTable tab;
  for (int i = 0; i < 6; ++i) tab.add_odd("a", {i});
  SplitMix64 rng(47);
  for (int it = 0; it < 8; ++it) {
    auto Z = random_unipotent(Format{1, 1}, tab, rng);
    REQUIRE(Z.pi_conjugate().berezinian() * Z.berezinian() == SuperScalar(rat(1), &tab));
  }
  for (int it = 0; it < 5; ++it) {
    auto Z = random_unipotent(Format{2, 1}, tab, rng);
    REQUIRE(Z.pi_conjugate().berezinian() * Z.berezinian() == SuperScalar(rat(1), &tab));
  }
}

TEST_CASE("berezinian of (1 lambda X; lambda X 1) is 1 for n = 1") {
  GeneratorTable tab;
  GenId lam = tab.add_even("lambda");
  GenId x = tab.add_odd("x", {0, 0});
  Format f{1, 1};
  SuperMatrix Z = SuperMatrix::identity(f, &tab);
  auto lX = SuperScalar::generator(tab, lam) * SuperScalar::generator(tab, x);
  Z.at(0, 1) = lX;
  Z.at(1, 0) = lX;
  REQUIRE(Z.berezinian() == SuperScalar(rat(1), &tab));
}

TEST_CASE("berezinian requires invertible D block") {
  Format f{1, 1};
  SuperMatrix Z(f);
  Z.at(0, 0) = SuperScalar(rat(1));
  REQUIRE_THROWS_AS(Z.berezinian(), not_invertible_error);
}

TEST_CASE("preserves_form basics") {
  auto spec = MatrixAlgebraSpec::parse("osp(1|2)");
  auto B = *defining_form(spec);
  SuperMatrix zero(spec.format());
  zero.declare_parity(Parity::even);
  REQUIRE(preserves_form(B, zero));
  for (const auto& b : basis(spec)) REQUIRE(preserves_form(B, b));

  SuperMatrix E11(spec.format());
  E11.at(0, 0) = SuperScalar(rat(1));
  E11.declare_parity(Parity::even);
  REQUIRE(!preserves_form(B, E11));
}
