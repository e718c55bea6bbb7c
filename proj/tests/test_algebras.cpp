#include <catch2/catch.hpp>

#include "superali/matrix_algebras.hpp"
#include "test_helpers.hpp"

using namespace superali;

namespace {

int count_parity(const std::vector<SuperMatrix>& bs, Parity p) {
  int c = 0;
  for (const auto& b : bs)
    if (*b.declared_parity() == p) ++c;
  return c;
}

SuperMatrix superbracket(const SuperMatrix& X, const SuperMatrix& Y) {
  bool both_odd = is_odd(*X.parity()) && is_odd(*Y.parity());
  return both_odd ? X * Y + Y * X : X * Y - Y * X;
}

} // namespace

TEST_CASE("spec grammar") {
  REQUIRE(MatrixAlgebraSpec::parse("gl(3)").to_string() == "gl(3)");
  REQUIRE(MatrixAlgebraSpec::parse("gl(2|1)").to_string() == "gl(2|1)");
  REQUIRE(MatrixAlgebraSpec::parse("osp(1|2)").format() == Format{1, 2});
  REQUIRE(MatrixAlgebraSpec::parse("pe(2)").format() == Format{2, 2});
  REQUIRE_THROWS_AS(MatrixAlgebraSpec::parse("sp(3)"), parse_error);
  REQUIRE_THROWS_AS(MatrixAlgebraSpec::parse("osp(1|3)"), parse_error);
  REQUIRE_THROWS_AS(MatrixAlgebraSpec::parse("e8(248)"), parse_error);
  REQUIRE_THROWS_AS(MatrixAlgebraSpec::parse("o(2"), parse_error);
}

TEST_CASE("basis dimensions") {
  REQUIRE(basis(MatrixAlgebraSpec::parse("gl(2)")).size() == 4);
  REQUIRE(basis(MatrixAlgebraSpec::parse("sl(2)")).size() == 3);
  REQUIRE(basis(MatrixAlgebraSpec::parse("sl(2|1)")).size() == 8);
  REQUIRE(basis(MatrixAlgebraSpec::parse("o(3)")).size() == 3);
  REQUIRE(basis(MatrixAlgebraSpec::parse("o(4)")).size() == 6);
  REQUIRE(basis(MatrixAlgebraSpec::parse("sp(2)")).size() == 3);
  REQUIRE(basis(MatrixAlgebraSpec::parse("sp(4)")).size() == 10);
  auto osp12 = basis(MatrixAlgebraSpec::parse("osp(1|2)"));
  REQUIRE(count_parity(osp12, Parity::even) == 3);
  REQUIRE(count_parity(osp12, Parity::odd) == 2);
  auto osp22 = basis(MatrixAlgebraSpec::parse("osp(2|2)"));
  REQUIRE(count_parity(osp22, Parity::even) == 4);
  REQUIRE(count_parity(osp22, Parity::odd) == 4);
  REQUIRE(basis(MatrixAlgebraSpec::parse("pe(2)")).size() == 8);
  REQUIRE(basis(MatrixAlgebraSpec::parse("q(2)")).size() == 8);
  REQUIRE(basis(MatrixAlgebraSpec::parse("sq(2)")).size() == 7);
}

TEST_CASE("gl(2) basis is the matrix units") {
  auto bs = basis(MatrixAlgebraSpec::parse("gl(2)"));
  REQUIRE(bs.size() == 4);
  int found = 0;
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      for (const auto& b : bs)
        if (!b.at(i, j).is_zero()) ++found;
  REQUIRE(found == 4);
}

TEST_CASE("bases satisfy their defining predicates") {
  for (const char* name :
       {"sl(3)", "sl(2|1)", "o(4)", "sp(4)", "osp(1|2)", "osp(2|2)", "pe(2)", "q(2)", "sq(2)"}) {
    auto spec = MatrixAlgebraSpec::parse(name);
    for (const auto& b : basis(spec)) {
      INFO(name);
      REQUIRE(member(spec, b));
    }
  }
}

TEST_CASE("q(n) basis supercommutes with J") {
  auto spec = MatrixAlgebraSpec::parse("q(3)");
  auto J = queer_J(3);
  for (const auto& b : basis(spec)) {
    bool odd = is_odd(*b.declared_parity());
    auto br = odd ? b * J + J * b : b * J - J * b;
    REQUIRE(br.is_zero());
  }
}

TEST_CASE("form families close under the superbracket") {
  for (const char* name : {"osp(1|2)", "osp(2|2)", "pe(2)", "q(2)", "sq(2)", "sl(1|1)"}) {
    auto spec = MatrixAlgebraSpec::parse(name);
    auto bs = basis(spec);
    for (const auto& x : bs)
      for (const auto& y : bs) {
        auto br = superbracket(x, y);
        br.declare_parity(parity_add(*x.declared_parity(), *y.declared_parity()));
        INFO(name);
        REQUIRE(member(spec, br));
      }
  }
}

TEST_CASE("generic element of gl(1) squares to zero") {
  GeneratorTable tab;
  auto ge = generic_element(MatrixAlgebraSpec::parse("gl(1)"), tab);
  REQUIRE(*ge.X.parity() == Parity::odd);
  REQUIRE((ge.X * ge.X).is_zero());
}

TEST_CASE("generic element of osp(1|2): X^4 and X^5 survive, X^6 vanishes") {
  GeneratorTable tab;
  auto ge = generic_element(MatrixAlgebraSpec::parse("osp(1|2)"), tab);
  auto X4 = ge.X.pow(4);
  REQUIRE(!X4.is_zero());
  auto X5 = X4 * ge.X;
  REQUIRE(!X5.is_zero());
  REQUIRE((X5 * ge.X).is_zero());
}

TEST_CASE("generic element is odd homogeneous with fresh generators") {
  GeneratorTable tab;
  tab.add_even("unrelated");
  auto ge = generic_element(MatrixAlgebraSpec::parse("q(2)"), tab);
  REQUIRE(ge.thetas.size() == 8);
  REQUIRE(*ge.X.parity() == Parity::odd);
  // theta parity flips the basis parity
  for (std::size_t i = 0; i < ge.thetas.size(); ++i)
    REQUIRE(tab.parity(ge.thetas[i]) ==
            parity_add(*ge.basis_elements[i].declared_parity(), Parity::odd));
}
