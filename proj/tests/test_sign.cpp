#include <catch2/catch.hpp>

#include "superali/perm.hpp"
#include "superali/superscalar.hpp"

using namespace superali;

namespace {

Permutation perm(std::initializer_list<std::uint32_t> one_based) {
  return Permutation::from_one_based(std::vector<std::uint32_t>(one_based));
}

ParityVector pv(std::initializer_list<int> ps) {
  ParityVector v;
  for (int p : ps) v.push_back(static_cast<Parity>(p));
  return v;
}

/// Independent oracle: reorder a product e_1...e_k of distinct generators of
/// parities p_i + 1 into e_{s(1)}...e_{s(k)} with actual scalar arithmetic and
/// read off the sign.
int envelope_reorder_sign(const Permutation& s, const ParityVector& P) {
  GeneratorTable tab;
  std::vector<GenId> gens;
  for (std::size_t i = 0; i < P.size(); ++i)
    gens.push_back(tab.add("e", {static_cast<int>(i)},
                           parity_add(P[i], Parity::odd)));
  SuperScalar sorted(rat(1), &tab), shuffled(rat(1), &tab);
  for (std::size_t i = 0; i < P.size(); ++i) {
    sorted = sorted * SuperScalar::generator(tab, gens[i]);
    shuffled = shuffled * SuperScalar::generator(tab, gens[s(i)]);
  }
  REQUIRE(!sorted.is_zero());
  if (shuffled == sorted) return 1;
  REQUIRE(shuffled == -sorted);
  return -1;
}

} // namespace

TEST_CASE("super_sign basic examples") {
  REQUIRE(super_sign(perm({1, 2, 3}), pv({0, 1, 0})) == 1);
  REQUIRE(super_sign(perm({2, 1}), pv({0, 0})) == -1);
  REQUIRE(super_sign(perm({2, 1}), pv({1, 1})) == 1);
  REQUIRE(super_sign(perm({2, 1}), pv({0, 1})) == 1);
  // the two printed forms disagree exactly here
  REQUIRE(super_sign(perm({2, 1}), pv({0, 1}), SignRule::odd_induced) == -1);
  REQUIRE(super_sign(perm({2, 1}), pv({1, 1}), SignRule::odd_induced) == 1);
}

TEST_CASE("length mismatch") {
  REQUIRE_THROWS_AS(super_sign(perm({2, 1}), pv({0})), precondition_error);
}

TEST_CASE("all-even specialization equals the classical signature") {
  for_each_permutation(4, [&](const Permutation& s) {
    ParityVector P(4, Parity::even);
    REQUIRE(super_sign(s, P) == classical_sign(s));
    REQUIRE(super_sign(s, P, SignRule::odd_induced) == classical_sign(s));
  });
}

TEST_CASE("composition follows the stated rule") {
  auto s1 = perm({2, 3, 1});
  auto s2 = perm({1, 3, 2});
  auto c = compose(s1, s2);
  // (s1 o s2)(i) = s1(s2(i))
  REQUIRE(c.images() == std::vector<std::uint32_t>{1, 0, 2});
  REQUIRE(classical_sign(s1) == 1);
  REQUIRE(classical_sign(perm({2, 1, 3})) == -1);
}

TEST_CASE("cocycle identity, exhaustive on S3 x parities") {
  for (int mask = 0; mask < 8; ++mask) {
    ParityVector P = pv({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    for_each_permutation(3, [&](const Permutation& s1) {
      for_each_permutation(3, [&](const Permutation& s2) {
        for (SignRule rule : {SignRule::envelope, SignRule::odd_induced}) {
          int lhs = super_sign(compose(s1, s2), P, rule);
          int rhs = super_sign(s1, P, rule) * super_sign(s2, permute(s1, P), rule);
          REQUIRE(lhs == rhs);
        }
      });
    });
  }
}

TEST_CASE("cocycle identity on S4, all parity vectors") {
  for (int mask = 0; mask < 16; ++mask) {
    ParityVector P = pv({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
    for_each_permutation(4, [&](const Permutation& s1) {
      for_each_permutation(4, [&](const Permutation& s2) {
        int lhs = super_sign(compose(s1, s2), P);
        int rhs = super_sign(s1, P) * super_sign(s2, permute(s1, P));
        REQUIRE(lhs == rhs);
      });
    });
  }
}

TEST_CASE("envelope soundness against brute-force reordering") {
  for (std::size_t k : {2u, 3u, 4u}) {
    for (int mask = 0; mask < (1 << k); ++mask) {
      ParityVector P;
      for (std::size_t i = 0; i < k; ++i)
        P.push_back(static_cast<Parity>((mask >> i) & 1));
      for_each_permutation(k, [&](const Permutation& s) {
        REQUIRE(super_sign(s, P) == envelope_reorder_sign(s, P));
      });
    }
  }
}

TEST_CASE("odd_induced equals sgn(s) times sign induced on odd slots") {
  // directly count the induced permutation's inversions
  for (int mask = 0; mask < 8; ++mask) {
    ParityVector P = pv({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    for_each_permutation(3, [&](const Permutation& s) {
      std::vector<std::uint32_t> odd_vals;
      for (std::size_t i = 0; i < 3; ++i)
        if (is_odd(P[s(i)])) odd_vals.push_back(s(i));
      int induced = 1;
      for (std::size_t i = 0; i < odd_vals.size(); ++i)
        for (std::size_t j = i + 1; j < odd_vals.size(); ++j)
          if (odd_vals[i] > odd_vals[j]) induced = -induced;
      REQUIRE(super_sign(s, P, SignRule::odd_induced) == classical_sign(s) * induced);
    });
  }
}

TEST_CASE("inverse and identity") {
  auto s = perm({3, 1, 4, 2});
  REQUIRE(compose(s, s.inverse()).images() == Permutation::identity(4).images());
}
