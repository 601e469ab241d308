#include <doctest.h>

#include <cmath>

#include "medeig/intpoly.hpp"
#include "oracles.hpp"

using namespace medeig;

TEST_CASE("linear and quadratic synthetic division") {
  // p = (x - 2)(x + 3) = x^2 + x - 6
  const ZPoly p{-6, 1, 1};
  auto [q, rem] = poly_divide_linear(p, BigInt(2));
  CHECK(rem == 0);
  CHECK(q == ZPoly{3, 1});
  auto [q2, rem2] = poly_divide_linear(p, BigInt(1));
  CHECK(rem2 == poly_eval(p, 1));
  CHECK(rem2 == -4);

  // (x^2 - 5)(x^2 + x + 1) = x^4 + x^3 - 4x^2 - 5x - 5
  const ZPoly r{-5, -5, -4, 1, 1};
  auto [qq, qrem] = poly_divide_quadratic(r, BigInt(5));
  CHECK(qrem.r1 == 0);
  CHECK(qrem.r0 == 0);
  CHECK(qq == ZPoly{1, 1, 1});
}

TEST_CASE("evaluation in Z[sqrt(s)]") {
  // p(x) = x^3 - 3x - 2 at sqrt(2): 2 sqrt2 - 3 sqrt2 - 2 = -2 - sqrt2
  const ZPoly p{-2, -3, 0, 1};
  const QuadInt v = poly_eval_at_sqrt(p, BigInt(2));
  CHECK(v.a == -2);
  CHECK(v.b == -1);
  // norm = a^2 - 2 b^2
  CHECK(v.a * v.a - 2 * v.b * v.b == 2);
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
  // (x-1)^3 (x+2)^2 (x-5)
  const ZPoly f = oracles::zmul(
      oracles::zmul(oracles::zmul(ZPoly{-1, 1}, oracles::zmul(ZPoly{-1, 1}, ZPoly{-1, 1})),
                    oracles::zmul(ZPoly{2, 1}, ZPoly{2, 1})),
      ZPoly{-5, 1});
  auto factors = squarefree_decomposition(f);
  REQUIRE(factors.size() == 3);
  // sorted by multiplicity ascending by construction of Yun's loop
  CHECK(factors[0].second == 1);
  CHECK(factors[0].first == ZPoly{-5, 1});
  CHECK(factors[1].second == 2);
  CHECK(factors[1].first == ZPoly{2, 1});
  CHECK(factors[2].second == 3);
  CHECK(factors[2].first == ZPoly{-1, 1});

  auto single = squarefree_decomposition(ZPoly{-2, 0, 1});
  REQUIRE(single.size() == 1);
  CHECK(single[0].second == 1);
}

TEST_CASE("real_roots_exact isolates irrational and repeated roots") {
  // (x^2 - 2)(x^2 - 3): roots +-sqrt2, +-sqrt3
  const ZPoly f = oracles::zmul(ZPoly{-2, 0, 1}, ZPoly{-3, 0, 1});
  const auto roots = real_roots_exact(f);
  REQUIRE(roots.size() == 4);
  CHECK(std::abs(roots[0] + std::sqrt(3.0)) < 1e-11);
  CHECK(std::abs(roots[1] + std::sqrt(2.0)) < 1e-11);
  CHECK(std::abs(roots[2] - std::sqrt(2.0)) < 1e-11);
  CHECK(std::abs(roots[3] - std::sqrt(3.0)) < 1e-11);

  // (x-1)^3 (x+4)
  const ZPoly g = oracles::zmul(
      oracles::zmul(ZPoly{-1, 1}, oracles::zmul(ZPoly{-1, 1}, ZPoly{-1, 1})), ZPoly{4, 1});
  const auto repeated = real_roots_exact(g);
  REQUIRE(repeated.size() == 4);
  CHECK(repeated[0] == -4.0);  // integer roots come back exactly
  CHECK(repeated[1] == 1.0);
  CHECK(repeated[2] == 1.0);
  CHECK(repeated[3] == 1.0);

  // integer roots at dyadic midpoints of the search interval
  const ZPoly h = oracles::zmul(ZPoly{0, 1}, oracles::zmul(ZPoly{-1, 1}, ZPoly{1, 1}));
  const auto trio = real_roots_exact(h);
  REQUIRE(trio.size() == 3);
  CHECK(trio[0] == -1.0);
  CHECK(trio[1] == 0.0);
  CHECK(trio[2] == 1.0);

  CHECK_THROWS_AS(real_roots_exact(ZPoly{-1, 2}), std::invalid_argument);  // not monic
}

TEST_CASE("bareiss oracle sanity") {
  // det [[1,2],[3,4]] = -2
  CHECK(oracles::det_bareiss({1, 2, 3, 4}, 2) == -2);
  // singular
  CHECK(oracles::det_bareiss({1, 2, 2, 4}, 2) == 0);
  CHECK(oracles::det_bareiss({}, 0) == 1);
  // needs a row swap
  CHECK(oracles::det_bareiss({0, 1, 1, 0}, 2) == -1);
}
