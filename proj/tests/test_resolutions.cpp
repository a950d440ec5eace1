#include "mppa/bimodule.hpp"
#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/resolutions.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace mppa;

TEST_CASE("iota is a derivation") {
  std::mt19937_64 rng(31);
  for (const auto& alg : {a2_loc(), quiver_loc(jordan_quiver())}) {
    CAPTURE(alg->name());
    auto M = omega_module("Omega", alg);
    for (int i = 0; i < 100; ++i) {
      Element a = alg->nf(testing::random_element(*alg, rng, 4));
      Element b = alg->nf(testing::random_element(*alg, rng, 4));
      CHECK(iota(*M, alg->mul(a, b)) == left_mul(*alg, a, iota(*M, b)) + right_mul(*alg, iota(*M, a), b));
    }
    for (int v = 0; v < alg->num_vertices(); ++v) CHECK(iota(*M, alg->idempotent(v)).is_zero());
  }
}

TEST_CASE("iota of an inverse") {
  auto A = a2_loc();
  auto M = omega_module("Omega", A);
  Element l = A->parse("l"), a1 = A->parse("a1");
  // ι(l) = -l ι(a1) l
  CHECK(iota(*M, l) == Rational(-1) * right_mul(*A, left_mul(*A, l, iota(*M, a1)), l));
  CHECK_FALSE(iota(*M, A->parse("e")).is_zero());
}

TEST_CASE("A^e acts through the opposite product") {
  auto P = laurent_pair();
  CHECK(ae_action_compatible(P, {"x", "y", "x*y + 2*yinv"}, true));
  CHECK_FALSE(ae_action_compatible(P, {"x", "y", "x*y + 2*yinv"}, false));
}

TEST_CASE("small resolution of the Laurent algebra") {
  auto L = laurent();
  SmallResolution r = small_resolution(L);
  CHECK(r.gens == std::vector<std::string>{"x"});
  REQUIRE(r.phi);
  REQUIRE(r.psi);
  for (const auto& eq : chain_map_equations(r.phi, r.Rdual, r.R)) CHECK(check_exact(eq, {}).pass);
  for (const Rational& q : {Rational(1), Rational(-2), Rational(3, 5)}) {
    FiberScalars f = eval_fiber(r, q);
    CHECK(f.differentials_vanish);
    CHECK(f.degree1 == 1 / q);
    CHECK(f.degree0 == 1 / q);
  }
  CHECK_THROWS_AS(small_resolution(a2_loc()), Error);
}

TEST_CASE("bimodule oracle agrees with exact evaluation") {
  auto A = a2_loc();
  auto M = omega_module("Omega", A);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    Element a = A->nf(testing::random_element(*A, rng, 3));
    Element b = A->nf(testing::random_element(*A, rng, 3));
    auto lhs = bexpr::iota(expr::mul(expr::element(a), expr::element(b)));
    auto rhs = bexpr::add(bexpr::lmul(expr::element(a), bexpr::iota(expr::element(b))),
                          bexpr::rmul(bexpr::iota(expr::element(a)), expr::element(b)));
    Equation eq = bimodule_equation(M, lhs, rhs);
    CHECK(check_exact(eq, {}).pass);
    CHECK(check_oracle(eq, 6, static_cast<std::uint64_t>(i)).pass);
  }
  // A wrong sign is caught by both.
  auto e = A->parse_expr("e"), es = A->parse_expr("estar");
  auto lhs = bexpr::iota(expr::mul(e, es));
  auto rhs = bexpr::sub(bexpr::lmul(e, bexpr::iota(es)), bexpr::rmul(bexpr::iota(e), es));
  Equation bad = bimodule_equation(M, lhs, rhs);
  CHECK_FALSE(check_exact(bad, {}).pass);
  CHECK_FALSE(check_oracle(bad, 20, 7).pass);
}

TEST_CASE("A2 non-degeneracy maps") {
  A2Maps m = build_a2_maps(a2_loc());
  for (const auto& eq : chain_map_equations(m.umap, m.cK, m.cP)) CHECK(check_exact(eq, {}).pass);
  for (const auto& eq : chain_map_equations(m.m, m.cKd, m.cK)) CHECK(check_exact(eq, {}).pass);
  bool literal_fails = false;
  for (const auto& eq : chain_map_equations(m.umap, {m.K, m.dK_literal}, m.cP))
    if (!check_exact(eq, {}).pass) literal_fails = true;
  CHECK(literal_fails);
  CHECK_THROWS_AS(build_a2_maps(laurent()), Error);
}
