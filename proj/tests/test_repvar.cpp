#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/repvar.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace mppa;

TEST_CASE("representation shapes") {
  auto A = a2_loc();
  MatrixRep r = random_rep(*A, Dims{2, 3}, 5);
  for (int g = 0; g < A->num_generators(); ++g) {
    CHECK(r.gens[g].rows() == r.dims[A->gen_tgt(g)]);
    CHECK(r.gens[g].cols() == r.dims[A->gen_src(g)]);
  }
  // l is the exact inverse of 1 + estar*e.
  const Matrix& e = r.gens[A->generator_index("e")];
  const Matrix& es = r.gens[A->generator_index("estar")];
  const Matrix& l = r.gens[A->generator_index("l")];
  CHECK(l * (Matrix::identity(2) + es * e) == Matrix::identity(2));
  CHECK(cycling_dims(*A, 4) == Dims{2, 2});
  CHECK(uniform_dims(*A, 3) == Dims{3, 3});
}

TEST_CASE("sampling is deterministic in the seed") {
  auto L = laurent();
  MatrixRep a = random_rep(*L, Dims{3}, 99), b = random_rep(*L, Dims{3}, 99), c = random_rep(*L, Dims{3}, 100);
  CHECK(a.gens == b.gens);
  CHECK(a.gens != c.gens);
  CHECK(random_matrix(2, 3, 8) == random_matrix(2, 3, 8));
  CHECK(derive_seed(7, 1) != derive_seed(7, 2));
  Matrix m = random_matrix(4, 4, 12);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(abs(m.at(i, j)) <= 3);
}

TEST_CASE("evaluation respects the rewriting rules") {
  std::mt19937_64 rng(41);
  int n = 0;
  for (const auto& alg : {laurent(), interval_kI(), a2_loc(), two_object_groupoid_C(), quiver_loc(jordan_quiver())}) {
    for (int i = 0; i < 40; ++i, ++n) {
      Evaluator ev(*alg, random_rep(*alg, cycling_dims(*alg, i), static_cast<std::uint64_t>(i)));
      Element a = testing::random_element(*alg, rng, 4), b = testing::random_element(*alg, rng, 4);
      CHECK(block_equal(ev.eval(alg->mul_free(a, b)), ev.eval(alg->nf(alg->mul_free(a, b)))));
    }
  }
  CHECK(n >= 200);
}

TEST_CASE("oracle verdicts") {
  auto A = a2_loc();
  CHECK_FALSE(oracle_equals(*A, A->parse("l"), A->parse("id(1) - estar*e*l"), 10, 3).distinct);
  OracleVerdict v = oracle_equals(*A, *A->parse_expr("a2inv*e"), *A->parse_expr("e*a1inv + e*l*l"), 10, 3);
  CHECK(v.distinct);
  CHECK_FALSE(v.counterexample.empty());
  EqualityVerdict eq = equals(*A, A->parse("a2inv*e"), A->parse("e*a1inv"));
  CHECK(eq.equal);
  CHECK_FALSE(eq.probabilistic);
}

TEST_CASE("dimension vector errors") {
  auto A = a2_loc();
  CHECK_THROWS_AS(random_rep(*A, Dims{0, 0}, 1), Error);
  CHECK_THROWS_AS(random_rep(*A, Dims{1}, 1), Error);
  CHECK_THROWS_AS(random_rep(*A, Dims{-1, 2}, 1), Error);
  CHECK_NOTHROW(random_rep(*A, Dims{0, 2}, 1));
  CHECK_THROWS_AS(random_rep(*A, DimensionVector{{"9", 1}}, 1), Error);
}
