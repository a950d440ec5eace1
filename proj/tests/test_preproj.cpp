#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/preproj.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace mppa;

TEST_CASE("moment map of A2") {
  Quiver q = a2_quiver();
  MomentMap mm = moment_map(q, default_fusion_order(q));
  CHECK(mm.alg->print(mm.mu.at("1")) == "l_e");
  CHECK(mm.alg->print(mm.mu.at("2")) == "id(2) + e*estar");
  for (const auto& v : q.vertices) {
    const int vi = mm.alg->vertex_index(v);
    CHECK(mm.alg->mul(mm.mu.at(v), mm.mu_inv.at(v)) == mm.alg->idempotent(vi));
    CHECK(mm.alg->mul(mm.mu_inv.at(v), mm.mu.at(v)) == mm.alg->idempotent(vi));
  }
  CHECK(moment_morphism(mm)->check().ok);
}

TEST_CASE("the moment map depends on the order") {
  Quiver q = star_quiver(2);
  FusionOrder a = default_fusion_order(q), b = a;
  REQUIRE(b.incoming.at("c").size() == 2);
  std::swap(b.incoming.at("c")[0], b.incoming.at("c")[1]);
  MomentMap ma = moment_map(q, a), mb = moment_map(q, b);
  CHECK_FALSE(ma.mu.at("c") == mb.mu.at("c"));
  CHECK(ma.mu.at("p1") == mb.mu.at("p1"));
}

TEST_CASE("fusion reproduces the moment map") {
  for (const Quiver& q : {a2_quiver(), jordan_quiver(), two_cycle_quiver(), star_quiver(3)}) {
    FusionOrder ord = default_fusion_order(q);
    MomentMap mm = moment_map(q, ord);
    FusionResult f = fusion_build(mm.alg, q, ord);
    for (const auto& v : q.vertices) CHECK(f.mu.at(v) == mm.mu.at(v));
    for (const auto& m : f.morphisms) {
      CAPTURE(m->name());
      CHECK(m->check().ok);
    }
  }
}

TEST_CASE("the multiplicative relation") {
  Quiver q = a2_quiver();
  auto loc = quiver_loc(q);
  FusionOrder ord = default_fusion_order(q);
  Element r = cbs_relation(loc, q, {}, ord);
  CHECK(loc->print(r) == loc->print(loc->parse("(1 + e*estar)*(1 - id(1) + l_e) - 1")));
  Element r2 = cbs_relation(loc, q, {{"1", Rational(2)}}, ord);
  CHECK(r - r2 == loc->idempotent(loc->vertex_index("1")));
}

TEST_CASE("dg algebra") {
  Quiver q = jordan_quiver();
  DGAlgebra dg = build_upsilon(q, {{"o", Rational(3)}}, default_fusion_order(q));
  const int z = dg.alg->generator_index("zprime_o");
  REQUIRE(z >= 0);
  CHECK(dg.alg->generator(z).degree == -1);
  for (int g = 0; g < dg.alg->num_generators(); ++g) CHECK(dg.d(dg.d(dg.alg->gen(g))).is_zero());
  // Leibniz with the Koszul sign: d(z x) = d(z) x - z d(x) and d(x) = 0.
  Element zx = dg.alg->mul(dg.alg->gen(z), dg.alg->parse("e"));
  CHECK(dg.d(zx) == dg.alg->mul(dg.d(dg.alg->gen(z)), dg.alg->parse("e")));
  auto j = nlohmann::json::parse(upsilon_json(dg));
  CHECK(j["q"]["o"] == "3");
  CHECK(j["differential"].contains("zprime_o"));
  CHECK(h0_check(dg, {{"o", Rational(3)}}).status == H0Status::Coincide);
  CHECK(h0_check(dg, {{"o", Rational(2)}}).status == H0Status::Uncertified);
  CHECK_THROWS_AS(build_upsilon(q, {{"o", Rational(0)}}, default_fusion_order(q)), ValidationError);
}

TEST_CASE("determinant of the moment map") {
  Quiver q = a2_quiver();
  MomentMap mm = moment_map(q, default_fusion_order(q));
  for (int t = 0; t < 10; ++t) {
    Evaluator ev(*mm.alg, random_rep(*mm.alg, Dims{1 + t % 3, 2}, static_cast<std::uint64_t>(t)));
    CHECK(det_product(mm, ev) == 1);
  }
}

TEST_CASE("h0 by bounded ideal membership") {
  // For A2 any q != 1 makes both ideals the whole algebra.
  Quiver q = a2_quiver();
  DGAlgebra dg = build_upsilon(q, {{"1", Rational(2)}, {"2", Rational(1)}}, default_fusion_order(q));
  H0Report r = h0_check(dg, {{"1", Rational(3)}, {"2", Rational(1)}});
  CHECK(r.status == H0Status::Certified);
  CHECK(h0_check(dg, {{"1", Rational(2)}, {"2", Rational(1)}}).status == H0Status::Coincide);
}
