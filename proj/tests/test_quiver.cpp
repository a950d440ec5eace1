#include "mppa/error.hpp"
#include "mppa/quiver.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace mppa;

TEST_CASE("validate reports the first violated invariant") {
  CHECK_FALSE(validate(a2_quiver()).has_value());
  Quiver dangling{{"1", "2"}, {{"e", "1", "3"}}};
  REQUIRE(validate(dangling).has_value());
  CHECK(validate(dangling)->find("dangling endpoint") != std::string::npos);
  Quiver dup{{"1", "2"}, {{"e", "1", "2"}, {"e", "2", "1"}}};
  REQUIRE(validate(dup).has_value());
  CHECK(validate(dup)->find("duplicate id") != std::string::npos);
  Quiver dupv{{"1", "1"}, {}};
  CHECK(validate(dupv).has_value());
  CHECK_THROWS_AS(require_valid(dangling), ValidationError);
}

TEST_CASE("double quiver of A2 and the Jordan quiver") {
  DoubleQuiver d = double_quiver(a2_quiver());
  REQUIRE(d.edges.size() == 2);
  const Edge* es = d.edge("estar");
  REQUIRE(es);
  CHECK(es->src == "2");
  CHECK(es->tgt == "1");
  CHECK(d.eps.at("e") == 1);
  CHECK(d.eps.at("estar") == -1);
  DoubleQuiver j = double_quiver(jordan_quiver());
  CHECK(j.edges.size() == 2);
  for (const auto& e : j.edges) CHECK(e.src == e.tgt);
  CHECK(double_quiver(Quiver{{"v"}, {}}).edges.empty());
}

TEST_CASE("star involution on random quivers") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Quiver q;
    const int nv = 1 + static_cast<int>(rng() % 4);
    for (int v = 0; v < nv; ++v) q.vertices.push_back("v" + std::to_string(v));
    const int ne = static_cast<int>(rng() % 9);
    for (int e = 0; e < ne; ++e)
      q.edges.push_back({"e" + std::to_string(e), q.vertices[rng() % static_cast<unsigned>(nv)],
                         q.vertices[rng() % static_cast<unsigned>(nv)]});
    DoubleQuiver d = double_quiver(q);
    REQUIRE(d.edges.size() == 2 * q.edges.size());
    for (const auto& e : d.edges) {
      const std::string& s = d.star.at(e.id);
      CHECK(d.star.at(s) == e.id);
      const Edge* r = d.edge(s);
      REQUIRE(r);
      CHECK(r->src == e.tgt);
      CHECK(r->tgt == e.src);
      CHECK(d.eps.at(e.id) == -d.eps.at(s));
    }
    Quiver sep = separated(q);
    CHECK(sep.vertices.size() == 2 * q.edges.size());
    CHECK(sep.edges.size() == q.edges.size());
    CHECK_FALSE(validate(sep).has_value());
  }
}

TEST_CASE("separated quivers") {
  Quiver s = separated(jordan_quiver());
  CHECK(s.vertices.size() == 2);
  REQUIRE(s.edges.size() == 1);
  CHECK(s.edges[0].src != s.edges[0].tgt);
  Quiver two{{"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}}};
  Quiver s2 = separated(two);
  CHECK(std::set<std::string>(s2.vertices.begin(), s2.vertices.end()).size() == 4);
}

TEST_CASE("fusion orders") {
  Quiver st = star_quiver(3);
  FusionOrder o = default_fusion_order(st);
  CHECK_NOTHROW(check_fusion_order(st, o));
  FusionOrder bad = o;
  bool dropped = false;
  for (auto* side : {&bad.incoming, &bad.outgoing})
    for (auto& [v, es] : *side)
      if (!dropped && !es.empty()) {
        es.pop_back();
        dropped = true;
      }
  REQUIRE(dropped);
  CHECK_THROWS_AS(check_fusion_order(st, bad), ValidationError);
}

TEST_CASE("quiver files keep rationals exact") {
  QuiverFile f = parse_quiver_json(
      R"({"vertices":["o"],"edges":[{"id":"e","src":"o","tgt":"o"}],"q":{"o":"-3/6"}})");
  CHECK(f.q.at("o") == Rational(-1, 2));
  QuiverFile g = parse_quiver_json(quiver_to_json(f));
  CHECK(g.q.at("o") == Rational(-1, 2));
  CHECK(quiver_to_json(f).find("-1/2") != std::string::npos);
  CHECK_THROWS(parse_quiver_json(R"({"vertices":["o"],"edges":[],"q":{"o":0.5}})"));
}
