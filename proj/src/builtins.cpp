#include "mppa/builtins.hpp"

#include "mppa/error.hpp"

#include <sstream>

namespace mppa {

namespace {

Generator free_gen(std::string name, std::string src, std::string tgt) {
  return {std::move(name), std::move(src), std::move(tgt), 0, RecipeKind::Free, ""};
}

Generator inverse_gen(std::string name, std::string src, std::string tgt, std::string of) {
  return {std::move(name), std::move(src), std::move(tgt), 0, RecipeKind::InverseOf, std::move(of)};
}

Generator defined_gen(std::string name, std::string src, std::string tgt, std::string as) {
  return {std::move(name), std::move(src), std::move(tgt), 0, RecipeKind::DefinedAs, std::move(as)};
}

std::string scaled(const Rational& c, const std::string& word) { return to_string(c) + "*" + word; }

}  // namespace

Presentation laurent_presentation(const std::string& var) {
  Presentation p;
  p.name = "laurent(" + var + ")";
  p.vertices = {"o"};
  p.generators = {free_gen(var, "o", "o"), inverse_gen(var + "inv", "o", "o", var)};
  p.rules = {{var + "*" + var + "inv", "1"}, {var + "inv*" + var, "1"}};
  return p;
}

Presentation free_group_presentation(const std::vector<std::string>& vars, const std::string& name) {
  Presentation p;
  p.vertices = {"o"};
  std::string joined;
  for (const auto& v : vars) {
    joined += (joined.empty() ? "" : ",") + v;
    p.generators.push_back(free_gen(v, "o", "o"));
    p.generators.push_back(inverse_gen(v + "inv", "o", "o", v));
    p.rules.push_back({v + "*" + v + "inv", "1"});
    p.rules.push_back({v + "inv*" + v, "1"});
  }
  p.name = name.empty() ? "free_group_algebra(" + joined + ")" : name;
  return p;
}

Presentation interval_presentation() {
  Presentation p;
  p.name = "interval_kI";
  p.vertices = {"1", "2"};
  p.generators = {free_gen("x", "1", "2"), inverse_gen("xinv", "2", "1", "x")};
  p.rules = {{"x*xinv", "id(2)"}, {"xinv*x", "id(1)"}};
  return p;
}

Presentation groupoid_presentation() {
  Presentation p;
  p.name = "two_object_groupoid_C";
  p.vertices = {"1", "2"};
  p.generators = {free_gen("x", "1", "2"), inverse_gen("xinv", "2", "1", "x"), free_gen("y", "2", "1"),
                  inverse_gen("yinv", "1", "2", "y")};
  p.rules = {{"x*xinv", "id(2)"}, {"xinv*x", "id(1)"}, {"y*yinv", "id(1)"}, {"yinv*y", "id(2)"}};
  return p;
}

Presentation a2_loc_presentation() {
  Presentation p;
  p.name = "a2_loc";
  p.vertices = {"1", "2"};
  p.generators = {free_gen("e", "1", "2"), free_gen("estar", "2", "1"),
                  inverse_gen("l", "1", "1", "id(1) + estar*e")};
  p.rules = {{"estar*e*l", "id(1) - l"}, {"l*estar*e", "id(1) - l"}};
  p.macros = {{"a1", "id(1) + estar*e"},
              {"a2", "id(2) + e*estar"},
              {"a1inv", "l"},
              {"a2inv", "id(2) - e*l*estar"},
              {"inv_1_plus_estar_e", "id(2) + l"},
              {"inv_1_plus_e_estar", "id(1) + a2inv"}};
  p.invertibles = {{"a2", "a2inv"}, {"1 + estar*e", "inv_1_plus_estar_e"}, {"1 + e*estar", "inv_1_plus_e_estar"}};
  return p;
}

std::string loc_inverse_name(const std::string& edge) { return "l_" + edge; }
std::string loc_a_name(const std::string& edge) { return "a_" + edge; }
std::string loc_b_name(const std::string& edge) { return "b_" + edge; }
std::string loc_binv_name(const std::string& edge) { return "binv_" + edge; }

Presentation quiver_loc_presentation(const Quiver& q, const std::string& name) {
  require_valid(q);
  Presentation p;
  p.name = name.empty() ? "quiver_loc" : name;
  p.vertices = q.vertices;
  for (const auto& e : q.edges) {
    const std::string s = star_name(e.id), l = loc_inverse_name(e.id);
    const std::string a = "id(" + e.src + ") + " + s + "*" + e.id;
    p.generators.push_back(free_gen(e.id, e.src, e.tgt));
    p.generators.push_back(free_gen(s, e.tgt, e.src));
    p.generators.push_back(inverse_gen(l, e.src, e.src, a));
    p.rules.push_back({s + "*" + e.id + "*" + l, "id(" + e.src + ") - " + l});
    p.rules.push_back({l + "*" + s + "*" + e.id, "id(" + e.src + ") - " + l});
    p.macros.push_back({loc_a_name(e.id), a});
    p.macros.push_back({loc_b_name(e.id), "id(" + e.tgt + ") + " + e.id + "*" + s});
    p.macros.push_back({loc_binv_name(e.id), "id(" + e.tgt + ") - " + e.id + "*" + l + "*" + s});
    p.invertibles.push_back({loc_b_name(e.id), loc_binv_name(e.id)});
  }
  return p;
}

Presentation pushout_presentation(const Rational& q) {
  if (q == 0) throw ValidationError("pushout_xy_q needs q != 0");
  Presentation p;
  p.name = "pushout_xy_q(" + to_string(q) + ")";
  p.vertices = {"o"};
  Rational qi = 1 / q;
  p.generators = {free_gen("x", "o", "o"), inverse_gen("xinv", "o", "o", "x"),
                  defined_gen("y", "o", "o", scaled(q, "xinv")), defined_gen("yinv", "o", "o", scaled(qi, "x"))};
  p.rules = {{"x*xinv", "1"}, {"xinv*x", "1"}, {"y", scaled(q, "xinv")}, {"yinv", scaled(qi, "x")}};
  return p;
}

Presentation point_presentation() {
  Presentation p;
  p.name = "point";
  p.vertices = {"o"};
  return p;
}

AlgebraPtr laurent(const std::string& var) { return make_algebra(laurent_presentation(var)); }
AlgebraPtr free_group_algebra(const std::vector<std::string>& vars) {
  return make_algebra(free_group_presentation(vars));
}
AlgebraPtr laurent_pair() { return make_algebra(free_group_presentation({"x", "y"}, "laurent_pair")); }
AlgebraPtr interval_kI() { return make_algebra(interval_presentation()); }
AlgebraPtr two_object_groupoid_C() { return make_algebra(groupoid_presentation()); }
AlgebraPtr a2_loc() { return make_algebra(a2_loc_presentation()); }
AlgebraPtr quiver_loc(const Quiver& q) { return make_algebra(quiver_loc_presentation(q)); }
AlgebraPtr pushout_xy_q(const Rational& q) { return make_algebra(pushout_presentation(q)); }
AlgebraPtr point() { return make_algebra(point_presentation()); }

std::vector<std::string> builtin_names() {
  return {"laurent",    "laurent_pair",          "free_group_algebra", "interval_kI", "a2_loc",
          "quiver_loc", "two_object_groupoid_C", "pushout_xy_q",       "point"};
}

AlgebraPtr builtin(const std::string& name, const std::map<std::string, std::string>& params, const Quiver* quiver) {
  auto param = [&](const std::string& k, const std::string& def) {
    auto it = params.find(k);
    return it == params.end() ? def : it->second;
  };
  if (name == "laurent") return laurent(param("x", "x"));
  if (name == "laurent_pair") return laurent_pair();
  if (name == "free_group_algebra") {
    std::vector<std::string> vars;
    std::stringstream ss(param("vars", "x,y"));
    for (std::string v; std::getline(ss, v, ',');)
      if (!v.empty()) vars.push_back(v);
    return free_group_algebra(vars);
  }
  if (name == "interval_kI" || name == "kI") return interval_kI();
  if (name == "a2_loc" || name == "a2loc") return a2_loc();
  if (name == "two_object_groupoid_C" || name == "groupoid_C") return two_object_groupoid_C();
  if (name == "pushout_xy_q" || name == "pushout") return pushout_xy_q(parse_rational(param("q", "1")));
  if (name == "point") return point();
  if (name == "quiver_loc") {
    if (!quiver) throw Error("quiver_loc needs a quiver");
    return quiver_loc(*quiver);
  }
  throw Error("unknown builtin '" + name + "'");
}

MorphismPtr mu1_morphism(const AlgebraPtr& a2) {
  return Morphism::make("mu1", laurent("x1"), a2, {{"o", "1"}}, {{"x1", "l"}, {"x1inv", "a1"}});
}

MorphismPtr mu2_morphism(const AlgebraPtr& a2) {
  return Morphism::make("mu2", laurent("x2"), a2, {{"o", "2"}}, {{"x2", "a2"}, {"x2inv", "a2inv"}});
}

static std::string var_of(const AlgebraPtr& laurent_alg) { return laurent_alg->generator(0).name; }

MorphismPtr eval_morphism(const AlgebraPtr& laurent_alg, const Rational& q) {
  if (q == 0) throw ValidationError("evaluation needs q != 0");
  const std::string x = var_of(laurent_alg);
  return Morphism::make("eval_" + to_string(q), laurent_alg, point(), {{"o", "o"}},
                        {{x, to_string(q)}, {x + "inv", to_string(Rational(1 / q))}});
}

MorphismPtr inv_morphism(const AlgebraPtr& laurent_alg) {
  const std::string x = var_of(laurent_alg);
  return Morphism::make("inv", laurent_alg, laurent_alg, {{"o", "o"}}, {{x, x + "inv"}, {x + "inv", x}});
}

MorphismPtr rescale_morphism(const AlgebraPtr& laurent_alg, const Rational& q) {
  if (q == 0) throw ValidationError("rescaling needs q != 0");
  const std::string x = var_of(laurent_alg);
  return Morphism::make("rescale_" + to_string(q), laurent_alg, laurent_alg, {{"o", "o"}},
                        {{x, scaled(q, x)}, {x + "inv", scaled(Rational(1 / q), x + "inv")}});
}

MorphismPtr z_to_xy_morphism(const AlgebraPtr& target) {
  std::string v = target->num_vertices() == 1 ? target->vertex_name(0) : "2";
  return Morphism::make("z_to_xy", laurent("z"), target, {{"o", v}}, {{"z", "x*y"}, {"zinv", "yinv*xinv"}});
}

MorphismPtr variable_inclusion(const AlgebraPtr& target, const std::string& var) {
  return Morphism::make("include_" + var, laurent(var), target, {{"o", "o"}}, {{var, var}, {var + "inv", var + "inv"}});
}

MorphismPtr pushout_quotient(const AlgebraPtr& pair, const AlgebraPtr& pushout) {
  return Morphism::make("quotient", pair, pushout, {{"o", "o"}},
                        {{"x", "x"}, {"xinv", "xinv"}, {"y", "y"}, {"yinv", "yinv"}});
}

}  // namespace mppa
