#include "mppa/quiver.hpp"

#include "mppa/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mppa {

int Quiver::vertex_index(const std::string& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

const Edge* Quiver::edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

std::optional<std::string> validate(const Quiver& q) {
  std::set<std::string> seen;
  for (const auto& v : q.vertices) {
    if (v.empty()) return "empty vertex id";
    if (!seen.insert(v).second) return "duplicate id: vertex '" + v + "'";
  }
  std::set<std::string> ids;
  for (const auto& e : q.edges) {
    if (e.id.empty()) return "empty edge id";
    if (!ids.insert(e.id).second) return "duplicate id: edge '" + e.id + "'";
    if (!seen.count(e.src)) return "dangling endpoint: source '" + e.src + "' of edge '" + e.id + "'";
    if (!seen.count(e.tgt)) return "dangling endpoint: target '" + e.tgt + "' of edge '" + e.id + "'";
  }
  for (const auto& e : q.edges)
    if (ids.count(star_name(e.id)))
      return "duplicate id: reverse edge name '" + star_name(e.id) + "' collides with an edge";
  return std::nullopt;
}

void require_valid(const Quiver& q) {
  if (auto err = validate(q)) throw ValidationError(*err);
}

std::string star_name(const std::string& edge_id) { return edge_id + kStarSuffix; }

const Edge* DoubleQuiver::edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

DoubleQuiver double_quiver(const Quiver& q) {
  require_valid(q);
  DoubleQuiver d;
  d.base = q;
  for (const auto& e : q.edges) {
    d.edges.push_back(e);
    d.eps[e.id] = 1;
  }
  for (const auto& e : q.edges) {
    std::string s = star_name(e.id);
    d.edges.push_back({s, e.tgt, e.src});
    d.eps[s] = -1;
    d.star[e.id] = s;
    d.star[s] = e.id;
  }
  return d;
}

std::string separated_source_vertex(const std::string& edge_id) { return "v_" + edge_id; }
std::string separated_target_vertex(const std::string& edge_id) { return "v_" + edge_id + kStarSuffix; }

Quiver separated(const Quiver& q) {
  require_valid(q);
  Quiver s;
  for (const auto& e : q.edges) {
    s.vertices.push_back(separated_source_vertex(e.id));
    s.vertices.push_back(separated_target_vertex(e.id));
    s.edges.push_back({e.id, separated_source_vertex(e.id), separated_target_vertex(e.id)});
  }
  return s;
}

FusionOrder default_fusion_order(const Quiver& q) {
  FusionOrder ord;
  for (const auto& v : q.vertices) {
    ord.incoming[v];
    ord.outgoing[v];
  }
  for (const auto& e : q.edges) {
    ord.incoming[e.tgt].push_back(e.id);
    ord.outgoing[e.src].push_back(e.id);
  }
  for (auto& [v, list] : ord.incoming) std::sort(list.begin(), list.end());
  for (auto& [v, list] : ord.outgoing) std::sort(list.begin(), list.end());
  ord.vertex_order = q.vertices;
  std::sort(ord.vertex_order.begin(), ord.vertex_order.end());
  return ord;
}

static std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_fusion_order(const Quiver& q, const FusionOrder& ord) {
  FusionOrder def = default_fusion_order(q);
  for (const auto& v : q.vertices) {
    auto in = ord.incoming.count(v) ? ord.incoming.at(v) : std::vector<std::string>{};
    auto out = ord.outgoing.count(v) ? ord.outgoing.at(v) : std::vector<std::string>{};
    if (sorted(in) != def.incoming[v])
      throw ValidationError("fusion order at vertex '" + v + "' does not cover exactly its incoming edges");
    if (sorted(out) != def.outgoing[v])
      throw ValidationError("fusion order at vertex '" + v + "' does not cover exactly its outgoing edges");
  }
  for (const auto& [v, list] : ord.incoming)
    if (q.vertex_index(v) < 0) throw ValidationError("fusion order names unknown vertex '" + v + "'");
  if (sorted(ord.vertex_order) != def.vertex_order)
    throw ValidationError("vertex order is not a permutation of the vertex set");
}

QuiverFile parse_quiver_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("quiver file is not valid JSON: ") + ex.what());
  }
  QuiverFile f;
  try {
    for (const auto& v : j.at("vertices")) f.quiver.vertices.push_back(v.get<std::string>());
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        f.quiver.edges.push_back(
            {e.at("id").get<std::string>(), e.at("src").get<std::string>(), e.at("tgt").get<std::string>()});
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed quiver file: ") + ex.what());
  }
  require_valid(f.quiver);
  for (const auto& v : f.quiver.vertices) f.q[v] = 1;
  if (j.contains("q")) {
    for (const auto& [v, val] : j.at("q").items()) {
      if (f.quiver.vertex_index(v) < 0) throw ValidationError("q given for unknown vertex '" + v + "'");
      if (!val.is_string()) throw ParseError("q values must be rational strings, got " + val.dump());
      f.q[v] = parse_rational(val.get<std::string>());
    }
  }
  f.order = default_fusion_order(f.quiver);
  if (j.contains("fusion_order")) {
    for (const auto& [v, arr] : j.at("fusion_order").items()) {
      std::vector<std::string> in, out;
      for (const auto& item : arr) {
        std::string s = item.get<std::string>();
        if (!s.empty() && s.back() == '*')
          out.push_back(s.substr(0, s.size() - 1));
        else
          in.push_back(s);
      }
      f.order.incoming[v] = in;
      f.order.outgoing[v] = out;
    }
  }
  if (j.contains("vertex_order")) {
    f.order.vertex_order.clear();
    for (const auto& v : j.at("vertex_order")) f.order.vertex_order.push_back(v.get<std::string>());
  }
  check_fusion_order(f.quiver, f.order);
  return f;
}

QuiverFile load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open quiver file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quiver_json(ss.str());
}

std::string quiver_to_json(const QuiverFile& f) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["vertices"] = f.quiver.vertices;
  j["edges"] = ordered_json::array();
  for (const auto& e : f.quiver.edges) j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  ordered_json q = ordered_json::object();
  for (const auto& v : f.quiver.vertices)
    if (f.q.count(v)) q[v] = to_string(f.q.at(v));
  j["q"] = q;
  ordered_json fo = ordered_json::object();
  for (const auto& v : f.quiver.vertices) {
    ordered_json arr = ordered_json::array();
    if (f.order.incoming.count(v))
      for (const auto& e : f.order.incoming.at(v)) arr.push_back(e);
    if (f.order.outgoing.count(v))
      for (const auto& e : f.order.outgoing.at(v)) arr.push_back(e + "*");
    fo[v] = arr;
  }
  j["fusion_order"] = fo;
  j["vertex_order"] = f.order.vertex_order;
  return j.dump(2);
}

Quiver a2_quiver() { return {{"1", "2"}, {{"e", "1", "2"}}}; }

Quiver jordan_quiver() { return {{"o"}, {{"e", "o", "o"}}}; }

Quiver two_cycle_quiver() { return {{"1", "2"}, {{"e", "1", "2"}, {"f", "2", "1"}}}; }

Quiver star_quiver(int arms) {
  Quiver q;
  q.vertices.push_back("c");
  for (int i = 1; i <= arms; ++i) {
    std::string v = "p" + std::to_string(i);
    q.vertices.push_back(v);
    q.edges.push_back({"e" + std::to_string(i), v, "c"});
  }
  return q;
}

}  // namespace mppa
