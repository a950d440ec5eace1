#pragma once

#include "mppa/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mppa {

struct Edge {
  std::string id;
  std::string src;
  std::string tgt;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  int vertex_index(const std::string& v) const;  // -1 if absent
  const Edge* edge(const std::string& id) const;
};

// nullopt when valid, otherwise the first violated invariant.
std::optional<std::string> validate(const Quiver& q);
void require_valid(const Quiver& q);

// The reverse edge of e is named e + kStarSuffix.
inline constexpr const char* kStarSuffix = "star";
std::string star_name(const std::string& edge_id);

struct DoubleQuiver {
  Quiver base;
  std::vector<Edge> edges;  // E then E*, in base order
  std::map<std::string, std::string> star;
  std::map<std::string, int> eps;

  const Edge* edge(const std::string& id) const;
};

DoubleQuiver double_quiver(const Quiver& q);

// One A_2 per edge e: vertices v_<e> (source side) and v_<e>star (target side).
Quiver separated(const Quiver& q);
std::string separated_source_vertex(const std::string& edge_id);
std::string separated_target_vertex(const std::string& edge_id);

using DimensionVector = std::map<std::string, int>;

struct FusionOrder {
  std::map<std::string, std::vector<std::string>> incoming;  // E ∩ t^{-1}(v)
  std::map<std::string, std::vector<std::string>> outgoing;  // E ∩ s^{-1}(v), i.e. E* ∩ t^{-1}(v)
  std::vector<std::string> vertex_order;
};

FusionOrder default_fusion_order(const Quiver& q);
// Throws ValidationError when the order does not cover exactly the incident edges.
void check_fusion_order(const Quiver& q, const FusionOrder& ord);

struct QuiverFile {
  Quiver quiver;
  std::map<std::string, Rational> q;
  FusionOrder order;
};

QuiverFile parse_quiver_json(const std::string& text);
QuiverFile load_quiver_file(const std::string& path);
std::string quiver_to_json(const QuiverFile& file);

// Small test quivers.
Quiver a2_quiver();
Quiver jordan_quiver();
Quiver two_cycle_quiver();
Quiver star_quiver(int arms);

}  // namespace mppa
