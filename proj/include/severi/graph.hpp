#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

#include "severi/arith.hpp"

namespace severi {

struct Edge {
  unsigned lo = 0;
  unsigned hi = 0;
  unsigned weight = 1;

  unsigned length() const { return hi - lo; }
  unsigned cogenus() const { return length() * weight - 1; }

  auto operator<=>(const Edge&) const = default;
};

// Throws std::invalid_argument if lo >= hi, weight == 0, or the edge is a
// weight-1 edge of length 1.
Edge make_edge(unsigned lo, unsigned hi, unsigned weight);

// Multiset of edges, kept sorted by (lo, hi, weight).
class LongEdgeGraph {
 public:
  LongEdgeGraph() = default;
  explicit LongEdgeGraph(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

  // e.g. "0-1-2,0-2-1"; empty graph gives "".
  std::string key() const;

  auto operator<=>(const LongEdgeGraph&) const = default;
  bool operator==(const LongEdgeGraph&) const = default;

 private:
  std::vector<Edge> edges_;
};

Integer multiplicity(const LongEdgeGraph& g);
unsigned cogenus(const LongEdgeGraph& g);
unsigned lambda(const LongEdgeGraph& g, unsigned j);
unsigned olambda(const LongEdgeGraph& g, unsigned j);

// These throw std::domain_error on the empty graph.
unsigned minv(const LongEdgeGraph& g);
unsigned maxv(const LongEdgeGraph& g);
unsigned length(const LongEdgeGraph& g);
bool epsilon0(const LongEdgeGraph& g);
bool epsilon1(const LongEdgeGraph& g);

LongEdgeGraph shift(const LongEdgeGraph& g, unsigned k);
// Shift so that minv becomes 0. The empty graph is returned unchanged.
LongEdgeGraph normalized(const LongEdgeGraph& g);

bool is_template(const LongEdgeGraph& g);
bool is_shifted_template(const LongEdgeGraph& g);

class Template {
 public:
  // Throws std::invalid_argument if g is not a template.
  explicit Template(LongEdgeGraph g);

  const LongEdgeGraph& graph() const { return graph_; }
  unsigned length() const { return severi::length(graph_); }

  auto operator<=>(const Template&) const = default;
  bool operator==(const Template&) const = default;

 private:
  LongEdgeGraph graph_;
};

Template conjugate(const Template& t);

std::vector<Template> enumerate_templates(unsigned delta);
// Sorted. Cogenus 0 gives just the empty graph.
std::vector<LongEdgeGraph> enumerate_graphs(unsigned delta, unsigned max_vertex);

nlohmann::json graph_to_json(const LongEdgeGraph& g);
LongEdgeGraph graph_from_json(const nlohmann::json& j);

}  // namespace severi
