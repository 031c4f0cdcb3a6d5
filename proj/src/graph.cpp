#include "severi/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "severi/parallel.hpp"

namespace severi {

Edge make_edge(unsigned lo, unsigned hi, unsigned weight) {
  if (lo >= hi) throw std::invalid_argument("edge needs lo < hi");
  if (weight == 0) throw std::invalid_argument("edge weight must be positive");
  if (hi == lo + 1 && weight == 1)
    throw std::invalid_argument("weight-1 edges of length 1 are not allowed");
  return Edge{lo, hi, weight};
}

LongEdgeGraph::LongEdgeGraph(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const auto& e : edges_) make_edge(e.lo, e.hi, e.weight);
  std::sort(edges_.begin(), edges_.end());
}

std::string LongEdgeGraph::key() const {
  std::string out;
  for (const auto& e : edges_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.lo) + '-' + std::to_string(e.hi) + '-' + std::to_string(e.weight);
  }
  return out;
}

Integer multiplicity(const LongEdgeGraph& g) {
  Integer mu = 1;
  for (const auto& e : g.edges()) mu *= static_cast<unsigned long>(e.weight) * e.weight;
  return mu;
}

unsigned cogenus(const LongEdgeGraph& g) {
  unsigned d = 0;
  for (const auto& e : g.edges()) d += e.cogenus();
  return d;
}

unsigned lambda(const LongEdgeGraph& g, unsigned j) {
  unsigned s = 0;
  for (const auto& e : g.edges())
    if (e.lo < j && j <= e.hi) s += e.weight;
  return s;
}

unsigned olambda(const LongEdgeGraph& g, unsigned j) {
  unsigned s = lambda(g, j);
  for (const auto& e : g.edges())
    if (j >= 1 && e.lo == j - 1 && e.hi == j) --s;
  return s;
}

namespace {
void require_nonempty(const LongEdgeGraph& g) {
  if (g.empty()) throw std::domain_error("undefined on empty graph");
}
}  // namespace

unsigned minv(const LongEdgeGraph& g) {
  require_nonempty(g);
  return g.edges().front().lo;  // sorted by lo first
}

unsigned maxv(const LongEdgeGraph& g) {
  require_nonempty(g);
  unsigned m = 0;
  for (const auto& e : g.edges()) m = std::max(m, e.hi);
  return m;
}

unsigned length(const LongEdgeGraph& g) { return maxv(g) - minv(g); }

bool epsilon0(const LongEdgeGraph& g) {
  unsigned v = minv(g);
  for (const auto& e : g.edges())
    if ((e.lo == v || e.hi == v) && e.weight != 1) return false;
  return true;
}

bool epsilon1(const LongEdgeGraph& g) {
  unsigned v = maxv(g);
  for (const auto& e : g.edges())
    if ((e.lo == v || e.hi == v) && e.weight != 1) return false;
  return true;
}

LongEdgeGraph shift(const LongEdgeGraph& g, unsigned k) {
  std::vector<Edge> out = g.edges();
  for (auto& e : out) {
    e.lo += k;
    e.hi += k;
  }
  return LongEdgeGraph(std::move(out));
}

LongEdgeGraph normalized(const LongEdgeGraph& g) {
  if (g.empty()) return g;
  unsigned m = minv(g);
  std::vector<Edge> out = g.edges();
  for (auto& e : out) {
    e.lo -= m;
    e.hi -= m;
  }
  return LongEdgeGraph(std::move(out));
}

bool is_template(const LongEdgeGraph& g) {
  if (g.empty() || minv(g) != 0) return false;
  unsigned l = maxv(g);
  for (unsigned i = 1; i < l; ++i) {
    bool covered = std::any_of(g.edges().begin(), g.edges().end(),
                               [i](const Edge& e) { return e.lo < i && i < e.hi; });
    if (!covered) return false;
  }
  return true;
}

bool is_shifted_template(const LongEdgeGraph& g) {
  return !g.empty() && is_template(normalized(g));
}

Template::Template(LongEdgeGraph g) : graph_(std::move(g)) {
  if (!is_template(graph_)) throw std::invalid_argument("not a template: " + graph_.key());
}

Template conjugate(const Template& t) {
  unsigned l = t.length();
  std::vector<Edge> out;
  out.reserve(t.graph().size());
  for (const auto& e : t.graph().edges()) out.push_back(Edge{l - e.hi, l - e.lo, e.weight});
  return Template(LongEdgeGraph(std::move(out)));
}

namespace {

// All edges with hi <= max_vertex and 1 <= cogenus <= delta, sorted.
std::vector<Edge> candidate_edges(unsigned delta, unsigned max_vertex) {
  std::vector<Edge> c;
  for (unsigned lo = 0; lo < max_vertex; ++lo)
    for (unsigned hi = lo + 1; hi <= max_vertex; ++hi)
      for (unsigned w = 1; (hi - lo) * w <= delta + 1; ++w) {
        if (hi == lo + 1 && w == 1) continue;
        c.push_back(Edge{lo, hi, w});
      }
  std::sort(c.begin(), c.end());
  return c;
}

// Multisets of candidates (nondecreasing index from `start`) with total
// cogenus exactly `remaining`.
void extend(const std::vector<Edge>& cand, std::size_t start, unsigned remaining,
            std::vector<Edge>& current, std::vector<LongEdgeGraph>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = start; i < cand.size(); ++i) {
    unsigned c = cand[i].cogenus();
    if (c > remaining) continue;
    current.push_back(cand[i]);
    extend(cand, i, remaining - c, current, out);
    current.pop_back();
  }
}

std::vector<LongEdgeGraph> graphs_with_cogenus(unsigned delta, unsigned max_vertex) {
  std::vector<LongEdgeGraph> all;
  if (delta == 0) return all;
  auto cand = candidate_edges(delta, max_vertex);
  // Partition by the first (smallest) edge.
  std::vector<std::vector<LongEdgeGraph>> parts(cand.size());
  parallel_for(cand.size(), [&](std::size_t i) {
    unsigned c = cand[i].cogenus();
    if (c > delta) return;
    std::vector<Edge> current{cand[i]};
    extend(cand, i, delta - c, current, parts[i]);
  });
  for (auto& p : parts)
    for (auto& g : p) all.push_back(std::move(g));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<LongEdgeGraph> enumerate_graphs(unsigned delta, unsigned max_vertex) {
  if (delta == 0) return {LongEdgeGraph()};
  return graphs_with_cogenus(delta, max_vertex);
}

std::vector<Template> enumerate_templates(unsigned delta) {
  std::vector<Template> out;
  if (delta == 0) return out;
  // A template of cogenus delta has length <= delta + 1: each interior
  // vertex lies strictly inside some edge, and an edge of length l has
  // l - 1 interior vertices while costing at least l - 1.
  for (auto& g : graphs_with_cogenus(delta, delta + 1)) {
    if (!is_template(g)) continue;
    if (g.size() > delta || length(g) > delta + 1)
      throw std::logic_error("template outside enumeration bounds: " + g.key());
    out.emplace_back(std::move(g));
  }
  return out;
}

nlohmann::json graph_to_json(const LongEdgeGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.lo, e.hi, e.weight});
  return {{"edges", edges}};
}

LongEdgeGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph JSON needs an \"edges\" array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("graph edge must be [lo, hi, weight]");
    for (const auto& x : e)
      if (!x.is_number_unsigned()) throw std::invalid_argument("graph edge entries must be nonnegative");
    edges.push_back(make_edge(e[0].get<unsigned>(), e[1].get<unsigned>(), e[2].get<unsigned>()));
  }
  return LongEdgeGraph(std::move(edges));
}

}  // namespace severi
