#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "severi/arith.hpp"
#include "severi/graph.hpp"
#include "severi/orderings.hpp"

namespace testing {

inline severi::Rational R(const char* s) { return severi::parse_rational(s); }

inline severi::LongEdgeGraph G(std::initializer_list<std::array<unsigned, 3>> edges) {
  std::vector<severi::Edge> v;
  for (const auto& e : edges) v.push_back(severi::make_edge(e[0], e[1], e[2]));
  return severi::LongEdgeGraph(v);
}

inline oracle::EdgeList edges_of(const severi::LongEdgeGraph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.push_back({e.lo, e.hi, e.weight});
  return out;
}

inline severi::LongEdgeGraph from_edges(const oracle::EdgeList& edges) {
  std::vector<severi::Edge> v;
  for (const auto& e : edges) v.push_back(severi::make_edge(e[0], e[1], e[2]));
  return severi::LongEdgeGraph(v);
}

inline severi::BetaSeq B(std::initializer_list<long> v) { return severi::BetaSeq(std::vector<long>(v)); }

// Small-cogenus template rows: graph key, delta, length, mu, eps0, eps1, lambda, olambda,
// zeta0, zeta1, zeta2, eta0.
struct TemplateRow {
  const char* key;
  unsigned delta, length, mu;
  bool eps0, eps1;
  std::vector<unsigned> lambda, olambda;
  const char *zeta0, *zeta1, *zeta2, *eta0;
};

inline const std::vector<TemplateRow>& small_templates() {
  static const std::vector<TemplateRow> rows = {
      {"0-1-2", 1, 1, 4, false, false, {2}, {1}, "1", "0", "0", "-1"},
      {"0-2-1", 1, 2, 1, true, true, {1, 1}, {1, 1}, "2", "1", "0", "0"},
      {"0-1-3", 2, 1, 9, false, false, {3}, {2}, "1", "0", "0", "-2"},
      {"0-1-2,0-1-2", 2, 1, 16, false, false, {4}, {2}, "-3/2", "0", "0", "5/2"},
      {"0-2-1,0-2-1", 2, 2, 1, true, true, {2, 2}, {2, 2}, "-3", "-3/2", "0", "1"},
      {"0-1-2,0-2-1", 2, 2, 4, false, true, {3, 1}, {2, 1}, "-3", "-1", "0", "2"},
      {"0-2-1,1-2-2", 2, 2, 4, true, false, {1, 3}, {1, 2}, "-3", "-2", "0", "2"},
      {"0-3-1", 2, 3, 1, true, true, {1, 1, 1}, {1, 1, 1}, "3", "3", "1", "0"},
      {"0-2-1,1-3-1", 2, 3, 1, true, true, {1, 2, 1}, {1, 2, 1}, "-3", "-3", "-1", "0"},
  };
  return rows;
}

}  // namespace testing
