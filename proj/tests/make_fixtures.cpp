// Regenerates tests/fixtures/corpus.json from the slow oracles:
//   make_fixtures > tests/fixtures/corpus.json
#include <chrono>
#include <iostream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Entry {
  std::string name;
  std::vector<std::pair<long, long>> vertices;
  unsigned max_delta;
};

std::vector<Entry> corpus() {
  std::vector<Entry> out;
  for (long d = 1; d <= 5; ++d)
    out.push_back({"triangle " + std::to_string(d), {{0, 0}, {d, 0}, {0, d}}, d >= 3 ? 4u : 3u});
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      out.push_back({"rectangle " + std::to_string(a) + "x" + std::to_string(b),
                     {{0, 0}, {a, 0}, {a, b}, {0, b}},
                     3u});
  out.push_back({"trapezoid with determinant-2 vertex", {{0, 0}, {4, 4}, {2, 6}, {0, 6}}, 3});
  out.push_back({"top determinant 3", {{0, 0}, {6, 0}, {6, 2}, {2, 4}, {0, 2}}, 3});
  return out;
}

}  // namespace

int main() {
  json list = json::array();
  for (const auto& e : corpus()) {
    auto t0 = std::chrono::steady_clock::now();
    auto b = oracle::boundary_from_vertices(e.vertices);
    json verts = json::array();
    for (auto [x, y] : e.vertices) verts.push_back({x, y});
    std::vector<oracle::Rat> n{1};
    json N = json::array({"1"});
    for (unsigned d = 1; d <= e.max_delta && b.min_edge + 1 >= d; ++d) {
      n.push_back(oracle::Rat(oracle::severi_bruteforce(b, d)));
      N.push_back(n.back().get_str());
    }
    json Q = json::array();
    auto q = oracle::log_naive(n);
    for (std::size_t d = 1; d < q.size(); ++d) Q.push_back(q[d].get_str());
    list.push_back({{"name", e.name}, {"vertices", verts}, {"min_edge", b.min_edge}, {"N", N}, {"Q", Q}});
    std::cerr << e.name << ": "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  }
  std::cout << list.dump(1) << "\n";
}
