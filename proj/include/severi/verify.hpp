#pragma once

#include <random>
#include <string>
#include <vector>

#include "severi/coeffs.hpp"
#include "severi/polygon.hpp"

namespace severi {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// table1, coeffs, gyz, oracle, toric
const std::vector<std::string>& verify_suite_names();

// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_verify_suite(const std::string& suite, unsigned order,
                                          CoefficientStore& store = CoefficientStore::global());

struct NamedPolygon {
  std::string name;
  HTPolygon polygon;
  unsigned max_delta;  // largest delta the oracle suite runs on it
};

// Triangles d <= 5, rectangles up to 4x4, a trapezoid with a determinant-2
// internal vertex, and a polygon with a determinant-3 top vertex.
std::vector<NamedPolygon> reference_corpus();

// Random h-transverse polygon with height <= max_height.
HTPolygon random_polygon(std::mt19937_64& rng, unsigned max_height = 6);

}  // namespace severi
