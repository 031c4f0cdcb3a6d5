#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "severi/coeffs.hpp"
#include "severi/series.hpp"

namespace severi {

// revert(DG2) == t A(t) and, for each 1 <= i <= order,
// sum_d b_{d,i} t^d == log P(g(t)^i), all to `order`.
bool check_g_identity(unsigned order, CoefficientStore& store = CoefficientStore::global());

// (B1, B2) truncated at `order`.
std::pair<RatSeries, RatSeries> b1_b2(unsigned order, CoefficientStore& store = CoefficientStore::global());

struct GyzResult {
  bool ok = true;
  std::optional<unsigned> first_mismatch;  // q-exponent
  Rational lhs, rhs;                       // coefficients at the mismatch
  RatSeries left, right;
};

// `sample` holds values for (x, y, z, w, s, s_1, s_2, ...); missing entries are 0.
GyzResult gyz_check(unsigned order, std::span<const Rational> sample,
                    CoefficientStore& store = CoefficientStore::global());

}  // namespace severi
