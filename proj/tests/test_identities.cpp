#include <doctest.h>

#include "helpers.hpp"
#include "severi/identities.hpp"

using namespace severi;
using testing::R;

TEST_CASE("reversion of DG2 and the b series") {
  for (unsigned order = 1; order <= 4; ++order) CHECK(check_g_identity(order));
}

TEST_CASE("B1 and B2") {
  auto [b1, b2] = b1_b2(3);
  CHECK(b1[0] == 1);
  CHECK(b2[0] == 1);
  CHECK(b2[1] == 5);
  CHECK(b1[1] == -1);
  CHECK(b1.order() == 3);
}

TEST_CASE("GYZ identity on sampled variables") {
  std::vector<std::vector<Rational>> samples = {
      {1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0},
      {R("2"), R("-3"), R("1/3"), R("5"), R("1"), R("2")},
      {R("-1/2"), R("7"), R("9"), R("3"), R("0"), R("-4"), R("1")},
  };
  for (unsigned order : {2u, 3u}) {
    for (const auto& s : samples) {
      auto r = gyz_check(order, s);
      CHECK_MESSAGE(r.ok, "first mismatch at q^" << (r.first_mismatch ? *r.first_mismatch : 0));
      CHECK(r.left.order() == order);
    }
  }
  auto zero = gyz_check(2, samples[1]);
  CHECK(zero.left == RatSeries::constant(1, 2));
  CHECK(zero.right == RatSeries::constant(1, 2));
}
