#include <doctest.h>

#include <random>
#include <thread>

#include "helpers.hpp"
#include "severi/coeffs.hpp"

using namespace severi;
using testing::B;
using testing::R;

namespace {

CoefficientStore& store() { return CoefficientStore::global(); }

// Q at beta as log of the brute-force node count sum.
Rational q_oracle(const std::vector<long>& beta, unsigned delta) {
  const unsigned M = static_cast<unsigned>(beta.size() - 1);
  std::vector<oracle::Rat> n{1};
  for (unsigned d = 1; d <= delta; ++d) {
    oracle::Int total = 0;
    for (const auto& g : oracle::all_graphs(d, M + 1)) {
      oracle::Int mu = 1;
      for (const auto& e : g) mu *= e[2] * e[2];
      total += mu * oracle::count_orderings(g, beta, true);
    }
    n.push_back(total);
  }
  return oracle::log_naive(n)[delta];
}

}  // namespace

TEST_CASE("coefficient tables for cogenus 1 and 2") {
  const auto& t1 = store().table(1);
  CHECK(t1.A == 3);
  CHECK(t1.L == -2);
  CHECK(t1.H == 0);
  CHECK(t1.D == 0);
  CHECK(t1.C == 4);
  CHECK(t1.Ctilde == 0);
  CHECK(t1.b == std::vector<Rational>{1});
  const auto& t2 = store().table(2);
  CHECK(t2.A == -21);
  CHECK(t2.L == R("39/2"));
  CHECK(t2.H == 0);
  CHECK(t2.D == 4);
  CHECK(t2.C == -38);
  CHECK(t2.Ctilde == -36);
  CHECK(t2.b == std::vector<Rational>{R("-9/2"), 1});
  CHECK(t2.b_at(3) == 0);
  CHECK(t2.b_at(0) == 0);
}

TEST_CASE("cogenus 3 leading coefficient matches the reversion of DG2") {
  auto A = oracle::a_from_reversion(3);
  CHECK(A[0] == 3);
  CHECK(A[1] == -21);
  CHECK(A[2] == 230);
  CHECK(store().table(3).A == A[2]);
}

TEST_CASE("b coefficients") {
  CHECK(b_coeffs(1, 1) == 1);
  CHECK(b_coeffs(1, 2) == 0);
  CHECK(b_coeffs(2, 1) == R("-9/2"));
  CHECK(b_coeffs(2, 2) == 1);
  CHECK(b_coeffs(2, 3) == 0);
  CHECK(b_coeffs(3, 1) == R("130/3"));
  CHECK(b_coeffs(3, 2) == -12);
  CHECK(b_coeffs(3, 3) == 1);
  CHECK(a_series(2).coeffs() == std::vector<Rational>{1, -6, 60});
}

TEST_CASE("H vanishes and the two L sums agree") {
  for (unsigned d = 1; d <= 3; ++d) {
    auto sums = template_coefficients(store().templates(d));
    CHECK(sums.H == 0);
    CHECK(sums.L == sums.L_from_eta0);
    const auto& t = store().table(d);
    CHECK(t.Ctilde == t.C - 4 * t.D - 4 * t.b_at(1));
  }
}

TEST_CASE("Q at a width sequence") {
  CHECK(q_beta_delta(B({0, 1, 2, 3}), 1) == 12);
  CHECK(q_beta_delta(B({5}), 1) == 0);
  CHECK(q_beta_delta(B({5}), 2) == 0);
  CHECK(q_delta_linearized(B({5}), 2) == 0);
}

TEST_CASE("Q at a width sequence agrees with the graph sum and the log of node counts") {
  unsigned checked = 0;
  for (unsigned height = 1; height <= 4; ++height) {
    std::vector<std::vector<long>> betas{{}};
    for (unsigned i = 0; i <= height; ++i) {
      std::vector<std::vector<long>> next;
      for (const auto& b : betas)
        for (long v = 0; v <= 4; ++v) {
          next.push_back(b);
          next.back().push_back(v);
        }
      betas.swap(next);
    }
    for (std::size_t k = 0; k < betas.size(); k += height <= 2 ? 1 : 7) {
      BetaSeq beta(betas[k]);
      for (unsigned d = 1; d <= 2; ++d) {
        auto q = q_beta_delta(beta, d);
        REQUIRE(q == q_beta_delta_from_graphs(beta, d));
        if (k % 5 == 0) REQUIRE(q == q_oracle(betas[k], d));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
  CHECK(q_beta_delta(B({1, 3, 4, 4, 2}), 3) == q_oracle({1, 3, 4, 4, 2}, 3));
  CHECK(q_beta_delta(B({2, 3, 4, 4, 4, 3}), 3) == q_oracle({2, 3, 4, 4, 4, 3}, 3));
}

TEST_CASE("linearized Q equals the area formula under the run conditions") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> step(-2, 2), top(0, 4), len(0, 3);
  for (unsigned delta = 1; delta <= 3; ++delta) {
    auto sums = template_coefficients(store().templates(delta));
    int done = 0;
    while (done < 25) {
      // d_1 = ... = d_{delta-1} and the last delta - 1 entries equal.
      std::vector<long> d{top(rng)};
      long first = step(rng), last = step(rng);
      for (unsigned i = 1; i < delta; ++i) d.push_back(first);
      for (long i = 0, n = len(rng); i < n; ++i) d.push_back(step(rng));
      for (unsigned i = 1; i < delta; ++i) d.push_back(last);
      if (d.size() < 2) d.push_back(step(rng));
      BetaSeq beta(std::vector<long>{0});
      try {
        beta = beta_from_divergence(d);
      } catch (const std::invalid_argument&) {
        continue;
      }
      CHECK(q_delta_linearized(beta, delta) == q_delta_closed_form(beta_stats(d), sums));
      ++done;
    }
  }
}

TEST_CASE("width statistics") {
  std::vector<long> rect{3, 0, 0, 0, 0}, tri{0, 1, 1, 1}, one{4};
  auto r = beta_stats(rect);
  CHECK(r.area == 2 * 3 * 4);
  CHECK(r.LL == 2 * 3 + 2 * 4);
  CHECK(r.height == 4);
  CHECK(r.idet == 0);
  auto t = beta_stats(tri);
  CHECK(t.area == 9);
  CHECK(t.LL == 9);
  CHECK_THROWS_AS(beta_stats(one), std::invalid_argument);
}

TEST_CASE("top-vertex corrections") {
  for (unsigned p = 1; p <= 5; ++p) CHECK(diffq(p, 1) == -Rational(p));
  for (unsigned p = 2; p <= 5; ++p) CHECK(diffq(p, 2) == R("19/2") * p - 9);
  for (unsigned d = 1; d <= 3; ++d) {
    CHECK(diffq(0, d) == 0);
    for (unsigned p = d; p <= d + 2; ++p) CHECK(diffq(p, d) == diffq_closed_form(p, d));
    const auto& t = store().table(d);
    CHECK(t.D + diffq(1, d) + t.b_at(1) == 0);
    CHECK(diffq(2, d) + 2 * t.b_at(1) - t.b_at(2) == 0);
    CHECK(cor(0, d) == 0);
    CHECK(cor(1, d) == 0);
    CHECK(cor(2, d) == 0);
  }
  CHECK(cor(3, 1) == -1);
  CHECK(cor(3, 2) == R("21/2"));
  CHECK(cor_doubleprime(0) == 0);
  CHECK(cor_doubleprime(1) == 0);
  CHECK(cor_doubleprime(2) == 0);
  CHECK(cor_doubleprime(3) == R("4/3"));
}

TEST_CASE("coefficient table json") {
  auto j = coeff_table_to_json(store().table(2));
  CHECK(j.dump() == R"({"A":"-21","C":"-38","Ctilde":"-36","D":"4","H":"0","L":"39/2","b":["-9/2","1"],"delta":2})");
}

TEST_CASE("concurrent first use computes each table once") {
  CoefficientStore local;
  std::vector<std::thread> pool;
  std::vector<Rational> seen(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&, i] { seen[i] = local.table(1 + i % 3).A + local.diffq(2, 1 + i % 2); });
  for (auto& t : pool) t.join();
  CoefficientStore serial;
  for (int i = 0; i < 8; ++i) CHECK(seen[i] == serial.table(1 + i % 3).A + serial.diffq(2, 1 + i % 2));
}
