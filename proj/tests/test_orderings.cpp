#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "severi/coeffs.hpp"
#include "severi/orderings.hpp"

using namespace severi;
using testing::B;
using testing::G;
using testing::R;

TEST_CASE("beta from divergence") {
  std::vector<long> a{2, 0, 0}, b{0, 1, 1, -1, -1}, bad{1, -2, 5};
  CHECK(beta_from_divergence(a) == B({2, 2, 2}));
  CHECK(beta_from_divergence(b) == B({0, 1, 2, 1, 0}));
  CHECK_THROWS_WITH_AS(beta_from_divergence(bad), "not a valid width sequence", std::invalid_argument);
  CHECK_THROWS_AS(BetaSeq({}), std::invalid_argument);
  CHECK_THROWS_AS(BetaSeq({1, -1}), std::invalid_argument);
}

TEST_CASE("allowability") {
  CHECK(allowability(LongEdgeGraph(), B({0})) == Allowability::strictly_allowable);
  CHECK(allowability(LongEdgeGraph(), B({3, 1, 4})) == Allowability::strictly_allowable);
  auto w2 = G({{0, 1, 2}});
  CHECK(allowability(w2, B({1})) == Allowability::not_allowable);
  CHECK(allowability(w2, B({2})) == Allowability::allowable);
  CHECK(allowability(w2, B({2, 2})) == Allowability::allowable);
  CHECK(allowability(shift(w2, 1), B({2, 2, 2})) == Allowability::strictly_allowable);
  // maxv beyond M + 1
  CHECK(allowability(G({{0, 3, 1}}), B({5, 5})) == Allowability::not_allowable);
  // semiallowable discounts edges of length one
  CHECK_FALSE(is_semiallowable(w2, B({0})));
  CHECK(is_semiallowable(w2, B({1})));
}

TEST_CASE("ordering counts, worked examples") {
  CHECK(p_beta(LongEdgeGraph(), B({4, 2})) == 1);
  CHECK(p_beta_strict(LongEdgeGraph(), B({0})) == 1);
  CHECK(p_beta(G({{0, 1, 2}}), B({3})) == 2);
  CHECK(p_beta_strict(G({{0, 1, 2}}), B({3})) == 0);
  CHECK(p_beta(G({{0, 2, 1}}), B({2, 3})) == 5);
  for (long b0 = 2; b0 <= 6; ++b0) {
    CHECK(oracle::count_orderings({{0, 1, 2}}, {b0}, false) == b0 - 1);
    CHECK(p_beta(G({{0, 1, 2}}), B({b0})) == b0 - 1);
  }
  for (long b0 = 1; b0 <= 5; ++b0)
    for (long b1 = 1; b1 <= 5; ++b1) {
      CHECK(oracle::count_orderings({{0, 2, 1}}, {b0, b1}, false) == b0 + b1);
      CHECK(p_beta(G({{0, 2, 1}}), B({b0, b1})) == b0 + b1);
    }
}

namespace {

// Every beta of the given height with entries in [0, max_entry].
std::vector<std::vector<long>> all_betas(unsigned height, long max_entry) {
  std::vector<std::vector<long>> out{{}};
  for (unsigned i = 0; i <= height; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& b : out)
      for (long v = 0; v <= max_entry; ++v) {
        next.push_back(b);
        next.back().push_back(v);
      }
    out.swap(next);
  }
  return out;
}

}  // namespace

TEST_CASE("ordering counts agree with direct enumeration (up to 3 edges, entries up to 5)") {
  unsigned checked = 0;
  for (unsigned height = 0; height <= 2; ++height) {
    std::vector<oracle::EdgeList> graphs;
    for (unsigned d = 0; d <= 4; ++d)
      for (auto& g : oracle::all_graphs(d, height + 1))
        if (g.size() <= 3) graphs.push_back(g);
    for (const auto& b : all_betas(height, 5)) {
      BetaSeq beta(b);
      for (const auto& g : graphs) {
        auto lg = testing::from_edges(g);
        REQUIRE_MESSAGE(p_beta(lg, beta) == oracle::count_orderings(g, b, false), lg.key());
        REQUIRE_MESSAGE(p_beta_strict(lg, beta) == oracle::count_orderings(g, b, true), lg.key());
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("ordering counts ignore widths outside the graph's span") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(0, 6);
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& t : enumerate_templates(d)) {
      auto g = shift(t.graph(), 1);
      const unsigned M = maxv(g) + 1;
      std::vector<long> b(M + 1);
      for (auto& x : b) x = entry(rng) + 3;
      auto p0 = p_beta(g, BetaSeq(b));
      for (unsigned i = 0; i <= M; ++i) {
        if (i >= minv(g) && i < maxv(g)) continue;
        auto c = b;
        c[i] = entry(rng);
        CHECK(p_beta(g, BetaSeq(c)) == p0);
      }
    }
}

TEST_CASE("phi worked examples") {
  auto w2 = G({{0, 1, 2}});
  CHECK(phi_beta(w2, B({5})) == Rational(p_beta(w2, B({5}))));
  auto arc = G({{1, 3, 1}});
  CHECK(phi_beta(arc, B({1, 3, 4, 2})) == Rational(p_beta(arc, B({1, 3, 4, 2}))));
  CHECK(phi_beta_strict(G({{0, 2, 1}, {2, 4, 1}}), B({3, 3, 3, 3, 3})) == 0);
  auto parallel = G({{0, 2, 1}, {0, 2, 1}});
  for (long b0 = 6; b0 <= 9; ++b0)
    for (long b1 = 6; b1 <= 9; ++b1)
      CHECK(phi_beta(parallel, B({b0, b1})) == R("-3/2") * b0 - R("3/2") * b1 + 1);
}

TEST_CASE("phi agrees with the tuple-sum definition") {
  std::vector<std::vector<long>> betas{{2, 3}, {4, 4, 4}, {1, 2, 3, 2}, {5, 3, 5, 1}, {3, 5, 4, 3, 2}};
  for (const auto& b : betas) {
    const unsigned M = static_cast<unsigned>(b.size() - 1);
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& g : oracle::all_graphs(d, M + 1)) {
        if (g.size() > 3) continue;
        auto lg = testing::from_edges(g);
        REQUIRE_MESSAGE(phi_beta(lg, BetaSeq(b)) == oracle::phi_by_tuples(g, b, false), lg.key());
        REQUIRE_MESSAGE(phi_beta_strict(lg, BetaSeq(b)) == oracle::phi_by_tuples(g, b, true), lg.key());
      }
  }
}

TEST_CASE("linear forms") {
  auto f = make_linear_form({R("5"), R("1"), R("2"), R("3")});
  CHECK(f.length() == 3);
  CHECK(f.zeta0 == 6);
  CHECK(f.zeta1 == 2 + 2 * 3);
  CHECK(f.zeta2 == 3);
  CHECK(f.evaluate(B({9, 1, 10, 100}), 1) == 5 + 1 + 20 + 300);
}

TEST_CASE("fitted forms reproduce the small template table") {
  for (const auto& row : testing::small_templates()) {
    CAPTURE(row.key);
    LongEdgeGraph g;
    for (const auto& t : enumerate_templates(row.delta))
      if (t.graph().key() == row.key) g = t.graph();
    REQUIRE_FALSE(g.empty());
    auto f = fit_linear_phi(g);
    CHECK(f.length() == row.length);
    CHECK(f.zeta0 == R(row.zeta0));
    CHECK(f.zeta1 == R(row.zeta1));
    CHECK(f.zeta2 == R(row.zeta2));
    CHECK(f.eta[0] == R(row.eta0));
  }
  auto w2 = fit_linear_phi(G({{0, 1, 2}}));
  CHECK(w2.eta == std::vector<Rational>{-1, 1});
  CHECK_THROWS_AS(fit_linear_phi(LongEdgeGraph()), std::invalid_argument);
}

TEST_CASE("fitted forms match phi on random semiallowable widths") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> extra(0, 5), pad(0, 4), off(0, 2);
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& rec : compute_template_data(d).records) {
      const auto& t = rec.tmpl.graph();
      for (int trial = 0; trial < 4; ++trial) {
        unsigned k = static_cast<unsigned>(off(rng));
        auto g = shift(t, k);
        const unsigned M = maxv(g) - 1 + static_cast<unsigned>(off(rng));
        std::vector<long> b(M + 1);
        for (unsigned i = 0; i <= M; ++i) b[i] = pad(rng);
        for (unsigned j = 1; j <= rec.length; ++j) b[k + j - 1] = olambda(t, j) + extra(rng);
        BetaSeq beta(b);
        REQUIRE(is_semiallowable(g, beta));
        CHECK_MESSAGE(phi_beta(g, beta) == rec.form.evaluate(beta, k), t.key());
      }
    }
}

TEST_CASE("conjugate templates have mirrored forms") {
  for (unsigned d = 1; d <= 3; ++d) {
    auto data = compute_template_data(d);
    std::map<std::string, LinearForm> forms;
    for (const auto& r : data.records) forms.emplace(r.tmpl.graph().key(), r.form);
    for (const auto& r : data.records) {
      const auto& c = forms.at(conjugate(r.tmpl).graph().key());
      const unsigned l = r.length;
      CAPTURE(r.tmpl.graph().key());
      CHECK(c.eta[0] == r.form.eta[0]);
      for (unsigned i = 1; i <= l; ++i) CHECK(c.eta[i] == r.form.eta[l + 1 - i]);
      CHECK(c.zeta0 == r.form.zeta0);
      CHECK(r.form.zeta1 + c.zeta1 == Rational(l - 1) * r.form.zeta0);
    }
  }
}
