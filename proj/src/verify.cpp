#include "severi/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "severi/identities.hpp"
#include "severi/severi.hpp"

namespace severi {

namespace {

struct TableRow {
  const char* key;
  unsigned delta, length;
  long mu;
  bool eps0, eps1;
  std::vector<unsigned> lambda, olambda;
  const char *zeta0, *zeta1, *zeta2, *eta0;
};

// Every template of cogenus 1 and 2 with its combinatorial data.
const std::vector<TableRow>& reference_templates() {
  static const std::vector<TableRow> rows = {
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

std::string row_mismatch(const TemplateRecord& r, const TableRow& t) {
  const LongEdgeGraph& g = r.tmpl.graph();
  std::vector<unsigned> lam, olam;
  for (unsigned j = 1; j <= r.length; ++j) {
    lam.push_back(lambda(g, j));
    olam.push_back(olambda(g, j));
  }
  if (cogenus(g) != t.delta) return "delta";
  if (r.length != t.length) return "length";
  if (r.mu != t.mu) return "mu";
  if (r.eps0 != t.eps0 || r.eps1 != t.eps1) return "epsilon";
  if (lam != t.lambda) return "lambda";
  if (olam != t.olambda) return "olambda";
  if (r.form.zeta0 != parse_rational(t.zeta0)) return "zeta0";
  if (r.form.zeta1 != parse_rational(t.zeta1)) return "zeta1";
  if (r.form.zeta2 != parse_rational(t.zeta2)) return "zeta2";
  if (r.form.eta[0] != parse_rational(t.eta0)) return "eta0";
  return "";
}

void add(std::vector<CheckResult>& out, std::string name, bool ok, std::string detail = "") {
  out.push_back({std::move(name), ok, std::move(detail)});
}

std::vector<CheckResult> suite_table1(CoefficientStore& store) {
  std::vector<CheckResult> out;
  for (unsigned d = 1; d <= 2; ++d) {
    const auto& data = store.templates(d);
    std::size_t expected = 0;
    for (const auto& row : reference_templates()) expected += row.delta == d;
    add(out, "template count delta=" + std::to_string(d), data.records.size() == expected,
        std::to_string(data.records.size()) + " templates");
    for (const auto& row : reference_templates()) {
      if (row.delta != d) continue;
      auto it = std::find_if(data.records.begin(), data.records.end(),
                             [&](const TemplateRecord& r) { return r.tmpl.graph().key() == row.key; });
      if (it == data.records.end()) {
        add(out, std::string("template ") + row.key, false, "not enumerated");
        continue;
      }
      std::string bad = row_mismatch(*it, row);
      add(out, std::string("template ") + row.key, bad.empty(), bad.empty() ? "" : "column " + bad + " differs");
    }
  }
  return out;
}

std::vector<CheckResult> suite_coeffs(unsigned order, CoefficientStore& store) {
  std::vector<CheckResult> out;
  for (unsigned d = 1; d <= order; ++d) {
    std::string tag = "delta=" + std::to_string(d);
    TemplateSums s = template_coefficients(store.templates(d));
    add(out, "H = 0, " + tag, s.H == 0, "H = " + to_string(s.H));
    add(out, "L agrees with (1/2) sum mu eta0, " + tag, s.L == s.L_from_eta0,
        to_string(s.L) + " vs " + to_string(s.L_from_eta0));
    const CoeffTable& t = store.table(d);
    add(out, "Ctilde = C - 4D - 4b1, " + tag, t.Ctilde == t.C - 4 * t.D - 4 * t.b_at(1));
    for (unsigned p = d; p <= d + 2; ++p) {
      Rational direct = store.diffq(p, d), closed = diffq_closed_form(p, d, store);
      add(out, "DiffQ(" + std::to_string(p) + "," + std::to_string(d) + ") closed form", direct == closed,
          to_string(direct) + " vs " + to_string(closed));
    }
    Rational id1 = t.D + store.diffq(1, d) + t.b_at(1);
    Rational id2 = store.diffq(2, d) + 2 * t.b_at(1) - t.b_at(2);
    add(out, "D + DiffQ(1) + b1 = 0, " + tag, id1 == 0, to_string(id1));
    add(out, "DiffQ(2) + 2b1 - b2 = 0, " + tag, id2 == 0, to_string(id2));
    add(out, "COR(1) = COR(2) = 0, " + tag, cor(1, d, store) == 0 && cor(2, d, store) == 0);
  }
  add(out, "revert(DG2) = t A(t) and b-series identity to order " + std::to_string(order),
      check_g_identity(order, store));
  return out;
}

std::vector<std::vector<Rational>> gyz_samples(unsigned order) {
  std::vector<std::vector<long>> raw = {
      {1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 1, 0},
      {0, 0, 0, 1, 2, 0, 1}, {3, -2, 5, 7, -1, 2, 3}, {-4, 9, 1, -3, 2, -1, 5},
  };
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < raw[k].size() && i < 5 + order - 1; ++i) v.emplace_back(raw[k][i]);
    if (k == 5) v[2] = make_rational(1, 3);  // fractional exponent in the disc factor
    out.push_back(v);
  }
  return out;
}

std::vector<CheckResult> suite_gyz(unsigned order, CoefficientStore& store) {
  std::vector<CheckResult> out;
  auto samples = gyz_samples(order);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    GyzResult r = gyz_check(order, samples[k], store);
    std::string detail;
    if (!r.ok)
      detail = "q^" + std::to_string(*r.first_mismatch) + ": " + to_string(r.lhs) + " vs " + to_string(r.rhs);
    add(out, "GYZ identity sample " + std::to_string(k + 1) + " to order " + std::to_string(order), r.ok, detail);
  }
  return out;
}

std::vector<CheckResult> suite_oracle(unsigned order, CoefficientStore& store) {
  std::vector<CheckResult> out;
  for (const auto& np : reference_corpus()) {
    unsigned dmax = std::min(order, np.max_delta);
    NodeCountReport rep = report(np.polygon, dmax, {Method::bruteforce, Method::closed, Method::geometric}, store);
    std::string detail;
    for (const auto& row : rep.rows) {
      detail += "N^" + std::to_string(row.delta) + "=";
      auto it = row.values.find(Method::bruteforce);
      detail += it != row.values.end() && it->second.N ? to_string(*it->second.N) : "n/a";
      detail += " ";
    }
    add(out, np.name + " methods agree up to delta=" + std::to_string(dmax), rep.ok, detail);
  }
  // Template double sum versus the sum over all graphs.
  bool all = true;
  std::string first_bad;
  for (unsigned d = 1; d <= std::min(order, 2u); ++d)
    for (unsigned M = 0; M <= 3; ++M) {
      std::vector<long> b(M + 1, 0);
      for (;;) {
        BetaSeq beta(b);
        if (q_beta_delta(beta, d, store) != q_beta_delta_from_graphs(beta, d)) {
          all = false;
          if (first_bad.empty()) first_bad = "delta=" + std::to_string(d) + " height " + std::to_string(M);
        }
        std::size_t i = 0;
        while (i <= M && b[i] == 3) b[i++] = 0;
        if (i > M) break;
        ++b[i];
      }
    }
  add(out, "template sum equals graph sum for widths <= 3, height <= 3", all, first_bad);
  return out;
}

std::vector<CheckResult> suite_toric() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(20240611);
  int det_ok = 0, c2_ok = 0;
  const int n = 50;
  std::string first_bad;
  for (int k = 0; k < n; ++k) {
    HTPolygon p = random_polygon(rng);
    PolygonStats s = polygon_stats(p);
    ToricInvariants inv = toric_invariants(p);
    Rational rhs = 12 - inv.Ksq + cor_doubleprime(s.tdet) + cor_doubleprime(s.bdet);
    if (Rational(s.det) == rhs)
      ++det_ok;
    else if (first_bad.empty())
      first_bad = polygon_to_json(p).dump();
    long sum = inv.c2;
    for (const auto& [i, c] : inv.S_i) sum += static_cast<long>(i) * c;
    if (sum == inv.c2tilde) ++c2_ok;
  }
  add(out, "det = 12 - K^2 + COR''(tdet) + COR''(bdet) on 50 random polygons", det_ok == n,
      std::to_string(det_ok) + "/50 " + first_bad);
  add(out, "c2tilde = c2 + sum i S_i on 50 random polygons", c2_ok == n, std::to_string(c2_ok) + "/50");
  return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"table1", "coeffs", "gyz", "oracle", "toric"};
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, unsigned order, CoefficientStore& store) {
  if (order == 0) throw std::invalid_argument("verify needs --order >= 1");
  if (suite == "table1") return suite_table1(store);
  if (suite == "coeffs") return suite_coeffs(order, store);
  if (suite == "gyz") return suite_gyz(order, store);
  if (suite == "oracle") return suite_oracle(order, store);
  if (suite == "toric") return suite_toric();
  throw std::invalid_argument("unknown verify suite \"" + suite + "\" (table1, coeffs, gyz, oracle, toric)");
}

std::vector<NamedPolygon> reference_corpus() {
  std::vector<NamedPolygon> out;
  for (unsigned d = 1; d <= 5; ++d) {
    std::vector<long> left(d, 0), right(d, 1);
    out.push_back({"triangle d=" + std::to_string(d), HTPolygon::from_sequences(0, left, right), d <= 3 ? 3u : 2u});
  }
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = 1; b <= 4; ++b) {
      std::vector<long> zero(b, 0);
      out.push_back({"rectangle " + std::to_string(a) + "x" + std::to_string(b),
                     HTPolygon::from_sequences(a, zero, zero), a * b <= 4 ? 3u : 2u});
    }
  out.push_back({"trapezoid with a determinant-2 internal vertex",
                 HTPolygon::from_sequences(2, {0, 0, 0, 0, 0, 0}, {1, 1, -1, -1, -1, -1}), 2});
  out.push_back({"polygon with top determinant 3", HTPolygon::from_sequences(0, {-1, -1, 0, 0}, {2, 2, 0, 0}), 2});
  return out;
}

HTPolygon random_polygon(std::mt19937_64& rng, unsigned max_height) {
  std::uniform_int_distribution<unsigned> height(1, max_height);
  std::uniform_int_distribution<long> dir(-3, 3);
  std::uniform_int_distribution<unsigned> top(0, 4);
  for (;;) {
    unsigned M = height(rng);
    std::vector<long> left(M), right(M);
    for (auto& x : left) x = dir(rng);
    for (auto& x : right) x = dir(rng);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end(), std::greater<>());
    try {
      return HTPolygon::from_sequences(top(rng), left, right);
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace severi
