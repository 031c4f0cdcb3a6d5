#include "severi/severi.hpp"

#include <algorithm>

#include "severi/graph.hpp"
#include "severi/orderings.hpp"
#include "severi/parallel.hpp"
#include "severi/series.hpp"

namespace severi {

namespace {

void require_edges(const HTPolygon& p, long needed, const std::string& what) {
  unsigned shortest = polygon_stats(p).min_edge_length;
  if (static_cast<long>(shortest) < needed)
    throw PreconditionError(what + " needs every edge of length >= " + std::to_string(needed) +
                            "; the shortest edge has length " + std::to_string(shortest));
}

}  // namespace

Integer n_bruteforce(const HTPolygon& p, unsigned delta) {
  require_edges(p, static_cast<long>(delta) - 1, "the brute-force count");
  auto orders = reorderings(p, delta);
  unsigned M = p.height();
  std::map<unsigned, std::vector<LongEdgeGraph>> graphs;
  for (const auto& r : orders) {
    unsigned rest = delta - r.cogenus;
    if (rest > 0 && !graphs.count(rest)) graphs[rest] = enumerate_graphs(rest, M + 1);
  }
  // flatten into (reordering, graph) jobs
  struct Job {
    std::size_t order;
    const LongEdgeGraph* graph;
  };
  std::vector<Job> jobs;
  Integer total = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    unsigned rest = delta - orders[i].cogenus;
    if (rest == 0) {
      total += 1;  // empty graph
      continue;
    }
    for (const auto& g : graphs[rest]) jobs.push_back({i, &g});
  }
  std::vector<Integer> parts(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto& job = jobs[k];
    Integer c = p_beta_strict(*job.graph, orders[job.order].beta);
    if (c != 0) parts[k] = multiplicity(*job.graph) * c;
  });
  for (const auto& x : parts) total += x;
  return total;
}

Rational q_polygon(const HTPolygon& p, unsigned delta, CoefficientStore& store) {
  require_edges(p, delta, "the closed form");
  PolygonStats s = polygon_stats(p);
  const CoeffTable& t = store.table(delta);
  Rational q = t.A * Rational(s.area) + t.L * Rational(s.LL) + t.D * Rational(s.idet) + t.C +
               store.diffq(s.tdet, delta) + store.diffq(s.bdet, delta);
  for (const auto& [det, count] : s.v_internal) q += t.b_at(det) * Rational(count);
  return q;
}

Rational q_geometric(const HTPolygon& p, unsigned delta, CoefficientStore& store) {
  require_edges(p, delta, "the geometric form");
  ToricInvariants inv = toric_invariants(p);
  PolygonStats s = polygon_stats(p);
  const CoeffTable& t = store.table(delta);
  Rational c12 = t.Ctilde / 12;
  Rational q = t.A * Rational(inv.Lsq) - t.L * Rational(inv.LK) + c12 * inv.Ksq +
               (c12 + t.D + t.b_at(1)) * Rational(inv.c2tilde) - t.b_at(1) * Rational(inv.S);
  for (const auto& [i, count] : inv.S_i)
    if (i + 1 <= delta) q += t.b_at(i + 1) * Rational(count);
  q += cor(s.tdet, delta, store) + cor(s.bdet, delta, store);
  return q;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(unsigned index) {
  MultiPoly p;
  Monomial m(index + 1, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void MultiPoly::add_term(Monomial m, const Rational& c) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& k) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * k);
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m[i] == 0) continue;
      Rational v = i < values.size() ? values[i] : Rational(0);
      for (unsigned e = 0; e < m[i]; ++e) term *= v;
    }
    total += term;
  }
  return total;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  Monomial key = m;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string variable_name(unsigned index) {
  static const char* base[] = {"x", "y", "z", "w", "s"};
  if (index < 5) return base[index];
  return "s" + std::to_string(index - 4);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += severi::to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += "*" + variable_name(static_cast<unsigned>(i));
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

MultiPoly that_delta(unsigned delta, CoefficientStore& store) {
  if (delta == 0) return MultiPoly();
  const CoeffTable& t = store.table(delta);
  Rational c12 = t.Ctilde / 12;
  MultiPoly p = MultiPoly::variable(0) * t.A;
  p += MultiPoly::variable(1) * Rational(-t.L);
  p += MultiPoly::variable(2) * c12;
  p += MultiPoly::variable(3) * Rational(c12 + t.D + t.b_at(1));
  p += MultiPoly::variable(4) * Rational(-t.b_at(1));
  for (unsigned i = 2; i <= delta; ++i) p += MultiPoly::variable(3 + i) * t.b_at(i);
  return p;
}

MultiPoly t_delta(unsigned delta, CoefficientStore& store) {
  // n T_n = sum_{k=1}^n k That_k T_{n-k}
  std::vector<MultiPoly> T{MultiPoly::constant(1)};
  std::vector<MultiPoly> hat(delta + 1);
  for (unsigned k = 1; k <= delta; ++k) hat[k] = that_delta(k, store);
  for (unsigned n = 1; n <= delta; ++n) {
    MultiPoly acc;
    for (unsigned k = 1; k <= n; ++k) acc += hat[k] * T[n - k] * Rational(k);
    T.push_back(acc * Rational(1, n));
  }
  return T[delta];
}

UniversalPolynomial universal_polynomial(unsigned delta, CoefficientStore& store) {
  return UniversalPolynomial{delta, that_delta(delta, store), t_delta(delta, store)};
}

std::vector<Rational> n_from_q(std::span<const Rational> q) {
  RatSeries s(static_cast<unsigned>(q.size()));
  for (std::size_t k = 0; k < q.size(); ++k) s[k + 1] = q[k];
  return exp(s).coeffs();
}

std::vector<Rational> q_from_n(std::span<const Rational> n) {
  if (n.empty() || n[0] != 1) throw std::invalid_argument("q_from_n needs N^0 = 1");
  RatSeries s(std::vector<Rational>(n.begin(), n.end()));
  auto l = log(s).coeffs();
  return std::vector<Rational>(l.begin() + 1, l.end());
}

std::string method_name(Method m) {
  switch (m) {
    case Method::bruteforce: return "bruteforce";
    case Method::closed: return "closed";
    case Method::geometric: return "geometric";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "bruteforce") return Method::bruteforce;
  if (name == "closed") return Method::closed;
  if (name == "geometric") return Method::geometric;
  throw std::invalid_argument("unknown method \"" + name + "\" (bruteforce, closed, geometric, all)");
}

NodeCountReport report(const HTPolygon& p, unsigned delta_max, const std::vector<Method>& methods,
                       CoefficientStore& store) {
  NodeCountReport rep;
  rep.polygon = polygon_to_json(p);
  rep.delta_max = delta_max;
  rep.methods = methods;
  rep.ok = true;
  for (Method m : methods) {
    // Q values per delta, filled while the precondition holds
    std::vector<Rational> qs, ns{Rational(1)};
    bool stopped = false;
    std::string why;
    for (unsigned d = 0; d <= delta_max; ++d) {
      if (rep.rows.size() <= d) rep.rows.push_back(NodeCountRow{d, {}, true});
      MethodValue mv;
      if (d == 0) {
        mv = {Rational(1), std::nullopt, "ok", ""};
        rep.rows[d].values[m] = mv;
        continue;
      }
      if (!stopped) {
        try {
          if (m == Method::bruteforce) {
            ns.push_back(Rational(n_bruteforce(p, d)));
            qs = q_from_n(ns);
          } else {
            qs.push_back(m == Method::closed ? q_polygon(p, d, store) : q_geometric(p, d, store));
            ns = n_from_q(qs);
          }
        } catch (const PreconditionError& e) {
          stopped = true;
          why = e.what();
        }
      }
      if (stopped)
        mv = {std::nullopt, std::nullopt, "precondition unmet", why};
      else
        mv = {ns[d], qs[d - 1], "ok", ""};
      rep.rows[d].values[m] = mv;
    }
  }
  for (auto& row : rep.rows) {
    std::optional<Rational> ref;
    for (const auto& [m, v] : row.values) {
      if (!v.N) continue;
      if (!ref)
        ref = v.N;
      else if (*ref != *v.N)
        row.agree = false;
    }
    rep.ok = rep.ok && row.agree;
  }
  return rep;
}

nlohmann::json report_to_json(const NodeCountReport& r) {
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : r.methods) methods.push_back(method_name(m));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j{{"delta", row.delta}};
    for (const auto& [m, v] : row.values) {
      nlohmann::json e{{"status", v.status}};
      if (v.N) e["N"] = to_string(*v.N);
      if (v.Q) e["Q"] = to_string(*v.Q);
      if (!v.detail.empty()) e["detail"] = v.detail;
      j[method_name(m)] = e;
    }
    j["agree"] = row.agree;
    rows.push_back(j);
  }
  return {{"polygon", r.polygon}, {"delta_max", r.delta_max}, {"methods", methods}, {"rows", rows}, {"ok", r.ok}};
}

}  // namespace severi
