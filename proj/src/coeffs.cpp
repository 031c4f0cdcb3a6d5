#include "severi/coeffs.hpp"

#include <stdexcept>

#include "severi/parallel.hpp"

namespace severi {

TemplateRecord make_record(Template t, LinearForm form) {
  const LongEdgeGraph& g = t.graph();
  Integer mu = multiplicity(g);
  unsigned l = length(g);
  bool e0 = epsilon0(g), e1 = epsilon1(g);
  return TemplateRecord{std::move(t), std::move(form), mu, l, e0, e1};
}

TemplateData compute_template_data(unsigned delta) {
  auto templates = enumerate_templates(delta);
  std::vector<LinearForm> forms(templates.size());
  parallel_for(templates.size(), [&](std::size_t i) { forms[i] = fit_linear_phi(templates[i].graph()); });
  TemplateData data;
  data.delta = delta;
  for (std::size_t i = 0; i < templates.size(); ++i)
    data.records.push_back(make_record(templates[i], forms[i]));
  return data;
}

TemplateSums template_coefficients(const TemplateData& data) {
  TemplateSums s;
  s.A = s.L = s.H = s.D = s.C = s.L_from_eta0 = 0;
  for (const auto& r : data.records) {
    Rational mu(r.mu);
    Rational span(static_cast<long>(r.length) - r.eps0 - r.eps1);
    const LinearForm& f = r.form;
    s.A += mu * f.zeta0;
    s.L -= mu * f.zeta0 * span;
    s.H += mu * (f.eta[0] + f.zeta0 * span);
    s.D -= mu * (f.zeta2 + f.zeta1 * Rational(1 - static_cast<int>(r.eps0)));
    s.C -= mu * f.eta[0] * span;
    s.L_from_eta0 += mu * f.eta[0];
  }
  s.A /= 2;
  s.L /= 2;
  s.L_from_eta0 /= 2;
  return s;
}

Rational CoeffTable::b_at(unsigned i) const {
  if (i == 0 || i > b.size()) return 0;
  return b[i - 1];
}

nlohmann::json coeff_table_to_json(const CoeffTable& t) {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& x : t.b) b.push_back(to_string(x));
  return {{"delta", t.delta},           {"A", to_string(t.A)}, {"L", to_string(t.L)},
          {"H", to_string(t.H)},        {"D", to_string(t.D)}, {"C", to_string(t.C)},
          {"Ctilde", to_string(t.Ctilde)}, {"b", b}};
}

CoefficientStore& CoefficientStore::global() {
  static CoefficientStore store;
  return store;
}

const TemplateData& CoefficientStore::templates(unsigned delta) {
  if (delta == 0) throw std::invalid_argument("templates need delta >= 1");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = templates_.find(delta);
  if (it == templates_.end()) it = templates_.emplace(delta, compute_template_data(delta)).first;
  return it->second;
}

void CoefficientStore::seed(TemplateData data) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  unsigned d = data.delta;
  templates_.insert_or_assign(d, std::move(data));
  tables_.clear();
  diffq_.clear();
}

bool CoefficientStore::has_templates(unsigned delta) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return templates_.count(delta) != 0;
}

void CoefficientStore::clear() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  templates_.clear();
  tables_.clear();
  diffq_.clear();
}

RatSeries CoefficientStore::a_series(unsigned order) {
  RatSeries expo(order);
  for (unsigned d = 1; d <= order; ++d) expo[d] = -2 * table(d).A;
  return exp(expo);
}

namespace {

// [t^delta] sum_n sigma(n)/n (t A(t))^{i n}
Rational b_from_a(const RatSeries& a_lower, unsigned delta, unsigned i) {
  if (i == 0 || i > delta) return 0;
  RatSeries g(delta);
  for (unsigned n = 1; n <= delta; ++n) g[n] = a_lower[n - 1];
  RatSeries gi = RatSeries::constant(1, delta);
  for (unsigned k = 0; k < i; ++k) gi = gi * g;
  return compose(log_partition_series(delta), gi)[delta];
}

}  // namespace

const CoeffTable& CoefficientStore::table(unsigned delta) {
  if (delta == 0) throw std::invalid_argument("coefficient tables need delta >= 1");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = tables_.find(delta);
  if (it != tables_.end()) return it->second;

  TemplateSums s = template_coefficients(templates(delta));
  if (s.H != 0) throw std::logic_error("H(" + std::to_string(delta) + ") = " + to_string(s.H) + ", expected 0");
  if (s.L != s.L_from_eta0)
    throw std::logic_error("the two L(" + std::to_string(delta) + ") sums disagree");

  CoeffTable t;
  t.delta = delta;
  t.A = s.A;
  t.L = s.L;
  t.H = s.H;
  t.D = s.D;
  t.C = s.C;
  // b_{delta,i} needs A(1..delta-1) only
  RatSeries a_lower = a_series(delta - 1);
  for (unsigned i = 1; i <= delta; ++i) t.b.push_back(b_from_a(a_lower, delta, i));
  t.Ctilde = t.C - 4 * t.D - 4 * t.b_at(1);
  return tables_.emplace(delta, std::move(t)).first->second;
}

Rational CoefficientStore::b(unsigned delta, unsigned i) {
  if (i == 0 || i > delta) return 0;
  return table(delta).b_at(i);
}

Rational CoefficientStore::diffq(unsigned p, unsigned delta) {
  if (p == 0) return 0;
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_pair(p, delta);
  auto it = diffq_.find(key);
  if (it != diffq_.end()) return it->second;
  std::vector<long> v;
  for (unsigned i = 0; i <= delta; ++i) v.push_back(static_cast<long>(p) * i);
  BetaSeq beta(v);
  Rational value = q_beta_delta(beta, delta, *this) - q_delta_linearized(beta, delta, *this);
  diffq_.emplace(key, value);
  return value;
}

namespace {

template <class Term>
Rational template_double_sum(const BetaSeq& beta, const TemplateData& data, Term term) {
  long M = beta.height();
  std::vector<Rational> parts(data.records.size());
  parallel_for(data.records.size(), [&](std::size_t idx) {
    const auto& r = data.records[idx];
    Rational acc = 0;
    long lo = 1 - static_cast<long>(r.eps0);
    long hi = M - static_cast<long>(r.length) + static_cast<long>(r.eps1);
    for (long k = lo; k <= hi; ++k) acc += term(r, static_cast<unsigned>(k));
    parts[idx] = Rational(r.mu) * acc;
  });
  Rational total = 0;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

Rational q_beta_delta(const BetaSeq& beta, unsigned delta, CoefficientStore& store) {
  return template_double_sum(beta, store.templates(delta), [&](const TemplateRecord& r, unsigned k) {
    return phi_beta(shift(r.tmpl.graph(), k), beta);
  });
}

Rational q_delta_linearized(const BetaSeq& beta, unsigned delta, CoefficientStore& store) {
  return template_double_sum(beta, store.templates(delta), [&](const TemplateRecord& r, unsigned k) {
    return r.form.evaluate(beta, k);
  });
}

Rational q_beta_delta_from_graphs(const BetaSeq& beta, unsigned delta) {
  auto graphs = enumerate_graphs(delta, beta.height() + 1);
  std::vector<Rational> parts(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    parts[i] = Rational(multiplicity(graphs[i])) * phi_beta_strict(graphs[i], beta);
  });
  Rational total = 0;
  for (const auto& p : parts) total += p;
  return total;
}

BetaStats beta_stats(std::span<const long> d) {
  if (d.size() < 2) throw std::invalid_argument("idet is undefined for height 0");
  BetaSeq beta = beta_from_divergence(d);
  long M = beta.height();
  BetaStats s;
  for (long i = 0; i <= M; ++i) s.area += (i == 0 || i == M ? 1 : 2) * static_cast<long>(beta[i]);
  s.LL = static_cast<long>(beta[0]) + static_cast<long>(beta[M]) + 2 * M;
  s.height = M;
  s.idet = d[1] - d[M];
  return s;
}

Rational q_delta_closed_form(const BetaStats& s, const TemplateSums& sums) {
  return sums.A * Rational(s.area) + sums.L * Rational(s.LL) + sums.H * Rational(s.height) +
         sums.D * Rational(s.idet) + sums.C;
}

Rational diffq(unsigned p, unsigned delta, CoefficientStore& store) { return store.diffq(p, delta); }

Rational diffq_closed_form(unsigned p, unsigned delta, CoefficientStore& store) {
  Rational total = 0;
  for (const auto& r : store.templates(delta).records)
    if (r.eps0) total -= Rational(r.mu) * (Rational(p) * r.form.zeta1 + r.form.eta[0]);
  return total;
}

RatSeries a_series(unsigned order, CoefficientStore& store) { return store.a_series(order); }

Rational b_coeffs(unsigned delta, unsigned i, CoefficientStore& store) { return store.b(delta, i); }

Rational cor(unsigned p, unsigned delta, CoefficientStore& store) {
  if (p == 0) return 0;
  const CoeffTable& t = store.table(delta);
  Rational pr(p);
  Rational shape = (pr - 1) * (pr - 2) / pr;
  return (2 - pr) * t.D + store.diffq(p, delta) + 2 * t.b_at(1) - t.b_at(p) - t.Ctilde / 6 * shape;
}

Rational cor_doubleprime(unsigned p) {
  if (p == 0) return 0;
  Rational pr(p);
  return 2 * (pr - 1) * (pr - 2) / pr;
}

}  // namespace severi
