#pragma once

#include <map>
#include <mutex>
#include <span>
#include <vector>

#include <json.hpp>

#include "severi/arith.hpp"
#include "severi/graph.hpp"
#include "severi/orderings.hpp"
#include "severi/series.hpp"

namespace severi {

struct TemplateRecord {
  Template tmpl;
  LinearForm form;
  Integer mu;
  unsigned length;
  bool eps0, eps1;
};

TemplateRecord make_record(Template t, LinearForm form);

struct TemplateData {
  unsigned delta = 0;
  std::vector<TemplateRecord> records;  // canonical template order
};

// Enumerates and fits every template of cogenus delta (parallel over templates).
TemplateData compute_template_data(unsigned delta);

struct TemplateSums {
  Rational A, L, H, D, C;
  Rational L_from_eta0;  // (1/2) sum mu * eta_0
};

TemplateSums template_coefficients(const TemplateData& data);

struct CoeffTable {
  unsigned delta = 0;
  Rational A, L, H, D, C, Ctilde;
  std::vector<Rational> b;  // b[i-1] = b_{delta,i}, i = 1..delta

  // b_{delta,i}; zero for i = 0 or i > delta.
  Rational b_at(unsigned i) const;
};

nlohmann::json coeff_table_to_json(const CoeffTable& t);

// Computes per-delta template data once and memoizes everything derived
// from it. All members are safe to call concurrently.
class CoefficientStore {
 public:
  const TemplateData& templates(unsigned delta);
  // Throws std::logic_error if H != 0 or the two L sums disagree.
  const CoeffTable& table(unsigned delta);
  // A(t) = exp(-sum 2 A(d) t^d) truncated at `order`.
  RatSeries a_series(unsigned order);
  Rational b(unsigned delta, unsigned i);
  Rational diffq(unsigned p, unsigned delta);

  // Installs externally loaded template data (e.g. from the cache).
  void seed(TemplateData data);
  bool has_templates(unsigned delta) const;
  void clear();

  static CoefficientStore& global();

 private:
  mutable std::recursive_mutex mu_;
  std::map<unsigned, TemplateData> templates_;
  std::map<unsigned, CoeffTable> tables_;
  std::map<std::pair<unsigned, unsigned>, Rational> diffq_;
};

Rational q_beta_delta(const BetaSeq& beta, unsigned delta,
                      CoefficientStore& store = CoefficientStore::global());
Rational q_delta_linearized(const BetaSeq& beta, unsigned delta,
                            CoefficientStore& store = CoefficientStore::global());
// Same value as q_beta_delta, summed over all graphs with strict counts.
Rational q_beta_delta_from_graphs(const BetaSeq& beta, unsigned delta);

struct BetaStats {
  long area = 0, LL = 0, height = 0, idet = 0;
};

// d = (d_0, ..., d_M) with M >= 1. Throws std::invalid_argument otherwise.
BetaStats beta_stats(std::span<const long> d);

Rational q_delta_closed_form(const BetaStats& s, const TemplateSums& sums);

Rational diffq(unsigned p, unsigned delta, CoefficientStore& store = CoefficientStore::global());
// -sum over eps0 = 1 templates of mu (p zeta1 + eta0); valid for p >= delta.
Rational diffq_closed_form(unsigned p, unsigned delta,
                           CoefficientStore& store = CoefficientStore::global());
RatSeries a_series(unsigned order, CoefficientStore& store = CoefficientStore::global());
Rational b_coeffs(unsigned delta, unsigned i, CoefficientStore& store = CoefficientStore::global());
Rational cor(unsigned p, unsigned delta, CoefficientStore& store = CoefficientStore::global());
Rational cor_doubleprime(unsigned p);

}  // namespace severi
