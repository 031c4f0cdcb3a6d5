#include "severi/identities.hpp"

#include "severi/severi.hpp"

namespace severi {

bool check_g_identity(unsigned order, CoefficientStore& store) {
  RatSeries g = revert(dg2(order));
  RatSeries a = store.a_series(order);
  RatSeries ta(order);
  for (unsigned n = 1; n <= order; ++n) ta[n] = a[n - 1];
  if (!(g == ta)) return false;
  RatSeries logp = log_partition_series(order);
  RatSeries gi = RatSeries::constant(1, order);
  for (unsigned i = 1; i <= order; ++i) {
    gi = gi * g;
    RatSeries rhs = compose(logp, gi);
    for (unsigned d = 1; d <= order; ++d)
      if (store.b(d, i) != rhs[d]) return false;
  }
  return true;
}

namespace {

// sum_{d=1}^{order} c(d) DG2(q)^d
template <class Coef>
RatSeries in_dg2(unsigned order, Coef c) {
  RatSeries s(order);
  for (unsigned d = 1; d <= order; ++d) s[d] = c(d);
  return compose(s, dg2(order));
}

}  // namespace

std::pair<RatSeries, RatSeries> b1_b2(unsigned order, CoefficientStore& store) {
  RatSeries b1 = inverse(partition_series(order)) *
                 exp(-in_dg2(order, [&](unsigned d) { return store.table(d).D; }));
  RatSeries b2 = exp(in_dg2(order, [&](unsigned d) {
    const CoeffTable& t = store.table(d);
    return Rational(t.A - t.L);
  }));
  return {b1, b2};
}

GyzResult gyz_check(unsigned order, std::span<const Rational> sample, CoefficientStore& store) {
  auto val = [&](std::size_t i) { return i < sample.size() ? sample[i] : Rational(0); };
  Rational x = val(0), y = val(1), z = val(2), w = val(3), s = val(4);

  RatSeries tser(order);
  tser[0] = 1;
  for (unsigned d = 1; d <= order; ++d) tser[d] = t_delta(d, store).evaluate(sample);
  RatSeries lhs = compose(tser, dg2(order));

  auto [b1, b2] = b1_b2(order, store);
  RatSeries dg2_q = divide_by_power(dg2(order + 1), 1);
  RatSeries disc_q = divide_by_power(disc(order + 1), 1);
  RatSeries d2g2_q = divide_by_power(d2g2(order + 1), 1);
  Rational e1 = (z + w) / 12 + (x - y) / 2;
  Rational e2 = -(z + w) / 24;
  RatSeries p = partition_series(order);
  RatSeries rhs = pow(dg2_q, e1) * pow(b1, z) * pow(b2, y) * pow(disc_q * d2g2_q, e2) * pow(p, -s);
  for (unsigned i = 2; i <= order; ++i) {
    Rational si = val(3 + i);
    if (si != 0) rhs = rhs * pow(substitute_power(p, i), si);
  }

  GyzResult r;
  r.left = lhs;
  r.right = rhs;
  for (unsigned n = 0; n <= order; ++n)
    if (lhs[n] != rhs[n]) {
      r.ok = false;
      r.first_mismatch = n;
      r.lhs = lhs[n];
      r.rhs = rhs[n];
      break;
    }
  return r;
}

}  // namespace severi
