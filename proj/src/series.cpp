#include "severi/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace severi {

RatSeries::RatSeries(unsigned order) : c_(order + 1, Rational(0)) {}

RatSeries::RatSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.emplace_back(0);
}

RatSeries RatSeries::constant(const Rational& c, unsigned order) {
  RatSeries s(order);
  s.c_[0] = c;
  return s;
}

RatSeries RatSeries::variable(unsigned order) {
  RatSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

RatSeries RatSeries::truncated(unsigned order) const {
  RatSeries s(order);
  for (unsigned n = 0; n <= order && n < c_.size(); ++n) s.c_[n] = c_[n];
  return s;
}

RatSeries& RatSeries::operator+=(const RatSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

RatSeries& RatSeries::operator*=(const Rational& k) {
  for (auto& x : c_) x *= k;
  return *this;
}

std::vector<std::string> RatSeries::to_strings() const {
  std::vector<std::string> out;
  for (const auto& x : c_) out.push_back(to_string(x));
  return out;
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  RatSeries r = a;
  r += b;
  return r;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
  RatSeries r = a;
  r -= b;
  return r;
}

RatSeries operator-(const RatSeries& a) {
  RatSeries r = a;
  r *= Rational(-1);
  return r;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  unsigned T = std::min(a.order(), b.order());
  RatSeries r(T);
  for (unsigned i = 0; i <= T; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= T; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatSeries operator*(const Rational& k, const RatSeries& a) {
  RatSeries r = a;
  r *= k;
  return r;
}

RatSeries exp(const RatSeries& f) {
  if (f[0] != 0) throw std::domain_error("exp needs a series with zero constant term");
  unsigned T = f.order();
  // n e_n = sum_{k=1}^n k f_k e_{n-k}
  RatSeries e(T);
  e[0] = 1;
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += Rational(k) * f[k] * e[n - k];
    e[n] = acc / Rational(n);
  }
  return e;
}

RatSeries log(const RatSeries& f) {
  if (f[0] != 1) throw std::domain_error("log needs a series with constant term 1");
  unsigned T = f.order();
  // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
  RatSeries g(T);
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc = Rational(n) * f[n];
    for (unsigned k = 1; k < n; ++k) acc -= Rational(k) * g[k] * f[n - k];
    g[n] = acc / Rational(n);
  }
  return g;
}

RatSeries pow(const RatSeries& f, const Rational& a) {
  if (f[0] != 1) throw std::domain_error("pow needs a series with constant term 1");
  unsigned T = f.order();
  // J.C.P. Miller recurrence: n p_n = sum_{k=1}^n ((a+1)k - n) f_k p_{n-k}
  RatSeries p(T);
  p[0] = 1;
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += ((a + 1) * Rational(k) - Rational(n)) * f[k] * p[n - k];
    p[n] = acc / Rational(n);
  }
  return p;
}

RatSeries inverse(const RatSeries& f) {
  if (f[0] == 0) throw std::domain_error("inverse needs a nonzero constant term");
  unsigned T = f.order();
  RatSeries g(T);
  g[0] = 1 / f[0];
  for (unsigned n = 1; n <= T; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc / f[0];
  }
  return g;
}

RatSeries compose(const RatSeries& f, const RatSeries& g) {
  if (g[0] != 0) throw std::domain_error("compose needs an inner series with zero constant term");
  unsigned T = std::min(f.order(), g.order());
  // Horner in g
  RatSeries r = RatSeries::constant(f[T], T);
  for (unsigned n = T; n-- > 0;) {
    r = r * g.truncated(T);
    r[0] += f[n];
  }
  return r;
}

RatSeries revert(const RatSeries& f) {
  if (f[0] != 0 || f.order() < 1 || f[1] == 0)
    throw std::domain_error("revert needs c_0 = 0 and c_1 != 0");
  unsigned T = f.order();
  // Lagrange inversion: [t^n] g = (1/n) [q^{n-1}] (q / f(q))^n.
  RatSeries h = inverse(divide_by_power(f, 1));  // q / f(q), order T-1
  RatSeries g(T);
  RatSeries hp = RatSeries::constant(1, T == 0 ? 0 : T - 1);
  for (unsigned n = 1; n <= T; ++n) {
    hp = hp * h;
    g[n] = hp[n - 1] / Rational(n);
  }
  return g;
}

RatSeries substitute_power(const RatSeries& f, unsigned k) {
  if (k == 0) throw std::domain_error("substitute_power needs k >= 1");
  unsigned T = f.order();
  RatSeries r(T);
  for (unsigned n = 0; n * k <= T; ++n) r[n * k] = f[n];
  return r;
}

RatSeries divide_by_power(const RatSeries& f, unsigned k) {
  if (k > f.order()) throw std::domain_error("divide_by_power past the truncation order");
  for (unsigned n = 0; n < k; ++n)
    if (f[n] != 0) throw std::domain_error("divide_by_power needs vanishing low coefficients");
  RatSeries r(f.order() - k);
  for (unsigned n = 0; n <= r.order(); ++n) r[n] = f[n + k];
  return r;
}

Integer sigma(unsigned n) {
  Integer s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

RatSeries g2(unsigned order) {
  RatSeries s(order);
  s[0] = make_rational(-1, 24);
  for (unsigned n = 1; n <= order; ++n) s[n] = Rational(sigma(n));
  return s;
}

RatSeries dg2(unsigned order) {
  RatSeries s(order);
  for (unsigned n = 1; n <= order; ++n) s[n] = Rational(sigma(n) * n);
  return s;
}

RatSeries d2g2(unsigned order) {
  RatSeries s(order);
  for (unsigned n = 1; n <= order; ++n) s[n] = Rational(sigma(n) * n * n);
  return s;
}

RatSeries disc(unsigned order) {
  if (order == 0) return RatSeries(0);
  // q * prod_{k>=1} (1 - q^k)^24, the product needed to order - 1
  unsigned T = order - 1;
  RatSeries prod = RatSeries::constant(1, T);
  for (unsigned k = 1; k <= T; ++k) {
    RatSeries factor = RatSeries::constant(1, T);
    factor[k] = -1;
    prod = prod * pow(factor, 24);
  }
  RatSeries s(order);
  for (unsigned n = 0; n <= T; ++n) s[n + 1] = prod[n];
  return s;
}

RatSeries partition_series(unsigned order) {
  RatSeries s(order);
  s[0] = 1;
  // Euler's recurrence via generalized pentagonal numbers
  for (unsigned n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (long k = 1;; ++k) {
      long p1 = k * (3 * k - 1) / 2, p2 = k * (3 * k + 1) / 2;
      if (p1 > static_cast<long>(n)) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      acc += Rational(sign) * s[n - p1];
      if (p2 <= static_cast<long>(n)) acc += Rational(sign) * s[n - p2];
    }
    s[n] = acc;
  }
  return s;
}

RatSeries log_partition_series(unsigned order) {
  RatSeries s(order);
  for (unsigned n = 1; n <= order; ++n) s[n] = Rational(sigma(n)) / Rational(n);
  return s;
}

}  // namespace severi
