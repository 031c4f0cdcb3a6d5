#pragma once

#include <string>
#include <vector>

#include "severi/arith.hpp"

namespace severi {

// Truncated power series c_0 + c_1 t + ... + c_T t^T with exact coefficients.
class RatSeries {
 public:
  explicit RatSeries(unsigned order = 0);
  explicit RatSeries(std::vector<Rational> coeffs);

  static RatSeries constant(const Rational& c, unsigned order);
  // The series t truncated at `order`.
  static RatSeries variable(unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  Rational& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<Rational>& coeffs() const { return c_; }

  RatSeries truncated(unsigned order) const;

  RatSeries& operator+=(const RatSeries& o);
  RatSeries& operator-=(const RatSeries& o);
  RatSeries& operator*=(const Rational& k);

  bool operator==(const RatSeries& o) const { return c_ == o.c_; }

  std::vector<std::string> to_strings() const;

 private:
  std::vector<Rational> c_;
};

// Binary operations truncate to the smaller order.
RatSeries operator+(const RatSeries& a, const RatSeries& b);
RatSeries operator-(const RatSeries& a, const RatSeries& b);
RatSeries operator-(const RatSeries& a);
RatSeries operator*(const RatSeries& a, const RatSeries& b);
RatSeries operator*(const Rational& k, const RatSeries& a);

// Preconditions (std::domain_error otherwise):
//   exp: c_0 = 0; log: c_0 = 1; pow: c_0 = 1; inverse: c_0 != 0;
//   compose(f, g): g has c_0 = 0; revert: c_0 = 0 and c_1 != 0.
RatSeries exp(const RatSeries& f);
RatSeries log(const RatSeries& f);
RatSeries pow(const RatSeries& f, const Rational& a);
RatSeries inverse(const RatSeries& f);
RatSeries compose(const RatSeries& f, const RatSeries& g);
RatSeries revert(const RatSeries& f);
// f(t^k), same order as f.
RatSeries substitute_power(const RatSeries& f, unsigned k);
// f / t^k with the order reduced by k. The first k coefficients must vanish.
RatSeries divide_by_power(const RatSeries& f, unsigned k);

Integer sigma(unsigned n);

RatSeries g2(unsigned order);    // -1/24 + sum sigma(n) q^n
RatSeries dg2(unsigned order);   // sum n sigma(n) q^n
RatSeries d2g2(unsigned order);  // sum n^2 sigma(n) q^n
RatSeries disc(unsigned order);  // q prod (1 - q^k)^24
RatSeries partition_series(unsigned order);
RatSeries log_partition_series(unsigned order);  // sum sigma(n)/n x^n

}  // namespace severi
