#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "severi/arith.hpp"
#include "severi/coeffs.hpp"
#include "severi/polygon.hpp"

namespace severi {

// A formula was asked for outside the edge-length range where it is proven.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requires every edge of length >= delta - 1.
Integer n_bruteforce(const HTPolygon& p, unsigned delta);
// Both require every edge of length >= delta.
Rational q_polygon(const HTPolygon& p, unsigned delta, CoefficientStore& store = CoefficientStore::global());
Rational q_geometric(const HTPolygon& p, unsigned delta, CoefficientStore& store = CoefficientStore::global());

// Sparse polynomial in x, y, z, w, s, s_1, s_2, ... (variable indices 0, 1, ...).
class MultiPoly {
 public:
  using Monomial = std::vector<unsigned>;  // exponents, trailing zeros trimmed

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(unsigned index);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& k) const;

  Rational evaluate(std::span<const Rational> values) const;  // missing values count as 0
  Rational coefficient(const Monomial& m) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool operator==(const MultiPoly&) const = default;

  std::string to_string() const;

 private:
  void add_term(Monomial m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

std::string variable_name(unsigned index);

struct UniversalPolynomial {
  unsigned delta = 0;
  MultiPoly that;  // linear
  MultiPoly t;     // [t^delta] exp(sum_i that_i t^i)
};

MultiPoly that_delta(unsigned delta, CoefficientStore& store = CoefficientStore::global());
MultiPoly t_delta(unsigned delta, CoefficientStore& store = CoefficientStore::global());
UniversalPolynomial universal_polynomial(unsigned delta, CoefficientStore& store = CoefficientStore::global());

// q[k] = Q^{k+1}; returns N^0..N^D with N^0 = 1.
std::vector<Rational> n_from_q(std::span<const Rational> q);
// n[0] must be 1; returns Q^1..Q^D.
std::vector<Rational> q_from_n(std::span<const Rational> n);

enum class Method { bruteforce, closed, geometric };
std::string method_name(Method m);
Method parse_method(const std::string& name);

struct MethodValue {
  std::optional<Rational> N, Q;  // empty when the precondition is unmet
  std::string status;            // "ok" or "precondition unmet"
  std::string detail;
};

struct NodeCountRow {
  unsigned delta;
  std::map<Method, MethodValue> values;
  bool agree;
};

struct NodeCountReport {
  nlohmann::json polygon;
  unsigned delta_max;
  std::vector<Method> methods;
  std::vector<NodeCountRow> rows;
  bool ok;
};

NodeCountReport report(const HTPolygon& p, unsigned delta_max, const std::vector<Method>& methods,
                       CoefficientStore& store = CoefficientStore::global());
nlohmann::json report_to_json(const NodeCountReport& r);

}  // namespace severi
