#include "severi/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>
#include <deque>

namespace severi {

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const Integer& factorial(unsigned n) {
  // deque keeps references stable while the table grows
  static std::deque<Integer> table{Integer(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    Integer next = table.back() * static_cast<unsigned long>(table.size());
    table.push_back(next);
  }
  return table[n];
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace severi
