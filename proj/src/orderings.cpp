#include "severi/orderings.hpp"

#include <algorithm>
#include <stdexcept>

namespace severi {

BetaSeq::BetaSeq(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("width sequence must be nonempty");
  for (long b : entries_)
    if (b < 0) throw std::invalid_argument("not a valid width sequence");
}

BetaSeq beta_from_divergence(std::span<const long> d) {
  if (d.empty()) throw std::invalid_argument("not a valid width sequence");
  std::vector<long> out;
  long s = 0;
  for (long x : d) {
    s += x;
    if (s < 0) throw std::invalid_argument("not a valid width sequence");
    out.push_back(s);
  }
  return BetaSeq(std::move(out));
}

namespace {

bool weights_ok(const LongEdgeGraph& g, const BetaSeq& beta, bool use_olambda) {
  if (g.empty()) return true;
  unsigned M = beta.height();
  if (maxv(g) > M + 1) return false;
  for (unsigned j = 1; j <= M + 1; ++j) {
    unsigned lam = use_olambda ? olambda(g, j) : lambda(g, j);
    if (beta[j - 1] < lam) return false;
  }
  return true;
}

struct EdgeClass {
  Edge edge;
  unsigned count;
};

std::vector<EdgeClass> edge_classes(const LongEdgeGraph& g) {
  std::vector<EdgeClass> out;
  for (const auto& e : g.edges()) {
    if (!out.empty() && out.back().edge == e)
      ++out.back().count;
    else
      out.push_back({e, 1});
  }
  return out;
}

struct PCounter {
  std::vector<EdgeClass> classes;
  std::vector<unsigned> slack;  // slack[j] = beta_{j-1} - lambda_j, j = 1..M+1
  std::vector<unsigned> gap_total;
  Integer total = 0;

  // Distribute class c's members over gaps lo+1..hi, starting at gap `gap`.
  void assign(std::size_t c, unsigned gap, unsigned left, const Integer& denom) {
    if (c == classes.size()) {
      Integer num = 1;
      for (std::size_t j = 1; j < gap_total.size(); ++j) {
        for (unsigned x = 1; x <= gap_total[j]; ++x) num *= slack[j] + x;
      }
      Integer term;
      mpz_divexact(term.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
      total += term;
      return;
    }
    const Edge& e = classes[c].edge;
    if (gap == e.hi) {
      gap_total[gap] += left;
      Integer d = denom * factorial(left);
      if (c + 1 < classes.size())
        assign(c + 1, classes[c + 1].edge.lo + 1, classes[c + 1].count, d);
      else
        assign(c + 1, 0, 0, d);
      gap_total[gap] -= left;
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      gap_total[gap] += x;
      assign(c, gap + 1, left - x, denom * factorial(x));
      gap_total[gap] -= x;
    }
  }
};

Integer count_orderings(const LongEdgeGraph& g, const BetaSeq& beta) {
  if (g.empty()) return 1;
  unsigned M = beta.height();
  PCounter pc;
  pc.classes = edge_classes(g);
  pc.slack.assign(M + 2, 0);
  pc.gap_total.assign(M + 2, 0);
  for (unsigned j = 1; j <= M + 1; ++j) pc.slack[j] = beta[j - 1] - lambda(g, j);
  pc.assign(0, pc.classes[0].edge.lo + 1, pc.classes[0].count, Integer(1));
  return pc.total;
}

bool touches_weighted(const LongEdgeGraph& g, unsigned v) {
  for (const auto& e : g.edges())
    if ((e.lo == v || e.hi == v) && e.weight != 1) return true;
  return false;
}

// Sub-multiset bookkeeping in mixed radix over edge classes.
struct SubsetIndex {
  std::vector<EdgeClass> classes;
  std::vector<std::size_t> stride;
  std::size_t total = 1;

  explicit SubsetIndex(const LongEdgeGraph& g) : classes(edge_classes(g)) {
    for (const auto& c : classes) {
      stride.push_back(total);
      total *= c.count + 1;
    }
  }
  unsigned digit(std::size_t idx, std::size_t c) const {
    return static_cast<unsigned>((idx / stride[c]) % (classes[c].count + 1));
  }
  LongEdgeGraph graph(std::size_t idx) const {
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (unsigned k = digit(idx, c); k > 0; --k) edges.push_back(classes[c].edge);
    return LongEdgeGraph(std::move(edges));
  }
};

// Multivariate log over sub-multisets: with F_H the counts and L_G the log
// coefficients, h_c L_G = h_c F_G - sum_{0 < H < G} H_c L_H F_{G-H}, where c
// is any class present in G (derivative identity for log).
Rational phi_impl(const LongEdgeGraph& g, const BetaSeq& beta, bool strict) {
  if (g.empty()) return 0;
  SubsetIndex si(g);
  std::vector<Integer> F(si.total);
  for (std::size_t idx = 1; idx < si.total; ++idx) {
    LongEdgeGraph h = si.graph(idx);
    F[idx] = strict ? p_beta_strict(h, beta) : p_beta(h, beta);
  }
  std::vector<Rational> L(si.total);
  std::size_t n = si.classes.size();
  std::vector<unsigned> hd(n), sd(n);
  for (std::size_t idx = 1; idx < si.total; ++idx) {
    std::size_t c0 = 0;
    for (std::size_t c = 0; c < n; ++c) hd[c] = si.digit(idx, c);
    while (hd[c0] == 0) ++c0;
    Rational acc = Rational(hd[c0]) * Rational(F[idx]);
    // iterate proper nonzero sub-multisets of h
    std::fill(sd.begin(), sd.end(), 0);
    for (;;) {
      std::size_t c = 0;
      while (c < n && sd[c] == hd[c]) {
        sd[c] = 0;
        ++c;
      }
      if (c == n) break;
      ++sd[c];
      std::size_t sub = 0, rest = 0;
      for (std::size_t k = 0; k < n; ++k) {
        sub += sd[k] * si.stride[k];
        rest += (hd[k] - sd[k]) * si.stride[k];
      }
      if (rest == 0 || sd[c0] == 0) continue;
      if (L[sub] == 0 || F[rest] == 0) continue;
      acc -= Rational(sd[c0]) * L[sub] * Rational(F[rest]);
    }
    L[idx] = acc / Rational(hd[c0]);
  }
  return L[si.total - 1];
}

}  // namespace

Allowability allowability(const LongEdgeGraph& g, const BetaSeq& beta) {
  if (!weights_ok(g, beta, false)) return Allowability::not_allowable;
  if (g.empty()) return Allowability::strictly_allowable;
  if (touches_weighted(g, 0) || touches_weighted(g, beta.height() + 1))
    return Allowability::allowable;
  return Allowability::strictly_allowable;
}

bool is_semiallowable(const LongEdgeGraph& g, const BetaSeq& beta) {
  return weights_ok(g, beta, true);
}

Integer p_beta(const LongEdgeGraph& g, const BetaSeq& beta) {
  if (allowability(g, beta) == Allowability::not_allowable) return 0;
  return count_orderings(g, beta);
}

Integer p_beta_strict(const LongEdgeGraph& g, const BetaSeq& beta) {
  if (allowability(g, beta) != Allowability::strictly_allowable) return 0;
  return count_orderings(g, beta);
}

Rational phi_beta(const LongEdgeGraph& g, const BetaSeq& beta) { return phi_impl(g, beta, false); }

Rational phi_beta_strict(const LongEdgeGraph& g, const BetaSeq& beta) {
  return phi_impl(g, beta, true);
}

Rational LinearForm::evaluate(const BetaSeq& beta, unsigned start) const {
  Rational v = eta[0];
  for (unsigned j = 1; j < eta.size(); ++j) {
    std::size_t pos = start + j - 1;
    if (pos >= beta.size()) throw std::out_of_range("linear form reaches past the width sequence");
    v += eta[j] * Rational(beta[pos]);
  }
  return v;
}

LinearForm make_linear_form(std::vector<Rational> eta) {
  if (eta.empty()) throw std::invalid_argument("linear form needs eta_0");
  LinearForm f;
  f.eta = std::move(eta);
  f.zeta0 = f.zeta1 = f.zeta2 = 0;
  for (unsigned j = 1; j < f.eta.size(); ++j) {
    f.zeta0 += Rational(binomial(j - 1, 0)) * f.eta[j];
    f.zeta1 += Rational(binomial(j - 1, 1)) * f.eta[j];
    f.zeta2 += Rational(binomial(j - 1, 2)) * f.eta[j];
  }
  return f;
}

LinearForm fit_linear_phi(const LongEdgeGraph& g) {
  if (g.empty()) throw std::invalid_argument("cannot fit a linear form to the empty graph");
  unsigned m = minv(g), top = maxv(g), l = top - m;
  long base = static_cast<long>(cogenus(g)) + 2;
  // Height top - 1 makes vertex maxv = M + 1, the last allowed vertex.
  std::vector<long> b(top, base);
  auto phi_at = [&](const std::vector<long>& entries) {
    BetaSeq beta(entries);
    if (!is_semiallowable(g, beta))
      throw std::logic_error("linear fit left the semiallowable region for " + g.key());
    return phi_beta(g, beta);
  };
  Rational phi0 = phi_at(b);
  std::vector<Rational> eta(l + 1);
  Rational slope_sum = 0;
  for (unsigned j = 1; j <= l; ++j) {
    auto bumped = b;
    ++bumped[m + j - 1];
    eta[j] = phi_at(bumped) - phi0;
    slope_sum += eta[j];
  }
  eta[0] = phi0 - Rational(base) * slope_sum;
  LinearForm form = make_linear_form(std::move(eta));

  // Two more points away from the fitting stencil.
  for (int variant = 0; variant < 2; ++variant) {
    auto probe = b;
    for (unsigned j = 0; j < l; ++j) probe[m + j] += variant == 0 ? 3 + 2 * j : 7 - (j % 3);
    if (phi_at(probe) != form.evaluate(BetaSeq(probe), m))
      throw std::logic_error("linearity violation: phi is not affine on the semiallowable region for " +
                             g.key());
  }
  return form;
}

}  // namespace severi
