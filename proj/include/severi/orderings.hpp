#pragma once

#include <span>
#include <vector>

#include "severi/arith.hpp"
#include "severi/graph.hpp"

namespace severi {

// Widths (beta_0, ..., beta_M), all nonnegative, at least one entry.
class BetaSeq {
 public:
  explicit BetaSeq(std::vector<long> entries);

  unsigned height() const { return static_cast<unsigned>(entries_.size() - 1); }
  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return static_cast<unsigned>(entries_[i]); }
  const std::vector<long>& entries() const { return entries_; }

  bool operator==(const BetaSeq&) const = default;

 private:
  std::vector<long> entries_;
};

// Prefix sums. Throws std::invalid_argument("not a valid width sequence")
// when a partial sum is negative.
BetaSeq beta_from_divergence(std::span<const long> d);

enum class Allowability { not_allowable, allowable, strictly_allowable };

Allowability allowability(const LongEdgeGraph& g, const BetaSeq& beta);
bool is_semiallowable(const LongEdgeGraph& g, const BetaSeq& beta);

Integer p_beta(const LongEdgeGraph& g, const BetaSeq& beta);
Integer p_beta_strict(const LongEdgeGraph& g, const BetaSeq& beta);

Rational phi_beta(const LongEdgeGraph& g, const BetaSeq& beta);
Rational phi_beta_strict(const LongEdgeGraph& g, const BetaSeq& beta);

// Phi(G, beta) = eta[0] + sum_{j=1}^{l} eta[j] * beta_{minv + j - 1}.
struct LinearForm {
  std::vector<Rational> eta;
  Rational zeta0, zeta1, zeta2;

  unsigned length() const { return static_cast<unsigned>(eta.size() - 1); }
  // eta[0] + sum_j eta[j] * beta[start + j - 1]
  Rational evaluate(const BetaSeq& beta, unsigned start) const;
};

LinearForm make_linear_form(std::vector<Rational> eta);

// Throws std::logic_error on a failed linearity re-check.
LinearForm fit_linear_phi(const LongEdgeGraph& g);

}  // namespace severi
