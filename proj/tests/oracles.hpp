// Slow reference implementations used only by the tests. Nothing here calls
// into the library's counting, fitting or series code.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using EdgeList = std::vector<std::array<unsigned, 3>>;  // (lo, hi, weight)

// Number of extended orderings up to swapping interchangeable edges, by a
// memoized walk over all label sequences.
Int count_orderings(const EdgeList& edges, const std::vector<long>& beta, bool strict);

// Log transform over ordered tuples of nonempty sub-multisets.
Rat phi_by_tuples(const EdgeList& edges, const std::vector<long>& beta, bool strict);

// Every long-edge multigraph on vertices 0..max_vertex with the given cogenus.
std::vector<EdgeList> all_graphs(unsigned cogenus, unsigned max_vertex);

// g with f(g(t)) = t, solved one coefficient at a time. f[0] must be 0.
std::vector<Rat> revert_naive(const std::vector<Rat>& f);
std::vector<Rat> log_naive(const std::vector<Rat>& f);  // f[0] = 1
std::vector<Rat> exp_naive(const std::vector<Rat>& f);  // f[0] = 0

// A(1..k) read off from the reversion of sum n sigma(n) q^n.
std::vector<Rat> a_from_reversion(unsigned k);

struct Boundary {
  long dt = 0;
  std::vector<long> left, right;   // per-row x increments, top to bottom
  std::vector<long> widths;        // at integer heights, top to bottom
  unsigned min_edge = 0;
};

// Reads a convex polygon given by counterclockwise vertices.
Boundary boundary_from_vertices(const std::vector<std::pair<long, long>>& ccw);

unsigned reversal_cogenus(const std::vector<long>& left, const std::vector<long>& right);

// N^delta as the sum over all side permutations and all graphs.
Int severi_bruteforce(const Boundary& b, unsigned delta);

}  // namespace oracle
