#pragma once

#include "hermite_kit/exact.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace hermite_kit {

inline constexpr unsigned kMaxMatchingVertices = 24;

/// Undirected simple graph on vertices 1..vertex_count. Edges are stored
/// as (u, v) with u < v; loops and duplicate edges are rejected.
class SimpleGraph {
 public:
  explicit SimpleGraph(unsigned vertex_count = 0);

  unsigned vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::set<std::pair<unsigned, unsigned>>& edges() const noexcept { return edges_; }

  // Throws InvalidArgument on a loop, a repeated edge or a vertex outside 1..|v|.
  void add_edge(unsigned u, unsigned v);
  bool has_edge(unsigned u, unsigned v) const;

 private:
  unsigned vertex_count_;
  std::set<std::pair<unsigned, unsigned>> edges_;
};

// First line |v|, then one "u v" pair per line. Blank lines and '#'
// comments are skipped. Errors carry the 1-based line number.
SimpleGraph parse_edge_list(std::istream& in);

/// Number of j-element sets of pairwise vertex-disjoint edges.
/// Throws BudgetExceeded above kMaxMatchingVertices vertices.
BigInt count_j_matches(const SimpleGraph& g, unsigned j);

// p(G, 0), ..., p(G, nu(G)) where nu(G) is the largest matching size.
std::vector<BigInt> match_count_table(const SimpleGraph& g);

// sum_j (-1)^j p(G, j) x^{|v| - 2j}.
ExactPolynomial matching_polynomial(const SimpleGraph& g);

SimpleGraph complete_graph(unsigned m);

// p(K_m, j) = m! / (2^j (m-2j)! j!).
BigInt complete_graph_match_count(unsigned m, unsigned j);

/// Compares the matching polynomial of K_m with He_m. Counts come from
/// count_j_matches for m <= 14 and from the closed count up to m = 20.
bool verify_hermite_matching(unsigned m);

using PartSizes = std::vector<unsigned>;

// Vertices numbered part by part; edges join every pair from distinct parts.
SimpleGraph complete_kpartite(const PartSizes& parts);

/// P(n): perfect matchings of the complete multipartite graph, by
/// P = sum_{i >= 2} n_i P(n - e_1 - e_i), P(0) = 1. Zero parts are dropped,
/// and an odd total gives 0.
BigInt count_complete_matches(const PartSizes& parts);

// P(m, n) = m! delta_mn; P(l, m, n) = l! m! n! / ((s-l)! (s-m)! (s-n)!) with
// s the half-sum, and 0 when the sum is odd or some part exceeds s.
BigInt partite_closed_form(const PartSizes& parts);

// integral of e^{-x^2/2} prod_i He_{n_i}(x) = sqrt(2 pi) P(n).
double hermite_product_integral(const PartSizes& parts);

/// He_m He_n = sum_l a_l He_l with a = C(m,j) C(n,j) j! at l = m + n - 2j.
std::map<unsigned, BigInt> linearization_coeffs(unsigned m, unsigned n);

// a(l, m, n) = P(l, m, n) / l!.
Rational linearization_from_matches(unsigned l, unsigned m, unsigned n);

}  // namespace hermite_kit
