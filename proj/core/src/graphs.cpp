#include "hermite_kit/graphs.hpp"

#include "hermite_kit/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>
#include <unordered_map>

namespace hermite_kit {

SimpleGraph::SimpleGraph(unsigned vertex_count) : vertex_count_(vertex_count) {}

void SimpleGraph::add_edge(unsigned u, unsigned v) {
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (u == 0 || v == 0 || u > vertex_count_ || v > vertex_count_) {
    throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside vertices 1.." +
                          std::to_string(vertex_count_));
  }
  if (!edges_.emplace(std::min(u, v), std::max(u, v)).second) {
    throw InvalidArgument("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
}

bool SimpleGraph::has_edge(unsigned u, unsigned v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

namespace {

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

long long read_integer(std::istringstream& fields, const std::string& what, std::size_t lineno) {
  long long value = 0;
  if (!(fields >> value)) throw ParseError("expected " + what, lineno);
  return value;
}

}  // namespace

SimpleGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  SimpleGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      const long long n = read_integer(fields, "vertex count", lineno);
      if (n < 1) throw ParseError("vertex count must be positive", lineno);
      if (n > 1'000'000) throw ParseError("vertex count " + std::to_string(n) + " is too large", lineno);
      g = SimpleGraph(static_cast<unsigned>(n));
      have_header = true;
    } else {
      const long long u = read_integer(fields, "two vertex numbers", lineno);
      const long long v = read_integer(fields, "two vertex numbers", lineno);
      if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count()) {
        throw ParseError("vertex out of range 1.." + std::to_string(g.vertex_count()), lineno);
      }
      if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
      if (g.has_edge(static_cast<unsigned>(u), static_cast<unsigned>(v))) {
        throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), lineno);
      }
      g.add_edge(static_cast<unsigned>(u), static_cast<unsigned>(v));
    }
    std::string rest;
    if (fields >> rest) throw ParseError("unexpected trailing text '" + rest + "'", lineno);
  }
  if (!have_header) throw ParseError("empty edge list: missing vertex count", lineno);
  return g;
}

namespace {

// Match-count tables of induced subgraphs, keyed by vertex bitmask. For the
// lowest vertex u of S, a matching either leaves u uncovered or uses exactly
// one edge (u, v): p(S, j) = p(S - u, j) + sum_v p(S - u - v, j - 1).
class MatchCounter {
 public:
  explicit MatchCounter(const SimpleGraph& g) : adjacency_(g.vertex_count(), 0) {
    for (const auto& [u, v] : g.edges()) {
      adjacency_[u - 1] |= std::uint32_t{1} << (v - 1);
      adjacency_[v - 1] |= std::uint32_t{1} << (u - 1);
    }
  }

  const std::vector<std::uint64_t>& table(std::uint32_t s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::vector<std::uint64_t> out{1};
    // isolated vertices of S never change the counts
    std::uint32_t rest = s;
    while (rest != 0) {
      const int u = std::countr_zero(rest);
      const std::uint32_t bit = std::uint32_t{1} << u;
      if ((adjacency_[u] & s) != 0) break;
      rest &= ~bit;
    }
    if (rest != 0) {
      const int u = std::countr_zero(rest);
      const std::uint32_t without_u = rest & ~(std::uint32_t{1} << u);
      out = table(without_u);
      std::uint32_t partners = adjacency_[u] & without_u;
      while (partners != 0) {
        const int v = std::countr_zero(partners);
        partners &= partners - 1;
        const auto sub = table(without_u & ~(std::uint32_t{1} << v));
        if (out.size() < sub.size() + 1) out.resize(sub.size() + 1, 0);
        for (std::size_t j = 0; j < sub.size(); ++j) out[j + 1] += sub[j];
      }
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

 private:
  std::vector<std::uint32_t> adjacency_;
  std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> memo_;
};

void check_matching_size(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxMatchingVertices) {
    throw BudgetExceeded("matching counts are limited to " + std::to_string(kMaxMatchingVertices) +
                             " vertices, graph has " + std::to_string(g.vertex_count()),
                         g.vertex_count(), kMaxMatchingVertices);
  }
}

}  // namespace

std::vector<BigInt> match_count_table(const SimpleGraph& g) {
  check_matching_size(g);
  MatchCounter counter(g);
  const std::uint32_t all =
      g.vertex_count() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << g.vertex_count()) - 1;
  const auto& t = counter.table(all);
  std::vector<BigInt> out(t.begin(), t.end());
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

BigInt count_j_matches(const SimpleGraph& g, unsigned j) {
  const auto t = match_count_table(g);
  return j < t.size() ? t[j] : BigInt(0);
}

ExactPolynomial matching_polynomial(const SimpleGraph& g) {
  const auto t = match_count_table(g);
  const unsigned m = g.vertex_count();
  std::vector<Rational> coeffs(m + 1);
  for (unsigned j = 0; j < t.size(); ++j) coeffs[m - 2 * j] = Rational(j % 2 == 0 ? t[j] : BigInt(-t[j]));
  return ExactPolynomial(std::move(coeffs));
}

SimpleGraph complete_graph(unsigned m) {
  if (m == 0) throw InvalidArgument("complete graph needs at least one vertex");
  SimpleGraph g(m);
  for (unsigned u = 1; u <= m; ++u)
    for (unsigned v = u + 1; v <= m; ++v) g.add_edge(u, v);
  return g;
}

BigInt complete_graph_match_count(unsigned m, unsigned j) {
  if (2 * j > m) return 0;
  return factorial(m) / (factorial(m - 2 * j) * factorial(j) * (BigInt(1) << j));
}

bool verify_hermite_matching(unsigned m) {
  if (m == 0 || m > 20) throw InvalidArgument("verify_hermite_matching needs 1 <= m <= 20");
  ExactPolynomial alpha;
  if (m <= 14) {
    alpha = matching_polynomial(complete_graph(m));
  } else {
    std::vector<Rational> coeffs(m + 1);
    for (unsigned j = 0; 2 * j <= m; ++j) {
      const BigInt c = complete_graph_match_count(m, j);
      coeffs[m - 2 * j] = Rational(j % 2 == 0 ? c : BigInt(-c));
    }
    alpha = ExactPolynomial(std::move(coeffs));
  }
  // He_m from its own three-term recurrence
  ExactPolynomial prev;
  ExactPolynomial cur = ExactPolynomial::constant(1);
  for (unsigned k = 0; k < m; ++k) {
    ExactPolynomial next = ExactPolynomial::monomial(1) * cur - prev * Rational(k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return alpha == cur;
}

SimpleGraph complete_kpartite(const PartSizes& parts) {
  if (parts.empty()) throw InvalidArgument("a multipartite graph needs at least one part");
  std::vector<unsigned> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) owner.insert(owner.end(), parts[p], static_cast<unsigned>(p));
  SimpleGraph g(static_cast<unsigned>(owner.size()));
  for (unsigned u = 0; u < owner.size(); ++u)
    for (unsigned v = u + 1; v < owner.size(); ++v)
      if (owner[u] != owner[v]) g.add_edge(u + 1, v + 1);
  return g;
}

namespace {

BigInt complete_matches(PartSizes parts, std::map<PartSizes, BigInt>& memo) {
  std::erase(parts, 0u);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (parts.empty()) return 1;
  unsigned long long total = 0;
  for (unsigned n : parts) total += n;
  if (total % 2 != 0) return 0;
  // the largest part can only pair with the others
  if (2ull * parts[0] > total) return 0;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;

  BigInt sum = 0;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    PartSizes next = parts;
    --next[0];
    --next[i];
    sum += BigInt(parts[i]) * complete_matches(std::move(next), memo);
  }
  memo.emplace(parts, sum);
  return sum;
}

}  // namespace

BigInt count_complete_matches(const PartSizes& parts) {
  if (parts.empty()) throw InvalidArgument("a multipartite graph needs at least one part");
  std::map<PartSizes, BigInt> memo;
  return complete_matches(parts, memo);
}

BigInt partite_closed_form(const PartSizes& parts) {
  if (parts.size() == 2) return parts[0] == parts[1] ? factorial(parts[0]) : BigInt(0);
  if (parts.size() != 3) throw InvalidArgument("closed forms exist for 2 or 3 parts only");
  const unsigned long long total = 0ull + parts[0] + parts[1] + parts[2];
  if (total % 2 != 0) return 0;
  const unsigned long long s = total / 2;
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned n : parts) {
    if (n > s) return 0;
    num *= factorial(n);
    den *= factorial(static_cast<unsigned>(s - n));
  }
  return num / den;
}

double hermite_product_integral(const PartSizes& parts) {
  const double sqrt_2pi = std::sqrt(2.0 * std::numbers::pi);
  if (parts.empty()) return sqrt_2pi;
  return sqrt_2pi * count_complete_matches(parts).convert_to<double>();
}

std::map<unsigned, BigInt> linearization_coeffs(unsigned m, unsigned n) {
  std::map<unsigned, BigInt> out;
  for (unsigned j = 0; j <= std::min(m, n); ++j) out[m + n - 2 * j] = binomial(m, j) * binomial(n, j) * factorial(j);
  return out;
}

Rational linearization_from_matches(unsigned l, unsigned m, unsigned n) {
  return Rational(count_complete_matches({l, m, n}), factorial(l));
}

}  // namespace hermite_kit
