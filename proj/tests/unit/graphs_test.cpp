#include <hermite_kit/errors.hpp>
#include <hermite_kit/graphs.hpp>
#include <hermite_kit/hermite.hpp>
#include <hermite_kit/moments.hpp>
#include <hermite_kit/quadrature.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace hk = hermite_kit;
using hk::BigInt;
using hk::ExactPolynomial;
using hk::PartSizes;
using hk::Rational;
using hk::SimpleGraph;

namespace {

SimpleGraph cycle(unsigned n) {
  SimpleGraph g(n);
  for (unsigned v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

SimpleGraph read_data(const std::string& name) {
  std::ifstream in(std::string(HERMITE_KIT_TEST_DATA) + "/" + name);
  return hk::parse_edge_list(in);
}

// All part vectors with k parts and total at most max_total.
void part_vectors(unsigned k, unsigned max_total, PartSizes& cur, std::vector<PartSizes>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  unsigned used = 0;
  for (unsigned p : cur) used += p;
  for (unsigned n = 0; used + n <= max_total; ++n) {
    cur.push_back(n);
    part_vectors(k, max_total, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(SimpleGraph, RejectsBadEdges) {
  SimpleGraph g(3);
  g.add_edge(2, 1);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(*g.edges().begin(), std::make_pair(1u, 2u));
  EXPECT_THROW(g.add_edge(1, 2), hk::InvalidArgument);
  EXPECT_THROW(g.add_edge(3, 3), hk::InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), hk::InvalidArgument);
  EXPECT_THROW(g.add_edge(1, 4), hk::InvalidArgument);
}

TEST(EdgeList, Parse) {
  const auto c4 = read_data("c4.txt");
  EXPECT_EQ(c4.vertex_count(), 4u);
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_EQ(read_data("k4.txt").edge_count(), 6u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"duplicate_edge.txt", 4}, {"loop.txt", 3}, {"out_of_range.txt", 2}};
  for (const auto& [file, line] : cases) {
    try {
      read_data(file);
      FAIL() << file;
    } catch (const hk::ParseError& e) {
      EXPECT_EQ(e.line(), line) << file;
    }
  }
  std::istringstream empty("");
  EXPECT_THROW(hk::parse_edge_list(empty), hk::ParseError);
  std::istringstream junk("3\n1 2 x\n");
  EXPECT_THROW(hk::parse_edge_list(junk), hk::ParseError);
}

TEST(CountJMatches, Examples) {
  EXPECT_EQ(hk::count_j_matches(cycle(4), 2), 2);
  EXPECT_EQ(hk::count_j_matches(cycle(4), 0), 1);
  EXPECT_EQ(hk::count_j_matches(SimpleGraph(5), 0), 1);
  EXPECT_EQ(hk::count_j_matches(hk::complete_graph(4), 2), 3);
  EXPECT_EQ(hk::count_j_matches(hk::complete_graph(4), 3), 0);
}

TEST(CountJMatches, SizeGuard) {
  EXPECT_THROW(hk::count_j_matches(SimpleGraph(25), 1), hk::BudgetExceeded);
  EXPECT_NO_THROW(hk::match_count_table(hk::complete_graph(24)));
}

TEST(CountJMatches, CompleteGraphOfTwentyFour) {
  const auto t = hk::match_count_table(hk::complete_graph(24));
  ASSERT_EQ(t.size(), 13u);
  for (unsigned j = 0; j <= 12; ++j) EXPECT_EQ(t[j], hk::complete_graph_match_count(24, j)) << j;
}

TEST(CountJMatches, RandomGraphsAgainstEnumeration) {
  std::mt19937_64 rng(20240531);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 0.45);
    const auto table = hk::match_count_table(g);
    EXPECT_EQ(table[0], 1);
    if (table.size() > 1) EXPECT_EQ(table[1], g.edge_count());
    EXPECT_LE(table.size() - 1, g.vertex_count() / 2);
    for (unsigned j = 0; j <= g.vertex_count() / 2 + 1; ++j) {
      EXPECT_EQ(hk::count_j_matches(g, j), oracle::j_matches_by_edge_subsets(g, j)) << "trial " << trial << " j " << j;
    }
    EXPECT_EQ(hk::count_j_matches(g, g.vertex_count() / 2 + 1), 0);
  }
}

TEST(MatchingPolynomial, Examples) {
  EXPECT_EQ(hk::matching_polynomial(SimpleGraph(3)), ExactPolynomial::monomial(3));
  EXPECT_EQ(hk::matching_polynomial(cycle(4)), ExactPolynomial({2, 0, -4, 0, 1}));
  EXPECT_EQ(hk::matching_polynomial(hk::complete_graph(4)), ExactPolynomial({3, 0, -6, 0, 1}));
  EXPECT_EQ(hk::matching_polynomial(cycle(4)).degree(), 4u);
}

TEST(CompleteGraph, EdgeCounts) {
  EXPECT_EQ(hk::complete_graph(1).edge_count(), 0u);
  EXPECT_EQ(hk::complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(hk::complete_graph(5).edge_count(), 10u);
  EXPECT_THROW(hk::complete_graph(0), hk::InvalidArgument);
}

TEST(HermiteMatching, CompleteGraphsGiveHermite) {
  for (unsigned m = 1; m <= 20; ++m) EXPECT_TRUE(hk::verify_hermite_matching(m)) << m;
  EXPECT_THROW(hk::verify_hermite_matching(21), hk::InvalidArgument);
}

TEST(HermiteMatching, EnumerationOracleUpToTwelve) {
  for (unsigned m = 1; m <= 12; ++m) {
    const auto counts = oracle::matchings_by_enumeration(hk::complete_graph(m));
    std::vector<Rational> coeffs(m + 1);
    for (unsigned j = 0; j < counts.size(); ++j) coeffs[m - 2 * j] = (j % 2 == 0 ? 1 : -1) * Rational(counts[j]);
    EXPECT_EQ(ExactPolynomial(coeffs), hk::hermite_explicit(m)) << m;
  }
}

TEST(CompleteKpartite, Examples) {
  const auto k2 = hk::complete_kpartite({1, 1});
  EXPECT_EQ(k2.edge_count(), 1u);
  const auto c4 = hk::complete_kpartite({2, 2});
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_FALSE(c4.has_edge(1, 2));
  EXPECT_FALSE(c4.has_edge(3, 4));
  EXPECT_EQ(hk::matching_polynomial(c4), hk::matching_polynomial(cycle(4)));
  EXPECT_EQ(hk::complete_kpartite({1, 1, 1}).edges(), hk::complete_graph(3).edges());
  EXPECT_THROW(hk::complete_kpartite({}), hk::InvalidArgument);
}

TEST(CompleteMatches, Examples) {
  EXPECT_EQ(hk::count_complete_matches({3, 3}), 6);
  EXPECT_EQ(hk::count_complete_matches({1, 1, 2}), 2);
  EXPECT_EQ(hk::count_complete_matches({2, 3, 3}), 36);
  EXPECT_EQ(oracle::perfect_matchings_by_enumeration({2, 3, 3}), 36);
  EXPECT_EQ(hk::count_complete_matches({1, 2}), 0);
  EXPECT_EQ(hk::count_complete_matches({0, 0}), 1);
  EXPECT_EQ(hk::count_complete_matches({4}), 0);
  EXPECT_EQ(hk::count_complete_matches({0, 2, 0, 2}), 2);
}

TEST(CompleteMatches, SymmetricUnderPermutation) {
  EXPECT_EQ(hk::count_complete_matches({1, 2, 3, 4}), hk::count_complete_matches({4, 1, 3, 2}));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(hk::partite_closed_form({2, 2}), 2);
  EXPECT_EQ(hk::partite_closed_form({2, 3}), 0);
  EXPECT_EQ(hk::partite_closed_form({1, 1, 2}), 2);
  EXPECT_EQ(hk::partite_closed_form({1, 2, 4}), 0);
  EXPECT_EQ(hk::partite_closed_form({1, 1, 4}), 0);
  EXPECT_THROW(hk::partite_closed_form({1}), hk::InvalidArgument);
  EXPECT_THROW(hk::partite_closed_form({1, 1, 1, 1}), hk::InvalidArgument);
}

TEST(CompleteMatches, TripleAgreement) {
  for (unsigned k = 1; k <= 4; ++k) {
    std::vector<PartSizes> vectors;
    PartSizes cur;
    part_vectors(k, 12, cur, vectors);
    for (const auto& parts : vectors) {
      const BigInt p = hk::count_complete_matches(parts);
      EXPECT_EQ(p, oracle::perfect_matchings_by_enumeration(parts));
      if (k == 2 || k == 3) EXPECT_EQ(p, hk::partite_closed_form(parts));
    }
  }
}

TEST(ProductIntegral, Examples) {
  const double root = std::sqrt(2 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(hk::hermite_product_integral({0, 0, 0}), root);
  EXPECT_DOUBLE_EQ(hk::hermite_product_integral({5, 5}), root * 120);
  EXPECT_DOUBLE_EQ(hk::hermite_product_integral({1, 1, 2}), 2 * root);
}

TEST(ProductIntegral, QuadratureBridge) {
  for (unsigned k = 1; k <= 4; ++k) {
    std::vector<PartSizes> vectors;
    PartSizes cur;
    part_vectors(k, 12, cur, vectors);
    for (const auto& parts : vectors) {
      unsigned total = 0;
      for (unsigned n : parts) total += n;
      const auto rule = hk::gauss_hermite_rule(total / 2 + 1);
      const double q = hk::integrate_weighted(
          [&](double x) {
            double prod = 1.0;
            for (unsigned n : parts) prod *= hk::eval_hermite(n, x);
            return prod;
          },
          rule);
      const double j = hk::hermite_product_integral(parts);
      double scale = std::sqrt(2 * std::numbers::pi);
      for (unsigned n : parts) scale *= std::sqrt(std::tgamma(n + 1.0));
      if (j == 0.0) {
        EXPECT_LE(std::abs(q), 1e-8 * scale);
      } else {
        EXPECT_LE(oracle::relative_error(j, q), 1e-8);
      }
    }
  }
}

TEST(Linearization, Examples) {
  EXPECT_EQ(hk::linearization_coeffs(1, 1), (std::map<unsigned, BigInt>{{2, 1}, {0, 1}}));
  EXPECT_EQ(hk::linearization_coeffs(2, 2), (std::map<unsigned, BigInt>{{4, 1}, {2, 4}, {0, 2}}));
  EXPECT_EQ(hk::linearization_coeffs(0, 7), (std::map<unsigned, BigInt>{{7, 1}}));
}

TEST(Linearization, ReproducesExactProduct) {
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 10; ++n) {
      ExactPolynomial sum;
      for (const auto& [l, a] : hk::linearization_coeffs(m, n)) sum += hk::hermite_explicit(l) * Rational(a);
      const auto product = hk::hermite_explicit(m) * hk::hermite_explicit(n);
      EXPECT_EQ(sum, product) << m << " " << n;

      // re-expand the product in the He basis through the connection matrix
      const unsigned deg = m + n;
      std::vector<Rational> coords(deg + 1);
      for (unsigned i = 0; i <= deg; ++i) coords[i] = product.coefficient(i);
      const auto he = hk::change_of_basis(deg, hk::BasisTag::Monomial, hk::BasisTag::He).apply(coords);
      const auto lin = hk::linearization_coeffs(m, n);
      for (unsigned l = 0; l <= deg; ++l) {
        const auto it = lin.find(l);
        EXPECT_EQ(he[l], it == lin.end() ? Rational(0) : Rational(it->second)) << m << " " << n << " " << l;
      }
    }
}

TEST(Linearization, MatchCountRoute) {
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 10; ++n) {
      const auto lin = hk::linearization_coeffs(m, n);
      for (unsigned l = 0; l <= 10; ++l) {
        const auto it = lin.find(l);
        const Rational expected = it == lin.end() ? Rational(0) : Rational(it->second);
        EXPECT_EQ(hk::linearization_from_matches(l, m, n), expected) << l << " " << m << " " << n;
      }
    }
}
