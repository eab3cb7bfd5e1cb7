#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hermite_kit {

inline constexpr unsigned kMaxQuadratureOrder = 200;
inline constexpr std::size_t kMaxCubaturePoints = 10'000'000;

/// N-point Gauss rule for the weight e^{-x^2/2} on the real line.
///
/// nodes are the zeros of He_N in ascending order, exactly sign-symmetric
/// (the middle node is 0 for odd N). weights are the Christoffel numbers,
/// summing to sqrt(2 pi). whole_line_weights hold w_i e^{x_i^2/2}, formed in
/// log space, for integrating functions that carry their own decay.
struct QuadratureRule {
  unsigned order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> whole_line_weights;
};

QuadratureRule gauss_hermite_rule(unsigned order);

using Integrand = std::function<double(double)>;

// sum_i w_i f(x_i). Throws EvaluationError naming the first node where f is
// not finite.
double integrate_weighted(const Integrand& f, const QuadratureRule& rule);

struct WholeLineIntegral {
  double value = 0.0;
  // Set when a node's scaled weight or weighted sample left the double range;
  // the value is still returned.
  bool range_warning = false;
  std::size_t flagged_node = 0;
};

// sum_i w_i e^{x_i^2/2} f(x_i), i.e. the integral of f over the whole line.
WholeLineIntegral integrate_whole_line(const Integrand& f, const QuadratureRule& rule);

/// Tensor product of one Gauss-Hermite rule over each of d axes.
struct CubatureRule {
  unsigned dimension = 0;
  unsigned order = 0;
  std::vector<double> points;  // row-major, dimension coordinates per point
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(points).subspan(i * dimension, dimension);
  }
};

// Throws BudgetExceeded (carrying the required point count) when
// order^dimension exceeds max_points.
CubatureRule tensor_cubature(unsigned dimension, unsigned order,
                             std::size_t max_points = kMaxCubaturePoints);

using MultiIntegrand = std::function<double(std::span<const double>)>;

// sum_p w_p f(y_p) against e^{-|y|^2/2}.
double integrate_cubature(const MultiIntegrand& f, const CubatureRule& rule);

}  // namespace hermite_kit
