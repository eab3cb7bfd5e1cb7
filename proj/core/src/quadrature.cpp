#include "hermite_kit/quadrature.hpp"

#include "hermite_kit/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hermite_kit {

namespace {

struct OrthonormalPair {
  double last;      // p_n(x)
  double previous;  // p_{n-1}(x)
  double log_scale; // both multiplied by exp(log_scale)
};

// Orthonormal He_k / sqrt(k!) by the rescaled recurrence
// p_{k+1} = (x p_k - sqrt(k) p_{k-1}) / sqrt(k+1).
OrthonormalPair orthonormal_hermite(unsigned n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  double log_scale = 0.0;
  for (unsigned k = 0; k < n; ++k) {
    const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) / std::sqrt(k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150) {
      cur *= 1e-150;
      prev *= 1e-150;
      log_scale += 150.0 * std::numbers::ln10;
    }
  }
  return {cur, prev, log_scale};
}

double polish_root(double x, unsigned n, std::size_t index) {
  constexpr int kMaxIterations = 100;
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto p = orthonormal_hermite(n, x);
    // He_N / He_N' = p_N / (sqrt(N) p_{N-1})
    const double step = p.last / (std::sqrt(static_cast<double>(n)) * p.previous);
    if (!std::isfinite(step)) break;
    x -= step;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) return x;
  }
  throw ConvergenceError("Newton refinement of node " + std::to_string(index) + " of He_" +
                             std::to_string(n) + " did not converge",
                         index);
}

}  // namespace

QuadratureRule gauss_hermite_rule(unsigned order) {
  if (order == 0) throw InvalidArgument("quadrature order must be at least 1");
  if (order > kMaxQuadratureOrder) {
    throw InvalidArgument("quadrature order " + std::to_string(order) + " exceeds " +
                          std::to_string(kMaxQuadratureOrder));
  }
  const unsigned n = order;
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);

  if (n > 1) {
    // Jacobi matrix of the monic recurrence: zero diagonal, off-diagonal sqrt(k).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (unsigned k = 0; k + 1 < n; ++k) sub[k] = std::sqrt(k + 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("tridiagonal eigenvalue solver failed for order " + std::to_string(n), 0);
    }
    for (unsigned i = 0; i < n; ++i) rule.nodes[i] = solver.eigenvalues()[i];
    std::sort(rule.nodes.begin(), rule.nodes.end());
    for (unsigned i = 0; i < n; ++i) rule.nodes[i] = polish_root(rule.nodes[i], n, i);
    std::sort(rule.nodes.begin(), rule.nodes.end());

    for (unsigned i = 0; i < n / 2; ++i) {
      const double half = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
      rule.nodes[i] = -half;
      rule.nodes[n - 1 - i] = half;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  }

  // w_i = sqrt(2 pi) N! / (N He_{N-1}(x_i))^2 = sqrt(2 pi) / (N p_{N-1}(x_i)^2)
  const double log_base = 0.5 * std::log(2.0 * std::numbers::pi) - std::log(static_cast<double>(n));
  rule.weights.resize(n);
  rule.whole_line_weights.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    const auto p = orthonormal_hermite(n - 1, x);
    const double log_p = std::log(std::abs(p.last)) + p.log_scale;
    const double log_w = log_base - 2.0 * log_p;
    rule.weights[i] = std::exp(log_w);
    rule.whole_line_weights[i] = std::exp(log_w + 0.5 * x * x);
  }
  for (unsigned i = 0; i < n / 2; ++i) {
    const double w = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
    const double wl = 0.5 * (rule.whole_line_weights[i] + rule.whole_line_weights[n - 1 - i]);
    rule.weights[i] = rule.weights[n - 1 - i] = w;
    rule.whole_line_weights[i] = rule.whole_line_weights[n - 1 - i] = wl;
  }
  return rule;
}

double integrate_weighted(const Integrand& f, const QuadratureRule& rule) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrand is not finite at node " + std::to_string(i) + " (x = " +
                                std::to_string(rule.nodes[i]) + ")",
                            i);
    }
    acc += rule.weights[i] * v;
  }
  return acc;
}

WholeLineIntegral integrate_whole_line(const Integrand& f, const QuadratureRule& rule) {
  WholeLineIntegral out;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw EvaluationError("integrand is not finite at node " + std::to_string(i) + " (x = " +
                                std::to_string(rule.nodes[i]) + ")",
                            i);
    }
    const double term = rule.whole_line_weights[i] * v;
    if (!std::isfinite(term) || (rule.weights[i] == 0.0 && v != 0.0)) {
      if (!out.range_warning) out.flagged_node = i;
      out.range_warning = true;
      if (!std::isfinite(term)) continue;
    }
    out.value += term;
  }
  if (!std::isfinite(out.value)) out.range_warning = true;
  return out;
}

CubatureRule tensor_cubature(unsigned dimension, unsigned order, std::size_t max_points) {
  if (dimension == 0) throw InvalidArgument("cubature dimension must be at least 1");
  if (order == 0) throw InvalidArgument("quadrature order must be at least 1");

  std::size_t count = 1;
  bool over = false;
  for (unsigned k = 0; k < dimension; ++k) {
    if (count > max_points / order) {
      over = true;
      break;
    }
    count *= order;
  }
  if (over || count > max_points) {
    double required = std::pow(static_cast<double>(order), dimension);
    std::size_t req = required >= static_cast<double>(std::numeric_limits<std::size_t>::max())
                          ? std::numeric_limits<std::size_t>::max()
                          : static_cast<std::size_t>(required);
    throw BudgetExceeded("tensor cubature needs " + std::to_string(req) + " points, budget is " +
                             std::to_string(max_points),
                         req, max_points);
  }

  const QuadratureRule axis = gauss_hermite_rule(order);
  CubatureRule rule;
  rule.dimension = dimension;
  rule.order = order;
  rule.points.resize(count * dimension);
  rule.weights.resize(count);
  std::vector<unsigned> digit(dimension, 0);
  for (std::size_t p = 0; p < count; ++p) {
    double w = 1.0;
    for (unsigned k = 0; k < dimension; ++k) {
      rule.points[p * dimension + k] = axis.nodes[digit[k]];
      w *= axis.weights[digit[k]];
    }
    rule.weights[p] = w;
    // last axis varies fastest
    for (unsigned k = dimension; k-- > 0;) {
      if (++digit[k] < order) break;
      digit[k] = 0;
    }
  }
  return rule;
}

double integrate_cubature(const MultiIntegrand& f, const CubatureRule& rule) {
  double acc = 0.0;
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const double v = f(rule.point(p));
    if (!std::isfinite(v)) throw EvaluationError("integrand is not finite at cubature point " + std::to_string(p), p);
    acc += rule.weights[p] * v;
  }
  return acc;
}

}  // namespace hermite_kit
