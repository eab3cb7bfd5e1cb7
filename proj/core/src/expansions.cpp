#include "hermite_kit/expansions.hpp"

#include "hermite_kit/errors.hpp"
#include "hermite_kit/hermite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hermite_kit {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

unsigned resolve_quad_order(std::optional<unsigned> requested, unsigned truncation) {
  const unsigned q = requested.value_or(default_quad_order(truncation));
  if (q < truncation + 2) {
    throw InvalidArgument("quadrature order " + std::to_string(q) + " is below truncation + 2 = " +
                          std::to_string(truncation + 2));
  }
  return q;
}

}  // namespace

std::string to_string(SeriesConvention c) {
  return c == SeriesConvention::DensityWeighted ? "DensityWeighted" : "PlainRV";
}

SeriesConvention parse_convention(std::string_view name) {
  if (name == "DensityWeighted" || name == "density") return SeriesConvention::DensityWeighted;
  if (name == "PlainRV" || name == "plain") return SeriesConvention::PlainRV;
  throw InvalidArgument("unknown series convention '" + std::string(name) + "'");
}

HermiteSeries fourier_hermite_coeffs(const Integrand& f, unsigned truncation, std::optional<unsigned> quad_order) {
  const auto rule = gauss_hermite_rule(resolve_quad_order(quad_order, truncation));

  // f sampled once per node, reused for every coefficient
  std::vector<double> weighted(rule.order);
  HermiteSeries s;
  s.convention = SeriesConvention::DensityWeighted;
  for (unsigned i = 0; i < rule.order; ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw EvaluationError("density is not finite at node " + std::to_string(i), i);
    }
    weighted[i] = rule.whole_line_weights[i] * v;
    if (!std::isfinite(weighted[i])) {
      s.range_warning = true;
      weighted[i] = 0.0;
    }
  }

  s.coeffs.assign(truncation + 1, 0.0);
  for (unsigned i = 0; i < rule.order; ++i) {
    if (weighted[i] == 0.0) continue;
    const double x = rule.nodes[i];
    // He_n(x)/n! by its own recurrence
    double prev = 0.0;
    double cur = 1.0;
    for (unsigned n = 0; n <= truncation; ++n) {
      s.coeffs[n] += weighted[i] * cur;
      const double next = (x * cur - prev) / (n + 1);
      prev = cur;
      cur = next;
    }
  }
  for (auto& a : s.coeffs) a /= kSqrt2Pi;
  return s;
}

HermiteSeries shifted_gaussian_series(double mu, unsigned truncation) {
  HermiteSeries s;
  s.convention = SeriesConvention::DensityWeighted;
  s.coeffs.resize(truncation + 1);
  double term = 1.0 / kSqrt2Pi;
  for (unsigned n = 0; n <= truncation; ++n) {
    s.coeffs[n] = term;
    term *= mu / (n + 1);
  }
  return s;
}

double evaluate_series(const HermiteSeries& s, double x) {
  double acc = 0.0;
  double prev = 0.0;
  double cur = 1.0;
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    acc += s.coeffs[n] * cur;
    const double next = x * cur - static_cast<double>(n) * prev;
    prev = cur;
    cur = next;
  }
  if (s.convention == SeriesConvention::DensityWeighted) acc *= std::exp(-0.5 * x * x);
  return acc;
}

double StandardizedMoments::standardized(unsigned k) const {
  if (k == 0) return 1.0;
  if (k == 1) return 0.0;
  if (k == 2) return 1.0;
  if (k - 3 >= nu.size()) throw InvalidArgument("standardized moment nu_" + std::to_string(k) + " not supplied");
  return nu[k - 3];
}

StandardizedMoments parse_moment_list(std::string_view text) {
  std::vector<double> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r,");
    const std::string token = line.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw ParseError("trailing characters in '" + token + "'", lineno);
      values.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("not a number: '" + token + "'", lineno);
    }
  }
  if (values.size() < 2) throw ParseError("moment list needs at least mu and sigma", 0);
  StandardizedMoments m;
  m.mu = values[0];
  m.sigma = values[1];
  m.nu.assign(values.begin() + 2, values.end());
  if (!(m.sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  return m;
}

DensityValue gram_charlier_density(const StandardizedMoments& m, double x) {
  if (!(m.sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  const double z = (x - m.mu) / m.sigma;
  const double base = std::exp(-0.5 * z * z) / (kSqrt2Pi * m.sigma);

  double value = 0.0;
  if (m.order() <= 4) {
    double bracket = 1.0;
    if (m.order() >= 3) bracket += m.standardized(3) / 6.0 * eval_hermite(3, z);
    if (m.order() >= 4) bracket += (m.standardized(4) - 3.0) / 24.0 * eval_hermite(4, z);
    value = base * bracket;
  } else {
    value = evaluate_series(gram_charlier_coeffs(m), z) / m.sigma;
  }
  return {value, value < 0.0};
}

HermiteSeries gram_charlier_coeffs(const StandardizedMoments& m) {
  if (!(m.sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  HermiteSeries s;
  s.convention = SeriesConvention::DensityWeighted;
  const unsigned order = m.order();
  s.coeffs.resize(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    // E[He_n(Z)] = sum_k [x^k]He_n nu_k
    const auto he = hermite_explicit(n);
    double expectation = 0.0;
    for (unsigned k = 0; k <= n; ++k) {
      const Rational c = he.coefficient(k);
      if (c != 0) expectation += to_double(c) * m.standardized(k);
    }
    s.coeffs[n] = expectation / (kSqrt2Pi * std::tgamma(n + 1.0));
  }
  return s;
}

double tail_coefficient_ratio(const HermiteSeries& s) {
  if (s.coeffs.empty()) return 0.0;
  const unsigned n = s.truncation();
  return std::abs(s.coeffs.back()) * std::exp(0.5 * std::lgamma(n + 1.0));
}

HermiteSeries wce_coeffs_1d(const Integrand& f, unsigned truncation, std::optional<unsigned> quad_order) {
  const auto rule = gauss_hermite_rule(resolve_quad_order(quad_order, truncation));
  std::vector<double> samples(rule.order);
  double second_moment = 0.0;
  for (unsigned i = 0; i < rule.order; ++i) {
    samples[i] = f(rule.nodes[i]);
    if (!std::isfinite(samples[i])) throw EvaluationError("f is not finite at node " + std::to_string(i), i);
    second_moment += rule.weights[i] * samples[i] * samples[i];
  }
  if (!std::isfinite(second_moment)) throw InvalidArgument("E[f(Y)^2] is not finite");

  HermiteSeries s;
  s.convention = SeriesConvention::PlainRV;
  s.coeffs.assign(truncation + 1, 0.0);
  for (unsigned i = 0; i < rule.order; ++i) {
    const double wf = rule.weights[i] * samples[i];
    const double x = rule.nodes[i];
    double prev = 0.0;
    double cur = 1.0;  // He_n(x)/n!
    for (unsigned n = 0; n <= truncation; ++n) {
      s.coeffs[n] += wf * cur;
      const double next = (x * cur - prev) / (n + 1);
      prev = cur;
      cur = next;
    }
  }
  for (auto& b : s.coeffs) b /= kSqrt2Pi;
  return s;
}

WceTensorCoeffs wce_coeffs_multi(const MultiIntegrand& f, unsigned dimension, unsigned truncation,
                                 std::optional<unsigned> quad_order, std::size_t max_points) {
  const auto rule = tensor_cubature(dimension, resolve_quad_order(quad_order, truncation), max_points);
  WceTensorCoeffs out;
  out.dimension = dimension;
  for (unsigned n = 0; n <= truncation; ++n) out.ranks.emplace_back(dimension, n);

  for (std::size_t p = 0; p < rule.size(); ++p) {
    const auto y = rule.point(p);
    const double v = f(y);
    if (!std::isfinite(v)) throw EvaluationError("f is not finite at cubature point " + std::to_string(p), p);
    const double wf = rule.weights[p] * v;
    if (wf == 0.0) continue;
    const auto he = hermite_tensors(truncation, y);
    for (unsigned n = 0; n <= truncation; ++n) {
      auto& b = out.ranks[n];
      for (std::size_t i = 0; i < b.size(); ++i) b[i] += wf * he[n][i];
    }
  }
  const double norm = std::pow(2.0 * std::numbers::pi, 0.5 * dimension);
  for (unsigned n = 0; n <= truncation; ++n) {
    const double scale = 1.0 / (norm * std::tgamma(n + 1.0));
    auto& b = out.ranks[n];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] *= scale;
  }
  return out;
}

double evaluate_wce(const WceTensorCoeffs& coeffs, std::span<const double> x) {
  if (x.size() != coeffs.dimension) throw InvalidArgument("point dimension differs from expansion dimension");
  if (coeffs.ranks.empty()) return 0.0;
  const auto he = hermite_tensors(coeffs.ranks.size() - 1, x);
  double acc = 0.0;
  for (std::size_t n = 0; n < coeffs.ranks.size(); ++n) acc += contract(coeffs.ranks[n], he[n]);
  return acc;
}

ExactPolynomial gaussian_mixture_deconvolve(const ExactPolynomial& g, const Rational& sigma,
                                            std::optional<unsigned> max_terms) {
  if (sigma <= 0) throw InvalidArgument("sigma must be positive");
  const Rational step = -sigma * sigma / 2;
  ExactPolynomial f = g;
  ExactPolynomial derivative = g;
  Rational factor = 1;
  for (unsigned j = 1; 2 * j <= g.degree(); ++j) {
    if (max_terms && j > *max_terms) break;
    derivative = derivative.derivative(2);
    factor *= step / j;
    f += derivative * factor;
  }
  return f;
}

double fourier_eigen_check(unsigned n, std::span<const double> k_grid, unsigned quad_order) {
  if (quad_order < 2 * n + 10) {
    throw InvalidArgument("quadrature order " + std::to_string(quad_order) + " is below 2n+10 = " +
                          std::to_string(2 * n + 10));
  }
  const auto rule = gauss_hermite_rule(quad_order);
  const auto h = [n](double x) { return eval_hermite_function(n, x, HermiteFunctionKind::Hermite); };

  double worst = 0.0;
  for (double k : k_grid) {
    const double re = integrate_whole_line([&](double x) { return h(x) * std::cos(k * x); }, rule).value / kSqrt2Pi;
    const double im = -integrate_whole_line([&](double x) { return h(x) * std::sin(k * x); }, rule).value / kSqrt2Pi;
    // (-i)^n h_n(k)
    const double hk = h(k);
    double expect_re = 0.0;
    double expect_im = 0.0;
    switch (n % 4) {
      case 0: expect_re = hk; break;
      case 1: expect_im = -hk; break;
      case 2: expect_re = -hk; break;
      case 3: expect_im = hk; break;
    }
    worst = std::max(worst, std::hypot(re - expect_re, im - expect_im));
  }
  return worst;
}

}  // namespace hermite_kit
