#include "hermite_kit/hermite.hpp"

#include "hermite_kit/errors.hpp"

#include <cmath>
#include <string>

namespace hermite_kit {

PolyFamily parse_family(std::string_view name) {
  if (name == "he" || name == "He") return PolyFamily::ProbabilistHe;
  if (name == "h" || name == "H") return PolyFamily::PhysicistH;
  throw InvalidArgument("unknown polynomial family '" + std::string(name) + "' (expected he or h)");
}

HermiteFunctionKind parse_function_kind(std::string_view name) {
  if (name == "he") return HermiteFunctionKind::ChebyshevHermite;
  if (name == "h") return HermiteFunctionKind::Hermite;
  throw InvalidArgument("unknown function kind '" + std::string(name) + "' (expected he or h)");
}

namespace {

ExactPolynomial he_to_physicist(const ExactPolynomial& he, unsigned n) {
  std::vector<Rational> out(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Rational c = he.coefficient(k);
    if (c == 0) continue;
    // parity guarantees n + k is even for every nonzero coefficient
    BigInt scale = BigInt(1) << ((n + k) / 2);
    out[k] = c * scale;
  }
  return ExactPolynomial(std::move(out));
}

}  // namespace

ExactPolynomial hermite_recurrence(unsigned n, PolyFamily family) {
  ExactPolynomial prev = ExactPolynomial::constant(1);
  ExactPolynomial cur = prev;
  if (n >= 1) cur = ExactPolynomial::monomial(1);
  const ExactPolynomial x = ExactPolynomial::monomial(1);
  for (unsigned k = 1; k < n; ++k) {
    ExactPolynomial next = x * cur - prev * Rational(k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (family == PolyFamily::PhysicistH) return he_to_physicist(cur, n);
  return cur;
}

ExactPolynomial hermite_explicit(unsigned n, PolyFamily family) {
  std::vector<Rational> coeffs(n + 1);
  const BigInt nf = factorial(n);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    const unsigned power = n - 2 * j;
    Rational term(nf, factorial(power) * factorial(j));
    if (family == PolyFamily::ProbabilistHe) {
      term /= BigInt(1) << j;
    } else {
      term *= BigInt(1) << power;
    }
    coeffs[power] = (j % 2 == 0) ? term : Rational(-term);
  }
  return ExactPolynomial(std::move(coeffs));
}

std::vector<ExactPolynomial> gram_schmidt_construct(unsigned n) {
  // Gaussian moments divided by sqrt(2 pi): (k-1)!! for even k, 0 for odd k.
  std::vector<Rational> moment(2 * n + 1);
  for (unsigned k = 0; k <= 2 * n; k += 2) moment[k] = Rational(double_factorial(static_cast<int>(k) - 1));

  auto inner = [&](const ExactPolynomial& p, const ExactPolynomial& q) {
    Rational acc = 0;
    for (unsigned a = 0; a <= p.degree(); ++a) {
      if (p.coeffs()[a] == 0) continue;
      for (unsigned b = 0; b <= q.degree(); ++b) {
        if ((a + b) % 2 == 0 && q.coeffs()[b] != 0) acc += p.coeffs()[a] * q.coeffs()[b] * moment[a + b];
      }
    }
    return acc;
  };

  std::vector<ExactPolynomial> basis;
  std::vector<Rational> norms;
  basis.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    ExactPolynomial p = ExactPolynomial::monomial(k);
    for (unsigned j = 0; j < k; ++j) {
      Rational proj = inner(ExactPolynomial::monomial(k), basis[j]) / norms[j];
      if (proj != 0) p -= basis[j] * proj;
    }
    // monic already: subtraction only touches lower degrees
    norms.push_back(inner(p, p));
    basis.push_back(std::move(p));
  }
  return basis;
}

ExactPolynomial hermite_derivative(unsigned n) {
  if (n == 0) return ExactPolynomial();
  return hermite_recurrence(n - 1) * Rational(n);
}

double eval_hermite(unsigned n, double x, PolyFamily family) {
  const double c = family == PolyFamily::ProbabilistHe ? 1.0 : 2.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = c * x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = c * (x * cur - k * prev);
    prev = cur;
    cur = next;
    // once infinite, the next step would produce inf - inf
    if (std::isinf(cur)) return cur;
  }
  return cur;
}

double eval_hermite_over_factorial(unsigned n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = (x * cur - prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_hermite_function(unsigned n, double x, HermiteFunctionKind kind) {
  const bool physicist = kind == HermiteFunctionKind::Hermite;
  const double c = physicist ? 2.0 : 1.0;
  double log_scale = physicist ? -0.5 * x * x : -0.25 * x * x;

  // value = cur * exp(log_scale)
  double prev = 1.0;
  double cur = 1.0;
  if (n >= 1) cur = c * x;
  constexpr double kRescaleAbove = 1e150;
  const double kRescaleLog = std::log(kRescaleAbove);
  for (unsigned k = 1; k < n; ++k) {
    const double next = c * (x * cur - k * prev);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      prev /= kRescaleAbove;
      cur /= kRescaleAbove;
      log_scale += kRescaleLog;
    }
  }
  if (cur == 0.0) return 0.0;
  if (log_scale > -700.0 && log_scale < 700.0) return cur * std::exp(log_scale);
  return std::copysign(std::exp(std::log(std::abs(cur)) + log_scale), cur);
}

GeneratingFunctionCheck generating_function_check(double x, double t, unsigned order) {
  double sum = 0.0;
  double tn = 1.0;
  for (unsigned k = 0; k <= order; ++k) {
    sum += eval_hermite_over_factorial(k, x) * tn;
    tn *= t;
  }
  return {sum, std::exp(x * t - 0.5 * t * t)};
}

double hermite_ode_residual(unsigned n, double x) {
  const ExactPolynomial he = hermite_recurrence(n);
  const ExactPolynomial residual =
      he.derivative(2) - ExactPolynomial::monomial(1) * he.derivative(1) + he * Rational(n);
  return residual.evaluate(x);
}

}  // namespace hermite_kit
