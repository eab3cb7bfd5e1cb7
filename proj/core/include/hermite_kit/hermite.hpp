#pragma once

#include "hermite_kit/exact.hpp"

#include <string_view>
#include <vector>

namespace hermite_kit {

/// Polynomial normalization. ProbabilistHe is the monic family orthogonal
/// under e^{-x^2/2}; PhysicistH satisfies H_n(x) = 2^{n/2} He_n(sqrt(2) x).
enum class PolyFamily { ProbabilistHe, PhysicistH };

/// he_n(x) = e^{-x^2/4} He_n(x) and h_n(x) = e^{-x^2/2} H_n(x).
enum class HermiteFunctionKind { ChebyshevHermite, Hermite };

PolyFamily parse_family(std::string_view name);
HermiteFunctionKind parse_function_kind(std::string_view name);

// Three-term recurrence He_{n+1} = x He_n - n He_{n-1} in exact arithmetic.
// PhysicistH is mapped from He_n coefficient-wise: [x^k]H_n = 2^{(n+k)/2} [x^k]He_n.
ExactPolynomial hermite_recurrence(unsigned n, PolyFamily family = PolyFamily::ProbabilistHe);

// Closed sums n! sum_j (-1)^j x^{n-2j} / (2^j (n-2j)! j!) for He_n and
// n! sum_j (-1)^j (2x)^{n-2j} / ((n-2j)! j!) for H_n.
ExactPolynomial hermite_explicit(unsigned n, PolyFamily family = PolyFamily::ProbabilistHe);

/// Orthogonalizes 1, x, ..., x^n against e^{-x^2/2} with exact moments
/// (k-1)!! (in units of sqrt(2 pi)) and returns the n+1 monic results.
std::vector<ExactPolynomial> gram_schmidt_construct(unsigned n);

// He_n' = n He_{n-1}; the zero polynomial for n = 0.
ExactPolynomial hermite_derivative(unsigned n);

/// Forward recurrence on values. Overflows to +-inf when the true value
/// exceeds the double range.
double eval_hermite(unsigned n, double x, PolyFamily family = PolyFamily::ProbabilistHe);

// He_n(x) / n!, bounded for moderate x at any n.
double eval_hermite_over_factorial(unsigned n, double x);

/// Hermite functions via the recurrence on the weighted values themselves,
/// carrying a separate exponent so neither He_n nor the Gaussian factor is
/// ever formed on its own.
double eval_hermite_function(unsigned n, double x,
                             HermiteFunctionKind kind = HermiteFunctionKind::ChebyshevHermite);

struct GeneratingFunctionCheck {
  double partial_sum;  // sum_{n<=N} He_n(x) t^n / n!
  double target;       // e^{xt - t^2/2}
};
GeneratingFunctionCheck generating_function_check(double x, double t, unsigned order);

// He_n'' - x He_n' + n He_n built exactly, then evaluated at x.
double hermite_ode_residual(unsigned n, double x);

}  // namespace hermite_kit
