#pragma once

#include "hermite_kit/exact.hpp"
#include "hermite_kit/quadrature.hpp"
#include "hermite_kit/tensor.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hermite_kit {

/// DensityWeighted: f(x) = e^{-x^2/2} sum_n a_n He_n(x).
/// PlainRV:         f(Y) = sum_n b_n He_n(Y), Y ~ N(0, 1).
enum class SeriesConvention { DensityWeighted, PlainRV };

std::string to_string(SeriesConvention c);
SeriesConvention parse_convention(std::string_view name);

struct HermiteSeries {
  SeriesConvention convention = SeriesConvention::DensityWeighted;
  std::vector<double> coeffs;
  // Propagated from the whole-line quadrature that produced the coefficients.
  bool range_warning = false;

  unsigned truncation() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
};

inline unsigned default_quad_order(unsigned truncation) { return 2 * truncation + 12; }

// a_n = (1/(sqrt(2 pi) n!)) * integral of He_n f over the line. quad_order
// defaults to 2N+12 and must be at least N+2.
HermiteSeries fourier_hermite_coeffs(const Integrand& f, unsigned truncation,
                                     std::optional<unsigned> quad_order = std::nullopt);

// Closed-form coefficients of the N(mu, 1) density: a_n = mu^n / (sqrt(2 pi) n!).
HermiteSeries shifted_gaussian_series(double mu, unsigned truncation);

double evaluate_series(const HermiteSeries& s, double x);

/// A density value from a truncated expansion; negative values are kept
/// as-is and flagged.
struct DensityValue {
  double value = 0.0;
  bool negative = false;
};

/// mu, sigma and the standardized central moments nu_3, nu_4, ... of a
/// random variable.
struct StandardizedMoments {
  double mu = 0.0;
  double sigma = 1.0;
  std::vector<double> nu;  // nu[0] is nu_3

  // nu_k for any k >= 0 (nu_0 = 1, nu_1 = 0, nu_2 = 1).
  double standardized(unsigned k) const;
  unsigned order() const { return 2 + static_cast<unsigned>(nu.size()); }
};

// Parses one value per line: mu, sigma, nu_3, nu_4, ... Blank lines and
// lines starting with '#' are skipped.
StandardizedMoments parse_moment_list(std::string_view text);

/// Gram-Charlier density in z = (x - mu)/sigma. Up to fourth order the
/// closed form phi(z)/sigma * (1 + nu_3/6 He_3(z) + (nu_4 - 3)/24 He_4(z))
/// is used; more moments go through gram_charlier_coeffs.
DensityValue gram_charlier_density(const StandardizedMoments& m, double x);

// Coefficients a_n = E[He_n(Z)] / (sqrt(2 pi) n!), n <= order(), in the
// DensityWeighted convention over the standardized variable z.
HermiteSeries gram_charlier_coeffs(const StandardizedMoments& m);

// |a_N| sqrt(N!) for the last coefficient; growth with N signals a
// diverging expansion.
double tail_coefficient_ratio(const HermiteSeries& s);

// b_n = E[He_n(Y) f(Y)] / n!, Y ~ N(0, 1). Rejects f with non-finite E[f(Y)^2].
HermiteSeries wce_coeffs_1d(const Integrand& f, unsigned truncation,
                            std::optional<unsigned> quad_order = std::nullopt);

/// Rank-n coefficient tensors b^(n) = E[He^(n)(Y) f(Y)] / n! for a function
/// of a standard Gaussian vector in R^d.
struct WceTensorCoeffs {
  unsigned dimension = 0;
  std::vector<HermiteTensor> ranks;  // b^(0) .. b^(N)
};

WceTensorCoeffs wce_coeffs_multi(const MultiIntegrand& f, unsigned dimension, unsigned truncation,
                                 std::optional<unsigned> quad_order = std::nullopt,
                                 std::size_t max_points = kMaxCubaturePoints);

// sum_n b^(n) . He^(n)(x) with full index contraction.
double evaluate_wce(const WceTensorCoeffs& coeffs, std::span<const double> x);

/// Mixing polynomial f with (phi_sigma * f) = g, via the terminating series
///   f = sum_j (-sigma^2/2)^j g^{(2j)} / j!.
/// max_terms, when given, keeps only j <= max_terms.
ExactPolynomial gaussian_mixture_deconvolve(const ExactPolynomial& g, const Rational& sigma,
                                            std::optional<unsigned> max_terms = std::nullopt);

// Max over k of |F[h_n](k) - (-i)^n h_n(k)|, with the transform
// (1/sqrt(2 pi)) * integral h_n(x) e^{-ikx} dx done by quadrature.
double fourier_eigen_check(unsigned n, std::span<const double> k_grid, unsigned quad_order);

}  // namespace hermite_kit
