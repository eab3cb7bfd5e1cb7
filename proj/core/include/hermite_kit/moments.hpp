#pragma once

#include "hermite_kit/exact.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hermite_kit {

/// Polynomial bases of P_n[x] that the connection machinery converts between.
/// GaussMoment element k is x -> E[Y^k] for Y ~ N(x, 1).
enum class BasisTag { Monomial, TwoXMonomial, He, H, GaussMoment };

std::string to_string(BasisTag tag);
BasisTag parse_basis(std::string_view name);

/// Exact (n+1)x(n+1) change-of-basis matrix P_{to <- from}: column k holds
/// the coordinates of basis element k of `from` in the `to` basis, so
/// [p]_to = M [p]_from.
class ChangeOfBasisMatrix {
 public:
  ChangeOfBasisMatrix(std::size_t size, BasisTag from, BasisTag to);

  std::size_t size() const noexcept { return size_; }
  BasisTag from() const noexcept { return from_; }
  BasisTag to() const noexcept { return to_; }

  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }

  bool is_upper_triangular() const;
  bool is_identity() const;
  std::vector<Rational> apply(const std::vector<Rational>& coords) const;

  // Entrywise equality, ignoring basis tags.
  bool same_entries(const ChangeOfBasisMatrix& other) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t size_;
  BasisTag from_;
  BasisTag to_;
  std::vector<Rational> entries_;
};

// Plain matrix product a * b; requires b.to() == a.from().
ChangeOfBasisMatrix compose(const ChangeOfBasisMatrix& a, const ChangeOfBasisMatrix& b);

// Supported pairs: He <-> Monomial, He <-> GaussMoment, H <-> TwoXMonomial.
// Anything else throws InvalidArgument.
ChangeOfBasisMatrix change_of_basis(unsigned n, BasisTag from, BasisTag to);

/// E[X^n] for X ~ N(mu, sigma^2) from the closed sum
/// sigma^n n! sum_j (mu/sigma)^{n-2j} / (2^j (n-2j)! j!).
double gaussian_raw_moment(unsigned n, double mu, double sigma);

// The same moment as (-i sigma)^n He_n(i mu / sigma). The powers of i are
// resolved per coefficient, which is always real since He_n has parity n.
double gaussian_raw_moment_hermite_form(unsigned n, double mu, double sigma);

Rational gaussian_raw_moment_exact(unsigned n, const Rational& mu, const Rational& sigma);

// x -> E[Y^n], Y ~ N(x, 1), as an exact polynomial in x.
ExactPolynomial gauss_moment_polynomial(unsigned n);

// c_j with He_n = sum_j c_j E[Y^{n-2j}]: c_j = n! (-1)^j / ((n-2j)! j!).
std::vector<BigInt> hermite_in_moments(unsigned n);

// d_j with E[Y^n] = sum_j d_j He_{n-2j}: d_j = n! / ((n-2j)! j!).
std::vector<BigInt> moments_in_hermite(unsigned n);

// E[He_n(Y)] for Y ~ N(x, 1), which is x^n.
double expected_hermite_of_gaussian(unsigned n, double x);

// sigma^n He_n(x / sigma): the polynomial whose N(0, sigma^2) smoothing is y^n.
double weierstrass_deconvolution_identity(unsigned n, double sigma, double x);

}  // namespace hermite_kit
