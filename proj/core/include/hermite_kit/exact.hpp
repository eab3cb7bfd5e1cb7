#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hermite_kit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
// (n-1)!! style product n(n-2)(n-4)...; double_factorial(0) = double_factorial(-1) = 1.
BigInt double_factorial(int n);

// Parses "3", "-7/4", "0.125" or "1.5e-3" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
double to_double(const Rational& value);

/// Dense polynomial with exact rational coefficients over the monomial
/// basis, constant term first.
///
/// The representation is canonical: trailing zero coefficients are
/// trimmed, and the zero polynomial is a single zero coefficient with
/// degree 0. Two polynomials compare equal iff their coefficient vectors do.
class ExactPolynomial {
 public:
  ExactPolynomial();
  explicit ExactPolynomial(std::vector<Rational> coeffs);
  ExactPolynomial(std::initializer_list<Rational> coeffs);

  static ExactPolynomial constant(const Rational& c);
  static ExactPolynomial monomial(unsigned k, const Rational& c = 1);

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  Rational coefficient(unsigned i) const;
  const Rational& leading() const noexcept { return coeffs_.back(); }

  bool is_zero() const noexcept;
  bool has_integer_coeffs() const;

  ExactPolynomial derivative(unsigned order = 1) const;
  // p(s * x).
  ExactPolynomial scale_argument(const Rational& s) const;

  Rational evaluate(const Rational& x) const;
  // Horner in double after rounding each coefficient once.
  double evaluate(double x) const;

  ExactPolynomial& operator+=(const ExactPolynomial& rhs);
  ExactPolynomial& operator-=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const Rational& s);

  friend ExactPolynomial operator+(ExactPolynomial lhs, const ExactPolynomial& rhs) { return lhs += rhs; }
  friend ExactPolynomial operator-(ExactPolynomial lhs, const ExactPolynomial& rhs) { return lhs -= rhs; }
  friend ExactPolynomial operator*(ExactPolynomial lhs, const ExactPolynomial& rhs) { return lhs *= rhs; }
  friend ExactPolynomial operator*(ExactPolynomial lhs, const Rational& s) { return lhs *= s; }
  friend ExactPolynomial operator*(const Rational& s, ExactPolynomial rhs) { return rhs *= s; }
  ExactPolynomial operator-() const;

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

  // Decimal coefficient strings, constant term first ("3", "-7/4").
  std::vector<std::string> to_strings() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::string to_string(const ExactPolynomial& p);

}  // namespace hermite_kit
