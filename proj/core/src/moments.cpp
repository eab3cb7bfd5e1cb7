#include "hermite_kit/moments.hpp"

#include "hermite_kit/errors.hpp"
#include "hermite_kit/hermite.hpp"

#include <cmath>

namespace hermite_kit {

std::string to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::Monomial: return "monomial";
    case BasisTag::TwoXMonomial: return "2x-monomial";
    case BasisTag::He: return "he";
    case BasisTag::H: return "h";
    case BasisTag::GaussMoment: return "gauss-moment";
  }
  return "?";
}

BasisTag parse_basis(std::string_view name) {
  if (name == "monomial") return BasisTag::Monomial;
  if (name == "2x-monomial") return BasisTag::TwoXMonomial;
  if (name == "he") return BasisTag::He;
  if (name == "h") return BasisTag::H;
  if (name == "gauss-moment") return BasisTag::GaussMoment;
  throw InvalidArgument("unknown basis '" + std::string(name) + "'");
}

ChangeOfBasisMatrix::ChangeOfBasisMatrix(std::size_t size, BasisTag from, BasisTag to)
    : size_(size), from_(from), to_(to), entries_(size * size) {}

bool ChangeOfBasisMatrix::is_upper_triangular() const {
  for (std::size_t r = 1; r < size_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if ((*this)(r, c) != 0) return false;
  return true;
}

bool ChangeOfBasisMatrix::is_identity() const {
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::vector<Rational> ChangeOfBasisMatrix::apply(const std::vector<Rational>& coords) const {
  if (coords.size() != size_) throw InvalidArgument("coordinate vector length differs from matrix size");
  std::vector<Rational> out(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) out[r] += (*this)(r, c) * coords[c];
  return out;
}

bool ChangeOfBasisMatrix::same_entries(const ChangeOfBasisMatrix& other) const {
  return size_ == other.size_ && entries_ == other.entries_;
}

std::vector<std::vector<std::string>> ChangeOfBasisMatrix::to_strings() const {
  std::vector<std::vector<std::string>> rows(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    rows[r].reserve(size_);
    for (std::size_t c = 0; c < size_; ++c) rows[r].push_back((*this)(r, c).str());
  }
  return rows;
}

ChangeOfBasisMatrix compose(const ChangeOfBasisMatrix& a, const ChangeOfBasisMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("cannot compose matrices of different sizes");
  if (b.to() != a.from()) {
    throw InvalidArgument("cannot compose: " + to_string(b.from()) + "->" + to_string(b.to()) +
                          " followed by " + to_string(a.from()) + "->" + to_string(a.to()));
  }
  const std::size_t n = a.size();
  ChangeOfBasisMatrix out(n, b.from(), a.to());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

std::vector<BigInt> hermite_in_moments(unsigned n) {
  std::vector<BigInt> c;
  const BigInt nf = factorial(n);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    BigInt v = nf / (factorial(n - 2 * j) * factorial(j));
    c.push_back(j % 2 == 0 ? v : BigInt(-v));
  }
  return c;
}

std::vector<BigInt> moments_in_hermite(unsigned n) {
  std::vector<BigInt> d;
  const BigInt nf = factorial(n);
  for (unsigned j = 0; 2 * j <= n; ++j) d.push_back(nf / (factorial(n - 2 * j) * factorial(j)));
  return d;
}

namespace {

ChangeOfBasisMatrix he_to_monomial(unsigned n) {
  ChangeOfBasisMatrix m(n + 1, BasisTag::He, BasisTag::Monomial);
  for (unsigned k = 0; k <= n; ++k) {
    const auto he = hermite_explicit(k);
    for (unsigned i = 0; i <= k; ++i) m(i, k) = he.coefficient(i);
  }
  return m;
}

// x^k = k! sum_j He_{k-2j} / (2^j (k-2j)! j!)
ChangeOfBasisMatrix monomial_to_he(unsigned n) {
  ChangeOfBasisMatrix m(n + 1, BasisTag::Monomial, BasisTag::He);
  for (unsigned k = 0; k <= n; ++k) {
    const BigInt kf = factorial(k);
    for (unsigned j = 0; 2 * j <= k; ++j) {
      m(k - 2 * j, k) = Rational(kf, factorial(k - 2 * j) * factorial(j) * (BigInt(1) << j));
    }
  }
  return m;
}

// Column k: coordinates of H_k in powers of 2x, read off the explicit H_k.
ChangeOfBasisMatrix h_to_two_x(unsigned n) {
  ChangeOfBasisMatrix m(n + 1, BasisTag::H, BasisTag::TwoXMonomial);
  for (unsigned k = 0; k <= n; ++k) {
    const auto h = hermite_explicit(k, PolyFamily::PhysicistH);
    for (unsigned i = 0; i <= k; ++i) m(i, k) = h.coefficient(i) / Rational(BigInt(1) << i);
  }
  return m;
}

// (2x)^k = k! sum_j H_{k-2j} / ((k-2j)! j!)
ChangeOfBasisMatrix two_x_to_h(unsigned n) {
  ChangeOfBasisMatrix m(n + 1, BasisTag::TwoXMonomial, BasisTag::H);
  for (unsigned k = 0; k <= n; ++k) {
    const BigInt kf = factorial(k);
    for (unsigned j = 0; 2 * j <= k; ++j) m(k - 2 * j, k) = Rational(kf, factorial(k - 2 * j) * factorial(j));
  }
  return m;
}

ChangeOfBasisMatrix he_to_gauss(unsigned n) {
  ChangeOfBasisMatrix m(n + 1, BasisTag::He, BasisTag::GaussMoment);
  for (unsigned k = 0; k <= n; ++k) {
    const auto c = hermite_in_moments(k);
    for (unsigned j = 0; j < c.size(); ++j) m(k - 2 * j, k) = Rational(c[j]);
  }
  return m;
}

ChangeOfBasisMatrix gauss_to_he(unsigned n) {
  ChangeOfBasisMatrix m(n + 1, BasisTag::GaussMoment, BasisTag::He);
  for (unsigned k = 0; k <= n; ++k) {
    const auto d = moments_in_hermite(k);
    for (unsigned j = 0; j < d.size(); ++j) m(k - 2 * j, k) = Rational(d[j]);
  }
  return m;
}

}  // namespace

ChangeOfBasisMatrix change_of_basis(unsigned n, BasisTag from, BasisTag to) {
  using B = BasisTag;
  if (from == B::He && to == B::Monomial) return he_to_monomial(n);
  if (from == B::Monomial && to == B::He) return monomial_to_he(n);
  if (from == B::H && to == B::TwoXMonomial) return h_to_two_x(n);
  if (from == B::TwoXMonomial && to == B::H) return two_x_to_h(n);
  if (from == B::He && to == B::GaussMoment) return he_to_gauss(n);
  if (from == B::GaussMoment && to == B::He) return gauss_to_he(n);
  throw InvalidArgument("unsupported change of basis " + to_string(from) + " -> " + to_string(to) +
                        "; compose supported pairs explicitly");
}

double gaussian_raw_moment(unsigned n, double mu, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  // sigma^n (mu/sigma)^{n-2j} = mu^{n-2j} sigma^{2j}
  double acc = 0.0;
  const BigInt nf = factorial(n);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    const BigInt coeff = nf / (factorial(n - 2 * j) * factorial(j) * (BigInt(1) << j));
    acc += coeff.convert_to<double>() * std::pow(mu, n - 2 * j) * std::pow(sigma, 2 * j);
  }
  return acc;
}

double gaussian_raw_moment_hermite_form(unsigned n, double mu, double sigma) {
  if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  const auto he = hermite_explicit(n);
  // (-i sigma)^n sum_k c_k (i mu / sigma)^k: the phase of term k is
  // (-i)^n i^k = i^{k + 3n}, which is +-1 because c_k = 0 unless k = n mod 2.
  double acc = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational& c = he.coefficient(k);
    if (c == 0) continue;
    const unsigned quarter_turns = (k + 3 * n) % 4;
    const double phase = quarter_turns == 0 ? 1.0 : -1.0;  // quarter_turns is 0 or 2
    acc += phase * to_double(c) * std::pow(mu, k) * std::pow(sigma, n - k);
  }
  return acc;
}

Rational gaussian_raw_moment_exact(unsigned n, const Rational& mu, const Rational& sigma) {
  if (sigma <= 0) throw InvalidArgument("sigma must be positive");
  Rational acc = 0;
  const BigInt nf = factorial(n);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    Rational term(nf, factorial(n - 2 * j) * factorial(j) * (BigInt(1) << j));
    for (unsigned p = 0; p < n - 2 * j; ++p) term *= mu;
    for (unsigned p = 0; p < 2 * j; ++p) term *= sigma;
    acc += term;
  }
  return acc;
}

ExactPolynomial gauss_moment_polynomial(unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  const BigInt nf = factorial(n);
  for (unsigned j = 0; 2 * j <= n; ++j) {
    coeffs[n - 2 * j] = Rational(nf, factorial(n - 2 * j) * factorial(j) * (BigInt(1) << j));
  }
  return ExactPolynomial(std::move(coeffs));
}

double expected_hermite_of_gaussian(unsigned n, double x) { return std::pow(x, n); }

double weierstrass_deconvolution_identity(unsigned n, double sigma, double x) {
  if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  return std::pow(sigma, n) * eval_hermite(n, x / sigma);
}

}  // namespace hermite_kit
