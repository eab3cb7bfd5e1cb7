#include "hermite_kit/exact.hpp"

#include "hermite_kit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hermite_kit {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt double_factorial(int n) {
  BigInt r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'", 0);
  // a leading 0 would make the BigInt string constructor read octal
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number", 0);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    BigInt ex = parse_integer(text.substr(e + 1));
    if (abs(ex) > 4000) throw ParseError("exponent out of range in '" + std::string(text) + "'", 0);
    exponent = ex.convert_to<long>();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw ParseError("not a number: '" + std::string(text) + "'", 0);
    }
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw ParseError("not a number: '" + std::string(text) + "'", 0);
    digits = std::string(mantissa);
  }

  BigInt num = parse_integer(digits);
  if (negative) num = -num;
  long shift = exponent - frac_digits;
  if (shift >= 0) return Rational(num * pow10(static_cast<unsigned>(shift)));
  return Rational(num, pow10(static_cast<unsigned>(-shift)));
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

ExactPolynomial::ExactPolynomial() : coeffs_{Rational(0)} {}

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPolynomial::ExactPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

ExactPolynomial ExactPolynomial::constant(const Rational& c) { return ExactPolynomial({c}); }

ExactPolynomial ExactPolynomial::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return ExactPolynomial(std::move(v));
}

void ExactPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Rational ExactPolynomial::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

bool ExactPolynomial::is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

bool ExactPolynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

ExactPolynomial ExactPolynomial::derivative(unsigned order) const {
  if (order > degree()) return ExactPolynomial();
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    BigInt falling = 1;
    for (std::size_t k = 0; k < order; ++k) falling *= i - k;
    out[i - order] = coeffs_[i] * falling;
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::scale_argument(const Rational& s) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= s;
  }
  return ExactPolynomial(std::move(out));
}

Rational ExactPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ExactPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const ExactPolynomial& rhs) {
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

ExactPolynomial ExactPolynomial::operator-() const {
  ExactPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::vector<std::string> ExactPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::string to_string(const ExactPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : p.to_strings()) {
    if (!first) os << ',';
    os << s;
    first = false;
  }
  return os.str();
}

}  // namespace hermite_kit
