#pragma once

// Exact number and series foundation. Nothing in this library uses floating point.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace realpoincare {

using BigInt = mpz_class;

/// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p" or "p/q" (decimal, optional sign on p).
  static Rational parse(const std::string& text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws InvariantViolation on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(unsigned e) const;

  /// Renders "3", "-i", "1/2+3*i", ... ; the output reparses with the branch grammar
  /// when wrapped in parentheses.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Power series in t over Q(i), known exactly below `truncation()`. Coefficients at
/// orders >= truncation are unknown, never implicitly zero.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Exact coefficients c_0..c_{T-1}; truncation T = coeffs.size().
  explicit TruncatedSeries(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {}
  /// Polynomial sum of terms (exponent, coefficient) viewed modulo t^truncation.
  static TruncatedSeries from_terms(const std::vector<std::pair<int, GaussianRational>>& terms,
                                    int truncation);
  static TruncatedSeries monomial(const GaussianRational& c, int exponent, int truncation);

  int truncation() const { return static_cast<int>(c_.size()); }

  /// Least exponent with a nonzero coefficient; nullopt is the "+infinity up to
  /// truncation" marker.
  std::optional<int> order() const;
  /// Like order(), but throws PrecisionExhausted when the series is zero up to truncation.
  int known_order() const;
  /// Lower bound for the true order: order() if known, truncation otherwise.
  int order_lower_bound() const;

  /// Throws PrecisionExhausted if k >= truncation.
  const GaussianRational& coeff(int k) const;
  const std::vector<GaussianRational>& coefficients() const { return c_; }

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const GaussianRational& c) const;

  /// Exact quotient a/b. Requires ord(b) known and a to vanish below ord(b); the
  /// result truncation is min(T_a, T_b) - ord(b).
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplies by t^k. Negative k divides by t^{-k} and requires the low
  /// coefficients to be known zeros.
  TruncatedSeries shift(int k) const;
  /// s - c (constant term removal). Requires truncation >= 1.
  TruncatedSeries minus_constant(const GaussianRational& c) const;
  TruncatedSeries conj() const;
  /// Keeps coefficients below min(T, truncation()).
  TruncatedSeries truncated(int T) const;
  TruncatedSeries pow(unsigned e) const;

  /// Agreement on the common known range.
  bool agrees_with(const TruncatedSeries& other) const;

 private:
  std::vector<GaussianRational> c_;
};

/// g^alpha for a series with constant term 1 (binomial-type power with rational
/// exponent). Truncation is preserved.
TruncatedSeries unit_power(const TruncatedSeries& g, const Rational& alpha);

/// Integer power series computed exactly up to and including `max_order()`.
class IntegerSeries {
 public:
  IntegerSeries() = default;
  explicit IntegerSeries(int max_order) : c_(static_cast<std::size_t>(max_order) + 1) {}
  static IntegerSeries one(int max_order);
  /// Polynomial given as sparse (exponent, coefficient) pairs; higher terms dropped.
  static IntegerSeries from_terms(const std::vector<std::pair<int, long>>& terms, int max_order);

  int max_order() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  BigInt& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<BigInt>& coefficients() const { return c_; }

  friend IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b);
  IntegerSeries scaled(long k) const;
  friend bool operator==(const IntegerSeries& a, const IntegerSeries& b) { return a.c_ == b.c_; }

  /// In-place multiplication by (1 - t^m).
  void multiply_one_minus(int m);
  /// In-place division by (1 - t^m): c'_k = c_k + c'_{k-m}.
  void divide_one_minus(int m);
  /// Multiplication by t^k, dropping terms above max_order.
  IntegerSeries shifted(int k) const;

 private:
  std::vector<BigInt> c_;
};

}  // namespace realpoincare
