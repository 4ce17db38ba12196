#include "realpoincare/arith.hpp"

#include <algorithm>
#include <sstream>

#include "realpoincare/errors.hpp"

namespace realpoincare {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvariantViolation("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text, 10));
    return Rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw Error("not a rational number: '" + text + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvariantViolation("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw InvariantViolation("Gaussian rational division by zero");
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

GaussianRational GaussianRational::pow(unsigned e) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  if (im_.is_zero()) {
    os << re_;
    return os.str();
  }
  if (!re_.is_zero()) {
    os << re_;
    os << (im_.sign() > 0 ? "+" : "-");
  } else if (im_.sign() < 0) {
    os << "-";
  }
  Rational a = im_.sign() < 0 ? -im_ : im_;
  if (a == Rational(1))
    os << "i";
  else
    os << a << "*i";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries TruncatedSeries::from_terms(
    const std::vector<std::pair<int, GaussianRational>>& terms, int truncation) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(std::max(truncation, 0)));
  for (const auto& [e, v] : terms) {
    if (e < 0) throw InvariantViolation("negative exponent in series");
    if (e < truncation) c[static_cast<std::size_t>(e)] += v;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(const GaussianRational& c, int exponent, int truncation) {
  return from_terms({{exponent, c}}, truncation);
}

std::optional<int> TruncatedSeries::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return std::nullopt;
}

int TruncatedSeries::known_order() const {
  auto o = order();
  if (!o) throw PrecisionExhausted("series vanishes up to truncation order " + std::to_string(truncation()));
  return *o;
}

int TruncatedSeries::order_lower_bound() const { return order().value_or(truncation()); }

const GaussianRational& TruncatedSeries::coeff(int k) const {
  if (k < 0) throw InvariantViolation("negative coefficient index");
  if (k >= truncation())
    throw PrecisionExhausted("coefficient " + std::to_string(k) + " requested at truncation order " +
                             std::to_string(truncation()));
  return c_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<GaussianRational> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t T = std::min(a.c_.size(), b.c_.size());
  std::vector<GaussianRational> c(T);
  for (std::size_t k = 0; k < T; ++k) c[k] = a.c_[k] + b.c_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int oa = a.order_lower_bound();
  int ob = b.order_lower_bound();
  int T = std::min(a.truncation() + ob, b.truncation() + oa);
  std::vector<GaussianRational> c(static_cast<std::size_t>(T));
  for (int i = oa; i < std::min(a.truncation(), T); ++i) {
    const auto& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = ob; j < b.truncation() && i + j < T; ++j) {
      const auto& bj = b.c_[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) c[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(const GaussianRational& s) const {
  std::vector<GaussianRational> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) c[k] = c_[k] * s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  int ob = b.known_order();
  if (a.order_lower_bound() < ob) throw InvariantViolation("series division: ord(numerator) < ord(denominator)");
  TruncatedSeries num = a.shift(-ob);
  TruncatedSeries den = b.shift(-ob);
  int T = std::min(num.truncation(), den.truncation());
  std::vector<GaussianRational> q(static_cast<std::size_t>(std::max(T, 0)));
  GaussianRational lead_inv = GaussianRational(1) / den.c_[0];
  for (int k = 0; k < T; ++k) {
    GaussianRational acc = num.c_[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) {
      const auto& dj = den.c_[static_cast<std::size_t>(j)];
      if (!dj.is_zero()) acc -= dj * q[static_cast<std::size_t>(k - j)];
    }
    q[static_cast<std::size_t>(k)] = acc * lead_inv;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries TruncatedSeries::shift(int k) const {
  if (k >= 0) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(k));
    c.insert(c.end(), c_.begin(), c_.end());
    return TruncatedSeries(std::move(c));
  }
  int d = -k;
  if (order_lower_bound() < d && truncation() >= d)
    throw InvariantViolation("shift by t^" + std::to_string(k) + " of a series of lower order");
  if (truncation() < d) return TruncatedSeries();
  return TruncatedSeries(std::vector<GaussianRational>(c_.begin() + d, c_.end()));
}

TruncatedSeries TruncatedSeries::minus_constant(const GaussianRational& c) const {
  if (c_.empty()) throw PrecisionExhausted("constant term requested at truncation order 0");
  TruncatedSeries r = *this;
  r.c_[0] -= c;
  return r;
}

TruncatedSeries TruncatedSeries::conj() const {
  std::vector<GaussianRational> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k].conj();
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(int T) const {
  std::size_t n = std::min(c_.size(), static_cast<std::size_t>(std::max(T, 0)));
  return TruncatedSeries(std::vector<GaussianRational>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  if (e == 0) return monomial(GaussianRational(1), 0, truncation());
  TruncatedSeries r = *this;
  for (unsigned k = 1; k < e; ++k) r = r * *this;
  return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
  std::size_t T = std::min(c_.size(), other.c_.size());
  for (std::size_t k = 0; k < T; ++k)
    if (!(c_[k] == other.c_[k])) return false;
  return true;
}

TruncatedSeries unit_power(const TruncatedSeries& g, const Rational& alpha) {
  if (g.truncation() == 0) return g;
  if (!(g.coeff(0) == GaussianRational(1))) throw InvariantViolation("unit_power needs constant term 1");
  // From g F' = alpha g' F:  k F_k = sum_{j=1..k} (alpha j - (k - j)) g_j F_{k-j}.
  int T = g.truncation();
  std::vector<GaussianRational> F(static_cast<std::size_t>(T));
  F[0] = GaussianRational(1);
  for (int k = 1; k < T; ++k) {
    GaussianRational acc;
    for (int j = 1; j <= k; ++j) {
      const auto& gj = g.coeff(j);
      if (gj.is_zero()) continue;
      acc += gj * F[static_cast<std::size_t>(k - j)] * GaussianRational(alpha * Rational(j) - Rational(k - j));
    }
    F[static_cast<std::size_t>(k)] = acc / GaussianRational(Rational(k));
  }
  return TruncatedSeries(std::move(F));
}

// ---------------------------------------------------------------------------
// IntegerSeries

IntegerSeries IntegerSeries::one(int max_order) {
  IntegerSeries s(max_order);
  if (max_order >= 0) s.c_[0] = 1;
  return s;
}

IntegerSeries IntegerSeries::from_terms(const std::vector<std::pair<int, long>>& terms, int max_order) {
  IntegerSeries s(max_order);
  for (const auto& [e, v] : terms)
    if (e >= 0 && e <= max_order) s.c_[static_cast<std::size_t>(e)] += v;
  return s;
}

IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b) {
  IntegerSeries r(std::min(a.max_order(), b.max_order()));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b) {
  IntegerSeries r(std::min(a.max_order(), b.max_order()));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b) {
  IntegerSeries r(std::min(a.max_order(), b.max_order()));
  std::size_t N = r.c_.size();
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < N; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

IntegerSeries IntegerSeries::scaled(long k) const {
  IntegerSeries r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

void IntegerSeries::multiply_one_minus(int m) {
  if (m <= 0) throw InvariantViolation("(1 - t^m) with m <= 0");
  for (int k = max_order(); k >= m; --k) c_[static_cast<std::size_t>(k)] -= c_[static_cast<std::size_t>(k - m)];
}

void IntegerSeries::divide_one_minus(int m) {
  if (m <= 0) throw InvariantViolation("1/(1 - t^m) with m <= 0");
  for (int k = m; k <= max_order(); ++k) c_[static_cast<std::size_t>(k)] += c_[static_cast<std::size_t>(k - m)];
}

IntegerSeries IntegerSeries::shifted(int k) const {
  IntegerSeries r(max_order());
  for (int j = 0; j + k <= max_order(); ++j)
    if (j + k >= 0) r.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
  return r;
}

}  // namespace realpoincare
