#include "realpoincare/poincare.hpp"

#include <algorithm>
#include <map>

#include "realpoincare/errors.hpp"

namespace realpoincare {

CyclotomicFraction::CyclotomicFraction(std::vector<long> num, std::vector<long> den, bool normalize)
    : num_(std::move(num)), den_(std::move(den)) {
  for (long e : num_)
    if (e <= 0) throw InvariantViolation("cyclotomic exponents must be positive");
  for (long e : den_)
    if (e <= 0) throw InvariantViolation("cyclotomic exponents must be positive");
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
  if (normalize) *this = normalized();
}

CyclotomicFraction CyclotomicFraction::normalized() const {
  std::map<long, long> mult;  // exponent -> multiplicity in num minus in den
  for (long e : num_) ++mult[e];
  for (long e : den_) --mult[e];
  CyclotomicFraction out;
  for (auto [e, k] : mult) {
    for (long j = 0; j < k; ++j) out.num_.push_back(e);
    for (long j = 0; j < -k; ++j) out.den_.push_back(e);
  }
  return out;
}

bool CyclotomicFraction::is_normalized() const {
  for (long e : num_)
    if (std::binary_search(den_.begin(), den_.end(), e)) return false;
  return true;
}

CyclotomicFraction operator*(const CyclotomicFraction& a, const CyclotomicFraction& b) {
  std::vector<long> num = a.num_;
  num.insert(num.end(), b.num_.begin(), b.num_.end());
  std::vector<long> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return CyclotomicFraction(std::move(num), std::move(den));
}

namespace {

std::string factors(const std::vector<long>& ex) {
  std::string s;
  for (long e : ex) s += "(1-t" + (e == 1 ? std::string() : "^" + std::to_string(e)) + ")";
  return s;
}

}  // namespace

std::string CyclotomicFraction::to_string() const {
  std::string top = num_.empty() ? "1" : factors(num_);
  if (den_.empty()) return top;
  std::string bottom = factors(den_);
  if (den_.size() > 1) bottom = "(" + bottom + ")";
  return top + " / " + bottom;
}

CyclotomicFraction semigroup_series(const std::vector<long>& M_sigma, const std::vector<long>& M_tau) {
  return CyclotomicFraction(M_tau, M_sigma);
}

CyclotomicFraction semigroup_series(const RealInvariants& inv) { return semigroup_series(inv.M_sigma, inv.M_tau); }

ClassicalAndReal classical_and_real_series(const CyclotomicFraction& ps, long m_rho) {
  if (m_rho <= 0) throw InvariantViolation("m_rho must be positive");
  return {ps * CyclotomicFraction({2 * m_rho}, {m_rho}), ps * CyclotomicFraction({m_rho}, {})};
}

IntegerSeries expand(const CyclotomicFraction& f, int order) {
  if (order < 0) throw InvariantViolation("negative expansion order");
  IntegerSeries s = IntegerSeries::one(order);
  for (long e : f.numerator())
    if (e <= order) s.multiply_one_minus(static_cast<int>(e));
  for (long e : f.denominator())
    if (e <= order) s.divide_one_minus(static_cast<int>(e));
  return s;
}

DimensionProfile dimension_profile_closed_form(const SemigroupStructure& S, std::optional<long> m_rho, long bound) {
  DimensionProfile dp;
  dp.source = ProfileSource::closed_form;
  for (long a = 0; a <= bound; ++a)
    dp.dims.push_back((S.contains(a) ? 1 : 0) + (m_rho && S.contains(a - *m_rho) ? 1 : 0));
  return dp;
}

CheckReport symmetry_check(const DimensionProfile& dp, const SemigroupStructure& S, std::optional<long> m_rho) {
  CheckReport rep;
  const long c = S.conductor;
  for (long a = 0; a < c; ++a)
    if (S.contains(a) == S.contains(c - 1 - a)) rep.fail("conductor symmetry fails at a = " + std::to_string(a));
  if (!m_rho) return rep;
  const long top = c + *m_rho - 1;
  if (dp.bound() < top) {
    rep.fail("profile covers [0, " + std::to_string(dp.bound()) + "], symmetry needs [0, " + std::to_string(top) + "]");
    return rep;
  }
  for (long a = 0; a <= top; ++a) {
    int s = dp.dims[static_cast<std::size_t>(a)] + dp.dims[static_cast<std::size_t>(top - a)];
    if (s != 2)
      rep.fail("dims(" + std::to_string(a) + ") + dims(" + std::to_string(top - a) + ") = " + std::to_string(s));
  }
  return rep;
}

int default_series_order(long conductor, long m_rho) { return static_cast<int>(conductor + 2 * m_rho + 16); }

}  // namespace realpoincare
