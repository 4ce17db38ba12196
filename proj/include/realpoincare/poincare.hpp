#pragma once

// Poincare series of the curve valuation in cyclotomic form, and the dimension
// profile dim J(a)/J(a+1) they encode.

#include <optional>
#include <string>
#include <vector>

#include "realpoincare/arith.hpp"
#include "realpoincare/real_invariants.hpp"
#include "realpoincare/semigroup.hpp"

namespace realpoincare {

/// prod_j (1 - t^{num_j}) / prod_j (1 - t^{den_j}); exponent multisets kept sorted.
class CyclotomicFraction {
 public:
  CyclotomicFraction() = default;
  CyclotomicFraction(std::vector<long> num, std::vector<long> den, bool normalize = true);

  const std::vector<long>& numerator() const { return num_; }
  const std::vector<long>& denominator() const { return den_; }

  /// Cancels exponents common to both multisets.
  CyclotomicFraction normalized() const;
  bool is_normalized() const;

  friend CyclotomicFraction operator*(const CyclotomicFraction& a, const CyclotomicFraction& b);
  friend bool operator==(const CyclotomicFraction& a, const CyclotomicFraction& b) = default;

  /// "(1-t^20)(1-t^42) / ((1-t^4)(1-t^10)(1-t^21))"
  std::string to_string() const;

 private:
  std::vector<long> num_;
  std::vector<long> den_;
};

CyclotomicFraction semigroup_series(const std::vector<long>& M_sigma, const std::vector<long>& M_tau);
CyclotomicFraction semigroup_series(const RealInvariants& inv);

struct ClassicalAndReal {
  CyclotomicFraction P;   ///< P^S (1 - t^{2 m_rho}) / (1 - t^{m_rho})
  CyclotomicFraction PR;  ///< P^S (1 - t^{m_rho})
};
ClassicalAndReal classical_and_real_series(const CyclotomicFraction& ps, long m_rho);

/// Exact coefficients through `order`: numerator product, then one division per
/// denominator factor.
IntegerSeries expand(const CyclotomicFraction& f, int order);

enum class ProfileSource { closed_form, oracle };

struct DimensionProfile {
  std::vector<int> dims;  ///< dims[a] for 0 <= a <= bound()
  ProfileSource source = ProfileSource::closed_form;
  long bound() const { return static_cast<long>(dims.size()) - 1; }
};

/// dims(a) = [a in S] + [a - m_rho in S]; without m_rho (real branch) just [a in S].
DimensionProfile dimension_profile_closed_form(const SemigroupStructure& S, std::optional<long> m_rho, long bound);

/// dims(a) + dims(c + m_rho - 1 - a) = 2 on [0, c + m_rho - 1] and
/// a in S <=> c - 1 - a not in S on [0, c - 1]. Without m_rho only the latter.
CheckReport symmetry_check(const DimensionProfile& dp, const SemigroupStructure& S, std::optional<long> m_rho);

/// Default expansion order c + 2 m_rho + 16.
int default_series_order(long conductor, long m_rho);

}  // namespace realpoincare
