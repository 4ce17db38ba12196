#pragma once

// Brute-force side of the verification: dim J(a)/J(a+1) straight from the
// definition, by exact ranks of jet matrices of real polynomials. Never looks at
// the resolution, rho or M.

#include <optional>
#include <string>
#include <vector>

#include "realpoincare/branch.hpp"
#include "realpoincare/poincare.hpp"

namespace realpoincare {

struct OracleResult {
  DimensionProfile profile;  ///< source = oracle
  int D = 0;                 ///< monomials of total degree <= D
  long rows = 0;
  long cols = 0;
};

constexpr long kDefaultSizeCap = 200000;

/// Rows: real and imaginary part of each t-coefficient of order 0..A_max of
/// f(t^n, y(t)); columns: monomials x^a y^b with a + b <= D = A_max / mult + 1.
/// dims(a) = rank(orders <= a) - rank(orders < a). ResourceLimit when the matrix
/// would exceed `size_cap` rows or columns. A positive `degree` replaces D (used to
/// confirm that a larger D changes nothing).
OracleResult dims_bruteforce(const BranchParam& b, long A_max, long size_cap = kDefaultSizeCap, int degree = 0);

/// Membership in <gens> on 0..bound, by a per-generator knapsack pass.
std::vector<bool> semigroup_enumerate(const std::vector<long>& gens, long bound);

struct Mismatch {
  long a = 0;
  std::string expected;
  std::string got;
  std::string sources;  ///< "closed-form vs oracle", ...
};

struct VerificationReport {
  long range_lo = 0;
  long range_hi = 0;
  bool agree = true;
  std::vector<Mismatch> mismatches;
  std::optional<OracleResult> oracle;

  void add(Mismatch m) {
    agree = false;
    mismatches.push_back(std::move(m));
  }
};

/// Inputs of one coefficientwise comparison over [0, range_hi].
struct SeriesBundle {
  IntegerSeries PS;
  std::optional<IntegerSeries> P;
  std::optional<IntegerSeries> PR;
};

/// Compares, order by order: P^S against membership, P against the closed-form
/// profile, P^R against [a in S] - [a - m_rho in S], and the closed-form profile
/// against the oracle profile when given.
VerificationReport compare(const DimensionProfile& closed, const DimensionProfile* brute,
                           const SeriesBundle& series, const std::vector<bool>& membership,
                           std::optional<long> m_rho, long range_hi);

}  // namespace realpoincare
