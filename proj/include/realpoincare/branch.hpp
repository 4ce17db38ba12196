#pragma once

// The input branch C: x = t^n, y = sum a_j t^j with a_j in Q(i).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realpoincare/arith.hpp"

namespace realpoincare {

struct BranchParam {
  int n = 1;
  /// Nonzero coefficients only, keyed by exponent (all >= 1).
  std::map<int, GaussianRational> y_terms;
  std::string source_text;

  /// Order of y in t, or nullopt when y = 0.
  std::optional<int> ord_y() const;
  /// Multiplicity of C at the origin: min(n, ord y).
  int multiplicity() const;
  bool is_smooth() const { return multiplicity() == 1; }
  int y_degree() const { return y_terms.empty() ? 0 : y_terms.rbegin()->first; }

  /// Canonical text in the input grammar; reparses to an equal branch.
  std::string emit() const;
  /// One-line rendering, e.g. "(t^4, i*t^4 + t^6 + t^7)".
  std::string describe() const;

  friend bool operator==(const BranchParam& a, const BranchParam& b) {
    return a.n == b.n && a.y_terms == b.y_terms;
  }
};

/// Optional invariants an input file may pin down. `verify` checks them against
/// the computed pipeline and feeds them into the closed-form side of the
/// oracle comparison.
struct Claims {
  std::optional<std::vector<long>> M;
  std::optional<long> m_rho;
  bool empty() const { return !M && !m_rho; }
};

struct InputFile {
  BranchParam branch;
  Claims claims;
};

/// Parses the `n = ...` / `y = ...` input grammar. Throws ParseError.
BranchParam parse_branch(const std::string& text);
/// Like parse_branch, additionally accepting `M = a, b, ...` and `m_rho = k` claim lines.
InputFile parse_input(const std::string& text);

struct ValidationReport {
  bool valid = false;
  bool smooth = false;
  int multiplicity = 0;
  std::string message;
};

ValidationReport validate(const BranchParam& b);
/// Throws ValidationError when validate() reports invalid.
void require_valid(const BranchParam& b);

struct RealityDecision {
  bool is_real = false;
  /// k in [0, n) with a_j * exp(2 pi i k j / n) real for all j, when one exists.
  std::optional<int> witness;
  /// l in [0, n) with conj(a_j) = a_j * exp(2 pi i l j / n) for all j (C = conj(C)).
  std::optional<int> conjugation_shift;
};

RealityDecision is_real_branch(const BranchParam& b);

BranchParam conjugate(const BranchParam& b);

struct CharExponents {
  std::vector<long> beta;  ///< beta_0 = multiplicity < beta_1 < ... < beta_g
  std::vector<long> e;     ///< e_i = gcd(beta_0..beta_i)
  int g = 0;

  /// N_i = e_{i-1}/e_i, i = 1..g (index 0 of the result is N_1).
  std::vector<long> N() const;
  /// Classical generators: mbar_0 = beta_0, mbar_1 = beta_1,
  /// mbar_{i+1} = N_i mbar_i + beta_{i+1} - beta_i.
  std::vector<long> classical_generators() const;
};

/// For smooth branches returns beta = (1), g = 0. When ord y < n the branch is
/// re-parametrized with y as the leading coordinate first.
CharExponents char_exponents(const BranchParam& b);

/// Polynomial in x, y with rational coefficients.
struct BivariatePoly {
  std::map<std::pair<int, int>, Rational> terms;  ///< (deg_x, deg_y) -> coefficient

  static BivariatePoly x() { return monomial(1, 0); }
  static BivariatePoly y() { return monomial(0, 1); }
  static BivariatePoly constant(const Rational& c);
  static BivariatePoly monomial(int a, int b, const Rational& c = Rational(1));

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;

  friend BivariatePoly operator+(const BivariatePoly& f, const BivariatePoly& g);
  friend BivariatePoly operator-(const BivariatePoly& f, const BivariatePoly& g);
  friend BivariatePoly operator*(const BivariatePoly& f, const BivariatePoly& g);
  BivariatePoly scaled(const Rational& c) const;
};

/// nu_C(f) = ord_t f(t^n, y(t)); nullopt encodes +infinity (f vanishes on C).
std::optional<long> value_of(const BranchParam& b, const BivariatePoly& f);

}  // namespace realpoincare
