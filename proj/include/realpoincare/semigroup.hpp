#pragma once

// Numerical semigroups given by generator lists.

#include <string>
#include <vector>

namespace realpoincare {

/// Outcome of a structural check; `failures` names each violated clause with its witness.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

struct SemigroupStructure {
  std::vector<long> generators;  ///< in the given (sigma) order, not sorted
  std::vector<long> e;           ///< e_i = gcd(generators[0..i])
  std::vector<long> N;           ///< N_i = e_{i-1}/e_i, i = 1..g
  long conductor = 0;
  std::vector<bool> membership;  ///< exact for 0..bound()

  long bound() const { return static_cast<long>(membership.size()) - 1; }
  /// Exact for every a: beyond the table everything is at or past the conductor.
  bool contains(long a) const;
  /// Members in [0, limit], ascending.
  std::vector<long> members_upto(long limit) const;
};

/// Membership sieve of <gens> on 0..limit. No gcd condition.
std::vector<bool> membership_sieve(const std::vector<long>& gens, long limit);

/// Builds the table up to max(bound, 2c + max generator). DomainError when the
/// generators are not coprime.
SemigroupStructure build_structure(const std::vector<long>& gens, long bound = 0);

/// Structural clauses for M_0..M_g with N_1..N_g: (a) (N_i-1) M_i not in <M_0..M_{i-1}>,
/// (b) N_i M_i in it, (c) N_i M_i < M_{i+1}, (d) the gcd chain of M has quotients N.
CheckReport generator_structure_check(const std::vector<long>& M, const std::vector<long>& N);

/// Least member of each residue class modulo m (index = residue). DomainError if m is not in S.
std::vector<long> apery_set(const SemigroupStructure& s, long m);

/// Number of tuples (k_0, ..., k_g), k_0 >= 0 and 0 <= k_i < N_i for i >= 1, with
/// sum k_i M_i = a.
long count_representations(const std::vector<long>& M, const std::vector<long>& N, long a);

}  // namespace realpoincare
