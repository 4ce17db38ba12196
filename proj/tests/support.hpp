#pragma once

// Shared helpers for the unit and acceptance tests.

#include <optional>
#include <string>

#include "realpoincare/branch.hpp"

namespace testsupport {

inline std::string corpus(const std::string& name) { return std::string(REALPOINCARE_CORPUS_DIR) + "/" + name; }

inline realpoincare::BranchParam branch(int n, const std::string& y) {
  return realpoincare::parse_branch("n = " + std::to_string(n) + "\ny = " + y + "\n");
}

/// i^k for k mod 4.
inline realpoincare::GaussianRational i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1};
    case 1: return realpoincare::GaussianRational::i();
    case 2: return {-1};
    default: return -realpoincare::GaussianRational::i();
  }
}

/// exp(2 pi i e / n) when it lies in Q(i), i.e. when 4e = 0 mod n.
inline std::optional<realpoincare::GaussianRational> root_in_qi(long e, long n) {
  e = ((e % n) + n) % n;
  if ((4 * e) % n != 0) return std::nullopt;
  return i_pow(4 * e / n);
}

/// Brute force over every l in [0, n): is conj(a_j) = a_j exp(2 pi i l j / n) for all j?
/// (y(zeta t) = conj(y)(t) with x invariant, so the image of the branch is its own conjugate.)
inline std::optional<int> brute_conjugation_shift(const realpoincare::BranchParam& b) {
  for (int l = 0; l < b.n; ++l) {
    bool ok = true;
    for (const auto& [j, a] : b.y_terms) {
      auto z = root_in_qi(static_cast<long>(j) * l, b.n);
      if (!z || a.conj() != a * *z) {
        ok = false;
        break;
      }
    }
    if (ok) return l;
  }
  return std::nullopt;
}

/// Brute force over every k in [0, n): is a_j exp(2 pi i k j / n) real for all j?
inline std::optional<int> brute_real_witness(const realpoincare::BranchParam& b) {
  for (int k = 0; k < b.n; ++k) {
    bool ok = true;
    for (const auto& [j, a] : b.y_terms) {
      // a z real <=> conj(a) = a z^2 for |z| = 1.
      auto z2 = root_in_qi(2L * j * k, b.n);
      if (!z2 || a.conj() != a * *z2) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

}  // namespace testsupport
