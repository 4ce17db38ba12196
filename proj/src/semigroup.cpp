#include "realpoincare/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "realpoincare/errors.hpp"

namespace realpoincare {

bool SemigroupStructure::contains(long a) const {
  if (a < 0) return false;
  if (a >= conductor) return true;
  return membership[static_cast<std::size_t>(a)];
}

std::vector<long> SemigroupStructure::members_upto(long limit) const {
  std::vector<long> out;
  for (long a = 0; a <= limit; ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

std::vector<bool> membership_sieve(const std::vector<long>& gens, long limit) {
  std::vector<bool> in(static_cast<std::size_t>(std::max(limit, 0L)) + 1, false);
  in[0] = true;
  for (long a = 1; a <= limit; ++a)
    for (long g : gens)
      if (g > 0 && g <= a && in[static_cast<std::size_t>(a - g)]) {
        in[static_cast<std::size_t>(a)] = true;
        break;
      }
  return in;
}

SemigroupStructure build_structure(const std::vector<long>& gens, long bound) {
  if (gens.empty()) throw DomainError("empty generator list");
  for (long g : gens)
    if (g <= 0) throw DomainError("generators must be positive, got " + std::to_string(g));

  SemigroupStructure s;
  s.generators = gens;
  long acc = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    long prev = acc;
    acc = std::gcd(acc, gens[i]);
    s.e.push_back(acc);
    if (i > 0) s.N.push_back(prev / acc);
  }
  if (acc != 1) throw DomainError("generators have gcd " + std::to_string(acc) + ": not a numerical semigroup");

  const long gmax = *std::max_element(gens.begin(), gens.end());
  const long gmin = *std::min_element(gens.begin(), gens.end());
  for (long limit = std::max({64L, bound, 4 * gmax});; limit *= 2) {
    if (limit > (1L << 26)) throw ResourceLimit("semigroup table exceeds 2^26 entries");
    auto in = membership_sieve(gens, limit);
    long last_gap = -1;
    for (long a = limit; a >= 0; --a)
      if (!in[static_cast<std::size_t>(a)]) {
        last_gap = a;
        break;
      }
    // gmin consecutive members after the last gap make every later integer a member.
    if (limit - last_gap < gmin) continue;
    s.conductor = last_gap + 1;
    const long need = std::max(bound, 2 * s.conductor + gmax);
    if (need > limit) in = membership_sieve(gens, need);
    else in.resize(static_cast<std::size_t>(need) + 1);
    s.membership = std::move(in);
    return s;
  }
}

CheckReport generator_structure_check(const std::vector<long>& M, const std::vector<long>& N) {
  CheckReport rep;
  if (M.empty() || M.size() != N.size() + 1) {
    rep.fail("length mismatch: " + std::to_string(M.size()) + " generators, " + std::to_string(N.size()) + " N-values");
    return rep;
  }
  const std::size_t g = N.size();
  std::vector<long> e{M[0]};
  for (std::size_t i = 1; i <= g; ++i) e.push_back(std::gcd(e.back(), M[i]));

  for (std::size_t i = 1; i <= g; ++i) {
    const long Ni = N[i - 1];
    const std::string tag = "i=" + std::to_string(i);
    std::vector<long> prior(M.begin(), M.begin() + static_cast<long>(i));
    auto in = membership_sieve(prior, Ni * M[i]);
    const long a = (Ni - 1) * M[i];
    if (in[static_cast<std::size_t>(a)])
      rep.fail("(a) " + tag + ": (N_i-1)M_i = " + std::to_string(a) + " lies in the prior subsemigroup");
    if (!in[static_cast<std::size_t>(Ni * M[i])])
      rep.fail("(b) " + tag + ": N_i M_i = " + std::to_string(Ni * M[i]) + " is not in the prior subsemigroup");
    if (i < g && !(Ni * M[i] < M[i + 1]))
      rep.fail("(c) " + tag + ": N_i M_i = " + std::to_string(Ni * M[i]) + " >= M_{i+1} = " + std::to_string(M[i + 1]));
    if (e[i] == 0 || e[i - 1] / e[i] != Ni || e[i - 1] % e[i] != 0)
      rep.fail("(d) " + tag + ": gcd chain gives e_{i-1}/e_i = " + std::to_string(e[i - 1]) + "/" + std::to_string(e[i]) +
               ", expected N_i = " + std::to_string(Ni));
  }
  if (e.back() != 1) rep.fail("(d) gcd of all generators is " + std::to_string(e.back()));
  return rep;
}

std::vector<long> apery_set(const SemigroupStructure& s, long m) {
  if (m <= 0 || !s.contains(m)) throw DomainError(std::to_string(m) + " is not a positive member of the semigroup");
  std::vector<long> w(static_cast<std::size_t>(m), -1);
  long found = 0;
  for (long a = 0; found < m; ++a) {
    auto& slot = w[static_cast<std::size_t>(a % m)];
    if (slot < 0 && s.contains(a)) {
      slot = a;
      ++found;
    }
  }
  return w;
}

long count_representations(const std::vector<long>& M, const std::vector<long>& N, long a) {
  if (M.size() != N.size() + 1) throw InvariantViolation("count_representations: length mismatch");
  // Bounded digits k_1..k_g enumerated recursively; k_0 absorbs the rest.
  long count = 0;
  auto rec = [&](auto&& self, std::size_t i, long rest) -> void {
    if (rest < 0) return;
    if (i > N.size()) {
      if (rest % M[0] == 0) ++count;
      return;
    }
    for (long k = 0; k < N[i - 1] && k * M[i] <= rest; ++k) self(self, i + 1, rest - k * M[i]);
  };
  rec(rec, 1, a);
  return count;
}

}  // namespace realpoincare
