#include <doctest.h>

#include "realpoincare/errors.hpp"
#include "realpoincare/real_invariants.hpp"
#include "support.hpp"

using namespace realpoincare;
using testsupport::branch;

namespace {
RealInvariants invariants(int n, const std::string& y) { return real_generators(analyze_branch(branch(n, y))); }
}  // namespace

TEST_SUITE("real invariants") {
  TEST_CASE("split at the origin") {
    auto inv = invariants(4, "i*t^4 + t^6 + t^7");
    CHECK(inv.M_sigma == std::vector<long>{4, 10, 21});
    CHECK(inv.M_tau == std::vector<long>{20, 42});
    CHECK(inv.m_rho == 4);
    CHECK(inv.rho == 1);
    CHECK(inv.q == 0);
    CHECK(inv.S_real.conductor == 28);
  }

  TEST_CASE("split at tau_1") {
    auto inv = invariants(4, "(1+i)*t^6 + t^7");
    CHECK(inv.M_sigma == std::vector<long>{4, 6, 25});
    CHECK(inv.M_tau == std::vector<long>{12, 50});
    CHECK(inv.m_rho == 12);
    CHECK(inv.q == 1);
  }

  TEST_CASE("split after resolution") {
    auto inv = invariants(4, "t^6 + (1+i)*t^7");
    CHECK(inv.M_sigma == std::vector<long>{4, 6, 13});
    CHECK(inv.m_rho == 26);
    CHECK(inv.late_split);
    CHECK(inv.q == 2);
    auto late = invariants(2, "t^3 + i*t^5");
    CHECK(late.M_sigma == std::vector<long>{2, 3});
    CHECK(late.m_rho == 8);
  }

  TEST_CASE("three pairs") {
    auto inv = invariants(8, "i*t^8 + t^12 + t^14 + t^15");
    CHECK(inv.M_sigma == std::vector<long>{8, 20, 42, 85});
    CHECK(inv.m_rho == 8);
    CHECK(inv.S_real.conductor == 140);
    auto inv2 = invariants(8, "(1+i)*t^12 + t^14 + t^15");
    CHECK(inv2.q == 1);
    CHECK(inv2.M_sigma[0] == 8);
    CHECK(inv2.M_sigma[1] == 12);
    CHECK(generator_structure_check(inv2.M_sigma, inv2.N).ok);
  }

  TEST_CASE("M-values of single vertices") {
    auto a = analyze_branch(branch(4, "i*t^4 + t^6 + t^7"));
    CHECK(M_of_vertex(a, 1) == 4);
    CHECK(M_of_vertex(a, 3) == 20);
    auto b = analyze_branch(branch(4, "(1+i)*t^6 + t^7"));
    CHECK(M_of_vertex(b, 3) == 12);
    CHECK(M_of_vertex(b, 5) == 50);
    CHECK_THROWS_AS(M_of_vertex(analyze_branch(branch(2, "t^3")), 3), DomainError);
  }

  TEST_CASE("geodesic property") {
    for (auto [n, y] : std::vector<std::pair<int, std::string>>{{4, "i*t^4 + t^6 + t^7"},
                                                               {4, "(1+i)*t^6 + t^7"},
                                                               {4, "t^6 + (1+i)*t^7"},
                                                               {8, "i*t^8 + t^12 + t^14 + t^15"},
                                                               {8, "(1+i)*t^12 + t^14 + t^15"}}) {
      auto a = analyze_branch(branch(n, y));
      auto rep = geodesic_property_check(real_generators(a), a);
      CHECK_MESSAGE(rep.ok, y);
    }
  }

  TEST_CASE("conjugate-branch recipe") {
    auto r1 = conjugate_branch_recipe(invariants(4, "i*t^4 + t^6 + t^7"));
    CHECK(r1.b == std::vector<long>{4, 10, 11});
    CHECK(r1.parametrization == branch(4, "t^10 + t^11"));
    auto r2 = conjugate_branch_recipe(invariants(4, "(1+i)*t^6 + t^7"));
    CHECK(r2.b == std::vector<long>{4, 6, 19});
    CHECK(r2.parametrization == branch(4, "t^6 + t^19"));
    auto r3 = conjugate_branch_recipe(invariants(4, "t^6 + (1+i)*t^7"));
    CHECK(r3.b == std::vector<long>{4, 6, 7});
    CHECK(r3.parametrization == branch(4, "t^6 + t^7"));
    auto r4 = conjugate_branch_recipe(invariants(8, "i*t^8 + t^12 + t^14 + t^15"));
    CHECK(r4.b == std::vector<long>{8, 20, 22, 23});
  }

  TEST_CASE("real branches have no real generators") {
    CHECK_THROWS_AS(real_generators(analyze_branch(branch(2, "t^3"))), DomainError);
    CHECK_THROWS_AS(real_generators(analyze_branch(branch(8, "(1+i)*t^9"))), DomainError);
  }
}
