#include <doctest.h>

#include "realpoincare/arith.hpp"
#include "realpoincare/errors.hpp"

using namespace realpoincare;

namespace {
GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("rationals stay canonical") {
    Rational a(BigInt(6), BigInt(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
    CHECK(Rational(1) / Rational(3) + Rational(BigInt(2), BigInt(3)) == Rational(1));
    CHECK(Rational(-1) < Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvariantViolation);
  }

  TEST_CASE("gaussian arithmetic") {
    GaussianRational z = gi(1, 1);
    CHECK(z * z == gi(0, 2));
    CHECK(z * z.conj() == GaussianRational(2));
    CHECK(z.norm() == Rational(2));
    CHECK(GaussianRational(1) / z == GaussianRational(Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(2))));
    CHECK(GaussianRational::i().pow(4) == GaussianRational(1));
    CHECK(z.pow(0) == GaussianRational(1));
    CHECK_THROWS_AS(z / GaussianRational(0), InvariantViolation);
  }

  TEST_CASE("gaussian rendering") {
    CHECK(gi(1, 1).to_string() == "1+i");
    CHECK(gi(0, -1).to_string() == "-i");
    CHECK(gi(0, 0).to_string() == "0");
    CHECK(GaussianRational(Rational(0), Rational(BigInt(3), BigInt(2))).to_string() == "3/2*i");
    CHECK(gi(2, -3).to_string() == "2-3*i");
  }

  TEST_CASE("unknown coefficients are never zero") {
    auto s = TruncatedSeries::monomial(GaussianRational(1), 3, 5);
    CHECK(s.truncation() == 5);
    CHECK(s.order() == 3);
    CHECK(s.coeff(4).is_zero());
    CHECK_THROWS_AS(s.coeff(5), PrecisionExhausted);
    auto z = TruncatedSeries::monomial(GaussianRational(1), 7, 5);  // invisible at this truncation
    CHECK_FALSE(z.order().has_value());
    CHECK(z.order_lower_bound() == 5);
    CHECK_THROWS_AS(z.known_order(), PrecisionExhausted);
  }

  TEST_CASE("product and quotient track truncation") {
    auto a = TruncatedSeries::from_terms({{2, 1}, {3, gi(0, 1)}}, 10);  // t^2 + i t^3 + O(t^10)
    auto b = TruncatedSeries::from_terms({{1, 1}, {4, 2}}, 8);          // t + 2t^4 + O(t^8)
    auto p = a * b;
    CHECK(p.truncation() == std::min(10 + 1, 8 + 2));
    CHECK(p.coeff(3) == GaussianRational(1));
    CHECK(p.coeff(4) == GaussianRational::i());
    CHECK(p.coeff(6) == GaussianRational(2));
    auto q = p / b;
    CHECK(q.truncation() == std::min(p.truncation(), b.truncation()) - 1);
    CHECK(q.agrees_with(a));
  }

  TEST_CASE("shift and constant removal") {
    auto s = TruncatedSeries::from_terms({{2, 3}}, 6);
    CHECK(s.shift(-2).coeff(0) == GaussianRational(3));
    CHECK(s.shift(-2).truncation() == 4);
    CHECK(s.shift(1).truncation() == 7);
    CHECK_THROWS(s.shift(-3));
    auto u = TruncatedSeries::from_terms({{1, 1}}, 4).minus_constant(GaussianRational(0));
    CHECK(u.coeff(1) == GaussianRational(1));
  }

  TEST_CASE("rational powers of units") {
    // (1 + t)^{1/2} squared is 1 + t.
    auto g = TruncatedSeries::from_terms({{0, 1}, {1, 1}}, 12);
    auto h = unit_power(g, Rational(BigInt(1), BigInt(2)));
    CHECK((h * h).agrees_with(g));
    CHECK(h.coeff(2) == GaussianRational(Rational(BigInt(-1), BigInt(8))));
    // Integer exponents agree with repeated multiplication.
    auto k = TruncatedSeries::from_terms({{0, 1}, {2, gi(1, 1)}, {3, -2}}, 15);
    CHECK(unit_power(k, Rational(3)).agrees_with(k.pow(3)));
    CHECK(unit_power(k, Rational(-1)).agrees_with(TruncatedSeries::monomial(1, 0, 15) / k));
  }

  TEST_CASE("integer series recurrences") {
    auto s = IntegerSeries::one(10);
    s.divide_one_minus(3);
    for (int k = 0; k <= 10; ++k) CHECK(s[k] == (k % 3 == 0 ? 1 : 0));
    s.multiply_one_minus(3);
    CHECK(s == IntegerSeries::one(10));
    auto p = IntegerSeries::from_terms({{0, 1}, {2, -1}}, 6);
    CHECK(p.shifted(5)[5] == 1);
    CHECK(p.shifted(5).max_order() == 6);
    CHECK((p * p)[4] == 1);
    CHECK((p + p.scaled(2))[2] == -3);
  }
}
