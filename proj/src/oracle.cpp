#include "realpoincare/oracle.hpp"

#include <map>

#include "realpoincare/errors.hpp"

namespace realpoincare {

namespace {

using Row = std::vector<BigInt>;

/// Row echelon form over Z, one row per pivot column.
class IntegerEchelon {
 public:
  /// Returns true if the row was independent of the rows seen so far.
  bool insert(Row r) {
    for (auto& [p, basis] : rows_) {
      if (sgn(r[p]) == 0) continue;
      const BigInt f = r[p];
      const BigInt h = basis[p];
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = h * r[k] - f * basis[k];
      reduce_content(r);
    }
    for (std::size_t k = 0; k < r.size(); ++k)
      if (sgn(r[k]) != 0) {
        rows_.emplace(k, std::move(r));
        return true;
      }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  static void reduce_content(Row& r) {
    BigInt g = 0;
    for (const auto& x : r)
      if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : r)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  std::map<std::size_t, Row> rows_;  // iterated by ascending pivot
};

Row integer_row(const std::vector<Rational>& q) {
  BigInt l = 1;
  for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  Row r;
  r.reserve(q.size());
  for (const auto& x : q) r.push_back(x.numerator() * (l / x.denominator()));
  return r;
}

}  // namespace

OracleResult dims_bruteforce(const BranchParam& b, long A_max, long size_cap, int degree) {
  require_valid(b);
  if (A_max < 0) throw InvariantViolation("negative oracle range");
  OracleResult out;
  const long mult = b.multiplicity();
  out.D = degree > 0 ? degree : static_cast<int>(A_max / mult + 1);
  out.rows = 2 * (A_max + 1);
  out.cols = static_cast<long>(out.D + 1) * (out.D + 2) / 2;
  if (out.rows > size_cap || out.cols > size_cap)
    throw ResourceLimit("oracle matrix " + std::to_string(out.rows) + "x" + std::to_string(out.cols) +
                        " exceeds the size cap " + std::to_string(size_cap) + "; lower --max-order");

  const int T = static_cast<int>(A_max + 1);
  TruncatedSeries x = TruncatedSeries::monomial(GaussianRational(1), b.n, T);
  TruncatedSeries y = TruncatedSeries::from_terms(
      std::vector<std::pair<int, GaussianRational>>(b.y_terms.begin(), b.y_terms.end()), T);

  // Columns ordered by total degree, then by the power of y.
  std::vector<TruncatedSeries> cols;
  std::vector<TruncatedSeries> xp{TruncatedSeries::monomial(GaussianRational(1), 0, T)};
  std::vector<TruncatedSeries> yp{xp[0]};
  for (int k = 1; k <= out.D; ++k) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  for (int d = 0; d <= out.D; ++d)
    for (int j = 0; j <= d; ++j) {
      TruncatedSeries s = xp[static_cast<std::size_t>(d - j)] * yp[static_cast<std::size_t>(j)];
      s = s.truncated(T);
      if (s.truncation() < T) throw InvariantViolation("jet column lost precision");
      // nu_C of a monomial of degree d is at least mult * d.
      if (auto o = s.order(); o && *o < mult * d)
        throw InvariantViolation("monomial of degree " + std::to_string(d) + " has order " + std::to_string(*o));
      cols.push_back(std::move(s));
    }

  IntegerEchelon ech;
  out.profile.source = ProfileSource::oracle;
  for (int k = 0; k <= A_max; ++k) {
    std::size_t before = ech.rank();
    std::vector<Rational> re, im;
    re.reserve(cols.size());
    im.reserve(cols.size());
    for (const auto& s : cols) {
      re.push_back(s.coeff(k).re());
      im.push_back(s.coeff(k).im());
    }
    ech.insert(integer_row(re));
    ech.insert(integer_row(im));
    out.profile.dims.push_back(static_cast<int>(ech.rank() - before));
  }
  return out;
}

std::vector<bool> semigroup_enumerate(const std::vector<long>& gens, long bound) {
  std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
  in[0] = 1;
  for (long g : gens)
    for (long a = g; a <= bound; ++a)
      if (in[static_cast<std::size_t>(a - g)]) in[static_cast<std::size_t>(a)] = 1;
  return {in.begin(), in.end()};
}

VerificationReport compare(const DimensionProfile& closed, const DimensionProfile* brute, const SeriesBundle& series,
                           const std::vector<bool>& membership, std::optional<long> m_rho, long range_hi) {
  VerificationReport rep;
  rep.range_hi = range_hi;
  auto need = [&](long have, const char* what) {
    if (have < range_hi)
      throw InvariantViolation(std::string(what) + " covers only [0, " + std::to_string(have) + "]");
  };
  need(closed.bound(), "closed-form profile");
  if (brute) need(brute->bound(), "oracle profile");
  need(static_cast<long>(membership.size()) - 1, "membership table");
  need(series.PS.max_order(), "P^S expansion");
  if (series.P) need(series.P->max_order(), "P expansion");
  if (series.PR) need(series.PR->max_order(), "P^R expansion");

  auto in = [&](long a) { return a >= 0 && membership[static_cast<std::size_t>(a)]; };
  for (long a = 0; a <= range_hi; ++a) {
    const int k = static_cast<int>(a);
    const long dc = closed.dims[static_cast<std::size_t>(a)];
    if (series.PS[k] != (in(a) ? 1 : 0))
      rep.add({a, in(a) ? "1" : "0", series.PS[k].get_str(), "P^S coefficient vs semigroup enumeration"});
    if (series.P && (*series.P)[k] != dc)
      rep.add({a, std::to_string(dc), (*series.P)[k].get_str(), "P coefficient vs closed-form dimension"});
    if (series.PR && m_rho) {
      const long want = (in(a) ? 1 : 0) - (in(a - *m_rho) ? 1 : 0);
      if ((*series.PR)[k] != want)
        rep.add({a, std::to_string(want), (*series.PR)[k].get_str(), "P^R coefficient vs [a in S] - [a - m_rho in S]"});
      else if (want < 0)
        rep.add({a, "0 or 1", std::to_string(want), "P^R coefficient range"});
    }
    if (brute) {
      const long db = brute->dims[static_cast<std::size_t>(a)];
      if (db != dc) rep.add({a, std::to_string(dc), std::to_string(db), "closed-form dimension vs oracle rank difference"});
    }
  }
  return rep;
}

}  // namespace realpoincare
