#include "realpoincare/branch.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "realpoincare/errors.hpp"

namespace realpoincare {

std::optional<int> BranchParam::ord_y() const {
  if (y_terms.empty()) return std::nullopt;
  return y_terms.begin()->first;
}

int BranchParam::multiplicity() const {
  auto o = ord_y();
  return o ? std::min(n, *o) : n;
}

namespace {

std::string term_text(const GaussianRational& c, int e, bool first) {
  std::string mono = "t^" + std::to_string(e);
  std::string sign;
  std::string body;
  GaussianRational a = c;
  bool negate = (c.is_real() && c.re().sign() < 0) || (c.re().is_zero() && c.im().sign() < 0);
  if (negate) a = -c;
  if (a == GaussianRational(1))
    body = mono;
  else if (a.is_real() || a.re().is_zero())
    body = a.to_string() + "*" + mono;
  else
    body = "(" + a.to_string() + ")*" + mono;
  if (first) return (negate ? "-" : "") + body;
  return (negate ? " - " : " + ") + body;
}

}  // namespace

std::string BranchParam::emit() const {
  std::ostringstream os;
  os << "n = " << n << "\n";
  os << "y = ";
  if (y_terms.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& [e, c] : y_terms) {
      os << term_text(c, e, first);
      first = false;
    }
  }
  os << "\n";
  return os.str();
}

std::string BranchParam::describe() const {
  std::string y = "0";
  if (!y_terms.empty()) {
    y.clear();
    bool first = true;
    for (const auto& [e, c] : y_terms) {
      y += term_text(c, e, first);
      first = false;
    }
  }
  return "(t^" + std::to_string(n) + ", " + y + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Cursor {
 public:
  Cursor(const std::string& text, int line, int col0) : s_(text), line_(line), col0_(col0) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw ParseError(what, line_, col0_ + static_cast<int>(pos_) + 1);
  }
  int column() const { return col0_ + static_cast<int>(pos_) + 1; }

  /// Optionally signed decimal integer.
  std::string integer(bool allow_sign) {
    skip_ws();
    std::string out;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') out += '-';
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return out + s_.substr(start, pos_ - start);
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  /// rat := integer | integer '/' positive-integer
  Rational rational(bool allow_sign) {
    std::string num = integer(allow_sign);
    if (peek() == '/') {
      ++pos_;
      int col = column();
      std::string den = integer(false);
      if (BigInt(den) == 0) throw ParseError("zero denominator", line_, col);
      return Rational(BigInt(num), BigInt(den));
    }
    return Rational(BigInt(num));
  }

  /// Positive integer exponent.
  int exponent() {
    int col = (skip_ws(), column());
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    std::string digits = integer(false);
    BigInt v(digits);
    if (negative || v <= 0) throw ParseError("non-positive exponent", line_, col);
    if (v > 1000000) throw ParseError("exponent too large", line_, col);
    return static_cast<int>(v.get_si());
  }

  /// coeff := rat | 'i' | rat '*' 'i' | '(' rat ('+'|'-') (rat '*')? 'i' ')'
  /// followed by '*' 't' '^' exponent; a bare 't' means t^1.
  std::pair<int, GaussianRational> term() {
    GaussianRational coeff(1);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Rational re = rational(true);
      bool minus;
      if (accept('+'))
        minus = false;
      else if (accept('-'))
        minus = true;
      else
        fail("expected '+' or '-' inside complex coefficient");
      Rational im(1);
      if (at_digit()) {
        im = rational(false);
        expect('*', "'*'");
      }
      expect('i', "'i'");
      expect(')', "')'");
      coeff = GaussianRational(re, minus ? -im : im);
      expect('*', "'*' before 't'");
    } else if (c == 'i') {
      ++pos_;
      coeff = GaussianRational::i();
      expect('*', "'*' before 't'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r = rational(false);
      if (peek() != '*') fail("constant terms are not allowed: the branch passes through the origin");
      ++pos_;
      if (accept('i')) {
        coeff = GaussianRational(Rational(0), r);
        expect('*', "'*' before 't'");
      } else {
        coeff = GaussianRational(r);
      }
    }
    if (!accept('t')) fail("expected 't'");
    int e = 1;
    if (accept('^')) e = exponent();
    return {e, coeff};
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

struct Line {
  int number;
  int key_column;
  std::string key;
  int value_column;  // 0-based offset of value in the raw line
  std::string value;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", number, static_cast<int>(first) + 1);
    std::string key = raw.substr(first, eq - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    out.push_back({number, static_cast<int>(first) + 1, key, static_cast<int>(eq) + 1, raw.substr(eq + 1)});
  }
  return out;
}

long parse_long(Cursor& cur, bool positive) {
  std::string digits = cur.integer(true);
  BigInt v(digits);
  if (positive && v <= 0) cur.fail("expected a positive integer");
  if (!v.fits_slong_p()) cur.fail("integer out of range");
  return v.get_si();
}

std::map<int, GaussianRational> parse_y(const Line& line) {
  std::map<int, GaussianRational> terms;
  Cursor cur(line.value, line.number, line.value_column);
  if (cur.at_end()) cur.fail("expected a term");
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.integer(false);
    if (probe.at_end()) return terms;  // y = 0
  }
  bool negate = false;
  if (cur.accept('-'))
    negate = true;
  else
    cur.accept('+');
  while (true) {
    auto [e, c] = cur.term();
    terms[e] += negate ? -c : c;
    if (cur.at_end()) break;
    if (cur.accept('+'))
      negate = false;
    else if (cur.accept('-'))
      negate = true;
    else
      cur.fail("expected '+' or '-'");
  }
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  return terms;
}

InputFile parse_impl(const std::string& text, bool allow_claims) {
  InputFile out;
  out.branch.source_text = text;
  bool have_n = false;
  bool have_y = false;
  int last_line = 0;
  for (const Line& line : split_lines(text)) {
    last_line = line.number;
    Cursor cur(line.value, line.number, line.value_column);
    if (line.key == "n") {
      if (have_n) throw ParseError("duplicate 'n'", line.number, line.key_column);
      cur.skip_ws();
      int col = cur.column();
      std::string digits = cur.integer(true);
      BigInt v(digits);
      if (v <= 0) throw ParseError("n must be a positive integer", line.number, col);
      if (v > 100000) throw ParseError("n too large", line.number, col);
      if (!cur.at_end()) cur.fail("unexpected text after n");
      out.branch.n = static_cast<int>(v.get_si());
      have_n = true;
    } else if (line.key == "y") {
      if (have_y) throw ParseError("duplicate 'y'", line.number, line.key_column);
      out.branch.y_terms = parse_y(line);
      have_y = true;
    } else if (allow_claims && line.key == "M") {
      std::vector<long> gens;
      do {
        gens.push_back(parse_long(cur, true));
      } while (cur.accept(','));
      if (!cur.at_end()) cur.fail("expected ','");
      out.claims.M = gens;
    } else if (allow_claims && line.key == "m_rho") {
      out.claims.m_rho = parse_long(cur, true);
      if (!cur.at_end()) cur.fail("unexpected text after m_rho");
    } else {
      throw ParseError("unknown key '" + line.key + "'", line.number, line.key_column);
    }
  }
  if (!have_n) throw ParseError("missing 'n = ...' line", last_line + 1, 1);
  if (!have_y) throw ParseError("missing 'y = ...' line", last_line + 1, 1);
  return out;
}

}  // namespace

BranchParam parse_branch(const std::string& text) { return parse_impl(text, false).branch; }

InputFile parse_input(const std::string& text) { return parse_impl(text, true); }

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const BranchParam& b) {
  ValidationReport r;
  r.multiplicity = b.multiplicity();
  if (b.n <= 0) {
    r.message = "n must be positive";
    return r;
  }
  for (const auto& [e, c] : b.y_terms) {
    if (e < 1) {
      r.message = "exponent " + std::to_string(e) + " < 1: the germ must pass through the origin";
      return r;
    }
  }
  long g = b.n;
  for (const auto& [e, c] : b.y_terms) g = std::gcd(g, static_cast<long>(e));
  if (g != 1) {
    if (b.y_terms.empty())
      r.message = "y = 0 with n > 1: non-primitive parametrization";
    else
      r.message = "non-primitive parametrization: gcd(n, exponents) = " + std::to_string(g);
    return r;
  }
  r.valid = true;
  r.smooth = r.multiplicity == 1;
  r.message = r.smooth ? "valid, smooth" : "valid";
  return r;
}

void require_valid(const BranchParam& b) {
  auto r = validate(b);
  if (!r.valid) throw ValidationError(r.message);
}

// ---------------------------------------------------------------------------
// Reality

namespace {

/// Writes a unit of Q(i) as i^m, m in 0..3; nullopt if it is not a fourth root of unity.
std::optional<int> fourth_root_index(const GaussianRational& r) {
  if (r == GaussianRational(1)) return 0;
  if (r == GaussianRational::i()) return 1;
  if (r == GaussianRational(-1)) return 2;
  if (r == -GaussianRational::i()) return 3;
  return std::nullopt;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

RealityDecision is_real_branch(const BranchParam& b) {
  RealityDecision d;
  const long n = b.n;
  // r_j = a_j / conj(a_j) = i^{m_j}.
  std::vector<std::pair<long, long>> jm;
  for (const auto& [j, a] : b.y_terms) {
    auto m = fourth_root_index(a / a.conj());
    if (!m) return d;
    jm.emplace_back(j, *m);
  }
  // a_j zeta^j real for zeta = exp(2 pi i k/n)  <=>  8 j k = -m_j n  (mod 4n).
  for (long k = 0; k < n && !d.witness; ++k) {
    bool ok = true;
    for (auto [j, m] : jm) ok = ok && mod(8 * j * k + m * n, 4 * n) == 0;
    if (ok) d.witness = static_cast<int>(k);
  }
  // conj(a_j) = a_j zeta^j for zeta = exp(2 pi i l/n)  <=>  4 j l = -m_j n  (mod 4n).
  // This is C = conj(C); the witness condition is the particular case l = 2k.
  for (long l = 0; l < n && !d.conjugation_shift; ++l) {
    bool ok = true;
    for (auto [j, m] : jm) ok = ok && mod(4 * j * l + m * n, 4 * n) == 0;
    if (ok) d.conjugation_shift = static_cast<int>(l);
  }
  d.is_real = d.conjugation_shift.has_value();
  return d;
}

BranchParam conjugate(const BranchParam& b) {
  BranchParam c = b;
  for (auto& [e, a] : c.y_terms) a = a.conj();
  c.source_text.clear();
  return c;
}

// ---------------------------------------------------------------------------
// Characteristic exponents

std::vector<long> CharExponents::N() const {
  std::vector<long> out;
  for (std::size_t i = 1; i < e.size(); ++i) out.push_back(e[i - 1] / e[i]);
  return out;
}

std::vector<long> CharExponents::classical_generators() const {
  std::vector<long> m;
  if (beta.empty()) return m;
  m.push_back(beta[0]);
  if (beta.size() > 1) m.push_back(beta[1]);
  auto Ns = N();
  for (std::size_t i = 1; i + 1 < beta.size(); ++i)
    m.push_back(Ns[i - 1] * m[i] + beta[i + 1] - beta[i]);
  return m;
}

namespace {

/// Scans a support (ascending) for gcd drops starting from beta_0.
/// Returns true when the gcd reached 1.
bool scan_support(CharExponents& ce, const std::vector<long>& support) {
  for (long j : support) {
    long e = ce.e.back();
    if (e == 1) return true;
    if (j % e == 0) continue;
    ce.beta.push_back(j);
    ce.e.push_back(std::gcd(e, j));
  }
  return ce.e.back() == 1;
}

constexpr int kMaxReversionTruncation = 1 << 12;

}  // namespace

CharExponents char_exponents(const BranchParam& b) {
  require_valid(b);
  CharExponents ce;
  if (b.is_smooth()) {
    ce.beta = {1};
    ce.e = {1};
    return ce;
  }
  const int m = b.multiplicity();
  ce.beta = {m};
  ce.e = {m};
  if (m == b.n) {
    std::vector<long> support;
    for (const auto& [j, a] : b.y_terms) support.push_back(j);
    if (!scan_support(ce, support)) throw InvariantViolation("gcd chain did not reach 1 on a primitive branch");
  } else {
    // ord y = m < n: take s with y = a s^m, s = t (y / (a t^m))^{1/m}, invert to
    // t = t(s) (Lagrange) and read the characteristic exponents off x = t(s)^n.
    const GaussianRational lead = b.y_terms.begin()->second;
    for (int T = 2 * b.n + b.y_degree(); ; T *= 2) {
      if (T > kMaxReversionTruncation) throw ResourceLimit("characteristic exponent extraction exceeded truncation cap");
      std::vector<std::pair<int, GaussianRational>> h;
      for (const auto& [j, a] : b.y_terms) h.emplace_back(j - m, a / lead);
      TruncatedSeries unit = TruncatedSeries::from_terms(h, T);  // y / (a t^m), constant term 1
      // [s^k] t(s) = (1/k) [t^{k-1}] unit^{-k/m}
      std::vector<GaussianRational> tc(static_cast<std::size_t>(T));
      for (int k = 1; k < T; ++k) {
        TruncatedSeries p = unit_power(unit.truncated(k), Rational(BigInt(-k), BigInt(m)));
        tc[static_cast<std::size_t>(k)] = p.coeff(k - 1) / GaussianRational(k);
      }
      TruncatedSeries w = TruncatedSeries(tc).shift(-1);  // t(s) / s
      TruncatedSeries wn = unit_power(w, Rational(b.n));
      std::vector<long> support;
      for (int k = 0; k < wn.truncation(); ++k)
        if (!wn.coeff(k).is_zero()) support.push_back(b.n + k);
      ce.beta = {m};
      ce.e = {m};
      if (scan_support(ce, support)) break;
    }
  }
  ce.g = static_cast<int>(ce.beta.size()) - 1;
  return ce;
}

// ---------------------------------------------------------------------------
// Valuation

BivariatePoly BivariatePoly::constant(const Rational& c) { return monomial(0, 0, c); }

BivariatePoly BivariatePoly::monomial(int a, int b, const Rational& c) {
  BivariatePoly p;
  if (!c.is_zero()) p.terms[{a, b}] = c;
  return p;
}

int BivariatePoly::total_degree() const {
  int d = 0;
  for (const auto& [ab, c] : terms) d = std::max(d, ab.first + ab.second);
  return d;
}

BivariatePoly operator+(const BivariatePoly& f, const BivariatePoly& g) {
  BivariatePoly r = f;
  for (const auto& [ab, c] : g.terms) {
    auto& slot = r.terms[ab];
    slot += c;
    if (slot.is_zero()) r.terms.erase(ab);
  }
  return r;
}

BivariatePoly operator-(const BivariatePoly& f, const BivariatePoly& g) { return f + g.scaled(Rational(-1)); }

BivariatePoly operator*(const BivariatePoly& f, const BivariatePoly& g) {
  BivariatePoly r;
  for (const auto& [ab, c] : f.terms)
    for (const auto& [cd, d] : g.terms) r = r + BivariatePoly::monomial(ab.first + cd.first, ab.second + cd.second, c * d);
  return r;
}

BivariatePoly BivariatePoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  BivariatePoly r = *this;
  for (auto& [ab, v] : r.terms) v *= c;
  return r;
}

std::optional<long> value_of(const BranchParam& b, const BivariatePoly& f) {
  if (f.is_zero()) return std::nullopt;
  // f(t^n, y(t)) is a polynomial of degree <= exact_degree; truncations beyond it are exact.
  long exact_degree = 0;
  for (const auto& [ab, c] : f.terms)
    exact_degree = std::max(exact_degree, static_cast<long>(ab.first) * b.n + static_cast<long>(ab.second) * b.y_degree());
  std::vector<std::pair<int, GaussianRational>> yt(b.y_terms.begin(), b.y_terms.end());
  for (long T = 16;; T *= 2) {
    const int Ti = static_cast<int>(T);
    TruncatedSeries y = TruncatedSeries::from_terms(yt, Ti);
    int max_b = 0;
    for (const auto& [ab, c] : f.terms) max_b = std::max(max_b, ab.second);
    std::vector<TruncatedSeries> ypow{TruncatedSeries::monomial(GaussianRational(1), 0, Ti)};
    for (int k = 1; k <= max_b; ++k) ypow.push_back((ypow.back() * y).truncated(Ti));
    TruncatedSeries acc(std::vector<GaussianRational>(static_cast<std::size_t>(Ti)));
    for (const auto& [ab, c] : f.terms) {
      TruncatedSeries term = ypow[static_cast<std::size_t>(ab.second)].shift(ab.first * b.n).truncated(Ti);
      acc = acc + term.scaled(GaussianRational(c));
    }
    if (auto o = acc.order()) return *o;
    if (T > exact_degree) return std::nullopt;
  }
}

}  // namespace realpoincare
