#include "qdisc/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace qdisc {

namespace {

using Poly = std::vector<mpz_class>;  // coefficients, index = degree in s

void strip_high(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip_high(r);
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  strip_high(r);
  return r;
}

mpz_class poly_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

void poly_divexact_scalar(Poly& p, const mpz_class& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Exact division in Q[s] of integer polynomials, result known to be integral.
Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZero();
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("poly_divexact: degree mismatch");
  std::vector<mpq_class> rem(a.begin(), a.end());
  size_t db = b.size() - 1;
  Poly quo(a.size() - b.size() + 1, mpz_class(0));
  for (size_t top = rem.size() - 1; top >= db; --top) {
    mpq_class c = rem[top] / mpq_class(b[db]);
    size_t shift = top - db;
    if (c != 0) {
      for (size_t j = 0; j <= db; ++j) rem[shift + j] -= c * mpq_class(b[j]);
      c.canonicalize();
      if (c.get_den() != 1)
        throw std::logic_error("poly_divexact: non-integral quotient");
      quo[shift] = c.get_num();
    }
    if (top == db) break;
  }
  strip_high(quo);
  return quo;
}

// Primitive gcd in Z[s] via the Euclidean algorithm over Q[s].
Poly poly_gcd_primitive(Poly a, Poly b) {
  strip_high(a);
  strip_high(b);
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (a.empty()) return {};
    mpz_class c = poly_content(a);
    poly_divexact_scalar(a, c);
    if (a.back() < 0)
      for (auto& x : a) x = -x;
    return a;
  }
  std::vector<mpq_class> u(a.begin(), a.end()), v(b.begin(), b.end());
  auto qstrip = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  while (!v.empty()) {
    // u mod v
    size_t dv = v.size() - 1;
    while (u.size() > dv) {
      mpq_class c = u.back() / v.back();
      size_t shift = u.size() - v.size();
      for (size_t j = 0; j < v.size(); ++j) u[shift + j] -= c * v[j];
      u.back() = 0;
      qstrip(u);
      if (u.empty()) break;
    }
    std::swap(u, v);
  }
  // u is the gcd over Q; clear denominators and take the primitive part.
  mpz_class lcm = 1;
  for (auto& c : u) {
    c.canonicalize();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Poly g(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    mpq_class c = u[i] * mpq_class(lcm);
    c.canonicalize();
    g[i] = c.get_num();
  }
  strip_high(g);
  if (g.empty()) return {};
  mpz_class cont = poly_content(g);
  poly_divexact_scalar(g, cont);
  if (g.back() < 0)
    for (auto& x : g) x = -x;
  return g;
}

}  // namespace

NumericContext::NumericContext(double q_value) : q(q_value), h(-2.0 * std::log(q_value)) {
  if (!(q_value > 0.0 && q_value < 1.0))
    throw std::invalid_argument("q must lie in the open interval (0,1)");
}

void ExactScalar::normalize() {
  strip_high(num_);
  strip_high(den_);
  if (den_.empty()) throw DivisionByZero();
  if (num_.empty()) {
    shift_ = 0;
    den_ = {mpz_class(1)};
    return;
  }
  // Move powers of s from either end into shift_.
  size_t nlow = 0;
  while (num_[nlow] == 0) ++nlow;
  size_t dlow = 0;
  while (den_[dlow] == 0) ++dlow;
  if (nlow) num_.erase(num_.begin(), num_.begin() + nlow);
  if (dlow) den_.erase(den_.begin(), den_.begin() + dlow);
  shift_ += static_cast<int>(nlow) - static_cast<int>(dlow);

  Poly g = poly_gcd_primitive(num_, den_);
  if (g.size() > 1) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  mpz_class cn = poly_content(num_), cd = poly_content(den_), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c > 1) {
    poly_divexact_scalar(num_, c);
    poly_divexact_scalar(den_, c);
  }
  if (den_[0] < 0) {
    for (auto& x : num_) x = -x;
    for (auto& x : den_) x = -x;
  }
}

ExactScalar ExactScalar::from_int(long v) { return integer(mpz_class(v)); }

ExactScalar ExactScalar::integer(const mpz_class& v) {
  ExactScalar r;
  if (v != 0) r.num_ = {v};
  return r;
}

ExactScalar ExactScalar::spow(int n) {
  ExactScalar r = one();
  r.shift_ = n;
  return r;
}

bool ExactScalar::is_one() const {
  return shift_ == 0 && num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int m = std::min(shift_, o.shift_);
  Poly a = num_, b = o.num_;
  a.insert(a.begin(), shift_ - m, mpz_class(0));
  b.insert(b.begin(), o.shift_ - m, mpz_class(0));
  num_ = poly_add(poly_mul(a, o.den_), poly_mul(b, den_));
  den_ = poly_mul(den_, o.den_);
  shift_ = m;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_zero() || o.is_zero()) return *this = ExactScalar();
  shift_ += o.shift_;
  num_ = poly_mul(num_, o.num_);
  den_ = poly_mul(den_, o.den_);
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  ExactScalar r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

ExactScalar ExactScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar r = one(), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool ExactScalar::operator<(const ExactScalar& o) const {
  if (shift_ != o.shift_) return shift_ < o.shift_;
  if (num_.size() != o.num_.size()) return num_.size() < o.num_.size();
  if (den_.size() != o.den_.size()) return den_.size() < o.den_.size();
  for (size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != o.num_[i]) return num_[i] < o.num_[i];
  for (size_t i = 0; i < den_.size(); ++i)
    if (den_[i] != o.den_[i]) return den_[i] < o.den_[i];
  return false;
}

double ExactScalar::eval(const NumericContext& ctx) const {
  if (is_zero()) return 0.0;
  double s = std::sqrt(ctx.q);
  auto horner = [s](const Poly& p, double& scale) {
    double v = 0.0;
    scale = 0.0;
    for (size_t i = p.size(); i-- > 0;) {
      double c = p[i].get_d();
      v = v * s + c;
      scale = scale * s + std::fabs(c);
    }
    return v;
  };
  double nscale, dscale;
  double nv = horner(num_, nscale);
  double dv = horner(den_, dscale);
  if (std::fabs(dv) <= 1e-13 * dscale) throw PoleAtQ(ctx.q);
  return std::pow(s, shift_) * nv / dv;
}

namespace {

// One printed term c*q^(p/2); p in s-units.
void print_term(std::string& out, const mpz_class& c, long p, bool first) {
  mpz_class a = c;
  bool neg = a < 0;
  if (neg) a = -a;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? "-" : "+";
  }
  bool unit = (a == 1);
  if (!unit || p == 0) out += a.get_str();
  if (p != 0) {
    if (!unit) out += "*";
    if (p == 2) {
      out += "q";
    } else if (p % 2 == 0) {
      long e = p / 2;
      out += e < 0 ? "q^(" + std::to_string(e) + ")" : "q^" + std::to_string(e);
    } else {
      out += "q^(" + std::to_string(p) + "/2)";
    }
  }
}

std::string print_poly(const std::vector<mpz_class>& p, int shift) {
  std::string out;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    print_term(out, p[i], shift + static_cast<long>(i), first);
    first = false;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::string n = print_poly(num_, shift_);
  if (den_.size() == 1 && den_[0] == 1) return n;
  std::string d = print_poly(den_, 0);
  return "(" + n + ")/(" + d + ")";
}

// ---------------------------------------------------------------------------
// Parser. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := INT | 'q' | '(' expr ')'
//   exponent := INT | '(' '-'? INT ('/' '2')? ')'
// Half-integer exponents are only admitted on the bare q token.

namespace {

struct ScalarParser {
  std::string_view src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos); }

  mpz_class parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(std::string(src.substr(start, pos - start)));
  }

  // Returns exponent numerator over 2, i.e. exponent = n/2 when half, n when not.
  std::pair<long, bool> parse_exponent() {
    skip_ws();
    bool paren = eat('(');
    bool neg = eat('-');
    mpz_class n = parse_int();
    bool half = false;
    if (paren && eat('/')) {
      mpz_class two = parse_int();
      if (two != 2) fail("only /2 exponents are supported");
      half = true;
    }
    if (paren && !eat(')')) fail("expected ')'");
    long v = n.get_si();
    return {neg ? -v : v, half};
  }

  ExactScalar parse_expr() {
    ExactScalar v = parse_term();
    for (;;) {
      if (eat('+'))
        v += parse_term();
      else if (eat('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  ExactScalar parse_term() {
    ExactScalar v = parse_unary();
    for (;;) {
      if (eat('*'))
        v *= parse_unary();
      else if (eat('/')) {
        ExactScalar d = parse_unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }

  ExactScalar parse_unary() {
    if (eat('-')) return -parse_unary();
    return parse_power();
  }

  ExactScalar parse_power() {
    bool is_q = false;
    ExactScalar base = parse_atom(is_q);
    if (eat('^')) {
      auto [n, half] = parse_exponent();
      if (half) {
        if (!is_q) fail("half-integer exponent only allowed on q");
        return ExactScalar::spow(static_cast<int>(n));
      }
      if (is_q) return ExactScalar::spow(static_cast<int>(2 * n));
      return base.pow(n);
    }
    return base;
  }

  ExactScalar parse_atom(bool& is_q) {
    is_q = false;
    char c = peek();
    if (c == '(') {
      ++pos;
      ExactScalar v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos;
      is_q = true;
      return ExactScalar::spow(2);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ExactScalar::integer(parse_int());
    fail("unexpected token");
  }
};

}  // namespace

ExactScalar ExactScalar::parse(std::string_view src) {
  ScalarParser p{src};
  ExactScalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) throw SyntaxError("trailing input", p.pos);
  return v;
}

}  // namespace qdisc
