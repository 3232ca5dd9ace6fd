// Exact arithmetic in the field Q(s), s = q^(1/2), with arbitrary-precision
// integer coefficients, plus numeric evaluation at a concrete q in (0,1).
//
// An ExactScalar is kept in a canonical form
//     value = s^shift * num(s) / den(s)
// where num, den are integer polynomials with nonzero constant terms,
// gcd(num, den) = 1 in Z[s] (content included), and den(0) > 0. Equal values
// therefore compare field-by-field.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdisc {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by the zero scalar") {}
};

struct PoleAtQ : std::runtime_error {
  explicit PoleAtQ(double q)
      : std::runtime_error("scalar denominator vanishes at q = " + std::to_string(q)) {}
};

struct SyntaxError : std::runtime_error {
  size_t offset;
  SyntaxError(const std::string& what, size_t off)
      : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// A concrete deformation parameter. h = -2 ln q.
struct NumericContext {
  double q;
  double h;

  explicit NumericContext(double q_value);
};

class ExactScalar {
 public:
  ExactScalar() = default;  // zero

  static ExactScalar from_int(long v);
  static ExactScalar integer(const mpz_class& v);
  // q^(n/2) = s^n, n may be negative.
  static ExactScalar spow(int n);
  static ExactScalar one() { return from_int(1); }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);  // throws DivisionByZero

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  ExactScalar inverse() const;
  // Integer power, negative allowed (throws DivisionByZero on zero base).
  ExactScalar pow(long e) const;

  bool operator==(const ExactScalar& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  // Arbitrary strict total order, for use as a map key.
  bool operator<(const ExactScalar& o) const;

  // Numeric value at s = sqrt(ctx.q). Throws PoleAtQ.
  double eval(const NumericContext& ctx) const;

  // Canonical textual form; parse(str()) reproduces the scalar bit-exactly.
  std::string str() const;
  static ExactScalar parse(std::string_view src);

 private:
  void normalize();

  int shift_ = 0;
  std::vector<mpz_class> num_;      // empty <=> zero; else num_[0] != 0, num_.back() != 0
  std::vector<mpz_class> den_{1};   // den_[0] > 0, den_.back() != 0
};

}  // namespace qdisc
