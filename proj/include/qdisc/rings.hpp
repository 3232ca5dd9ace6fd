// Coefficient rings shared by the algebra templates: exact Q(s) arithmetic,
// and floating-point evaluation at a concrete q for the spectral code.

#pragma once

#include <cmath>
#include <complex>

#include "qdisc/scalar.hpp"

namespace qdisc {

struct ExactRing {
  using Scalar = ExactScalar;

  Scalar spow(int n) const { return ExactScalar::spow(n); }  // q^(n/2)
  Scalar from_int(long v) const { return ExactScalar::from_int(v); }
  Scalar from_exact(const ExactScalar& a) const { return a; }
  Scalar conj(const Scalar& a) const { return a; }  // real coefficient field
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
};

template <class T>
struct NumericRing {
  using Scalar = T;

  NumericContext ctx;
  double s;  // sqrt(q)

  explicit NumericRing(const NumericContext& c) : ctx(c), s(std::sqrt(c.q)) {}

  Scalar spow(int n) const { return Scalar(std::pow(s, n)); }
  Scalar from_int(long v) const { return Scalar(static_cast<double>(v)); }
  Scalar from_exact(const ExactScalar& a) const { return Scalar(a.eval(ctx)); }
  Scalar conj(const Scalar& a) const {
    if constexpr (std::is_same_v<T, std::complex<double>>)
      return std::conj(a);
    else
      return a;
  }
  bool is_zero(const Scalar& a) const { return std::abs(a) == 0.0; }
};

using RealRing = NumericRing<double>;
using ComplexRing = NumericRing<std::complex<double>>;

}  // namespace qdisc
