// Radial q-analysis on the lattice x = q^{-2m}: the q-difference operator D,
// the radial Laplace-Beltrami part box0 = -D x(1-q^{-1}x) D, eigenfunctions
// Phi_l, the modules V^(l), truncated spectra, and the fixed-l embeddings.

#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "qdisc/discfun.hpp"

namespace qdisc {

struct RecurrenceBreakdown : std::runtime_error {
  RecurrenceBreakdown() : std::runtime_error("leading recurrence coefficient vanished") {}
};

struct DegenerateParameter : std::runtime_error {
  DegenerateParameter()
      : std::runtime_error("ladder coefficient sh((k -/+ l)h/2) vanishes") {}
};

struct BoundaryIndex : std::runtime_error {
  BoundaryIndex() : std::runtime_error("index leaves the V^(l) window") {}
};

// Values on the lattice x = q^{-2m} (parity 0) or x = q^{1-2m} (parity 1),
// m = 0..N-1. D shifts parity by one; out-of-window neighbours are zero.
template <class R>
struct BasicRadial {
  using Scalar = typename R::Scalar;
  int parity = 0;
  std::vector<Scalar> values;

  static BasicRadial delta(const R& ring, int m, int n) {
    BasicRadial f;
    f.values.assign(n, ring.from_int(0));
    f.values[m] = ring.from_int(1);
    return f;
  }
};

// D: f(t) -> (f(q^{-1}t) - f(qt)) / (q^{-1}t - qt).
template <class R>
BasicRadial<R> q_diff(const R& ring, const BasicRadial<R>& f) {
  BasicRadial<R> out;
  out.parity = 1 - f.parity;
  int n = static_cast<int>(f.values.size());
  out.values.assign(n, ring.from_int(0));
  auto at = [&](int m) {
    return (m >= 0 && m < n) ? f.values[m] : ring.from_int(0);
  };
  const typename R::Scalar gap = ring.spow(-2) - ring.spow(2);  // q^{-1} - q
  for (int m = 0; m < n; ++m) {
    if (f.parity == 0) {
      // output point t = q^{1-2m}: q^{-1}t = x_m, qt = x_{m-1}
      out.values[m] = (at(m) - at(m - 1)) / (ring.spow(2 - 4 * m) * gap);
    } else {
      // output point t = q^{-2m}: q^{-1}t = t_{m+1}, qt = t_m
      out.values[m] = (at(m + 1) - at(m)) / (ring.spow(-4 * m) * gap);
    }
  }
  return out;
}

// box0 = -D x(1-q^{-1}x) D on the integer-parity lattice; the multiplier is
// evaluated at the half-lattice points t = q^{1-2m} (it vanishes at t = q,
// which is what closes the boundary row at m = 0).
template <class R>
BasicRadial<R> box0(const R& ring, const BasicRadial<R>& f) {
  BasicRadial<R> d = q_diff(ring, f);
  for (int m = 0; m < static_cast<int>(d.values.size()); ++m)
    d.values[m] = d.values[m] * ring.spow(2 - 4 * m) *
                  (ring.from_int(1) - ring.spow(-4 * m));
  BasicRadial<R> out = q_diff(ring, d);
  for (auto& v : out.values) v = v * ring.from_int(-1);
  return out;
}

// Omega psi = q box0 psi (the Casimir acting on radial elements).
template <class R>
BasicRadial<R> casimir_radial(const R& ring, const BasicRadial<R>& f) {
  BasicRadial<R> out = box0(ring, f);
  for (auto& v : out.values) v = v * ring.spow(2);
  return out;
}

// Radial dbar coefficient as a function of y on the lattice y = q^{2m}:
// -(psi(y) - psi(q^2 y)) / (y - q^2 y).
template <class R>
BasicRadial<R> dbar_radial(const R& ring, const BasicRadial<R>& f) {
  BasicRadial<R> out;
  out.parity = f.parity;
  int n = static_cast<int>(f.values.size());
  out.values.assign(n, ring.from_int(0));
  for (int m = 0; m < n; ++m) {
    typename R::Scalar next = m + 1 < n ? f.values[m + 1] : ring.from_int(0);
    out.values[m] = (next - f.values[m]) / (ring.spow(4 * m) * (ring.from_int(1) - ring.spow(4)));
  }
  return out;
}

enum class JacksonKind { Ray, Line };

// Ray:  int_1^inf f d_{q^{-2}}t = (q^{-2}-1) sum f(q^{-2m}) q^{-2m}
// Line: int_0^inf f d_{q^2}x restricted to the x >= 1 window,
//       = (1-q^2) sum f(q^{-2m}) q^{-2m}
template <class R>
typename R::Scalar q_integral(const R& ring, const BasicRadial<R>& f, JacksonKind kind) {
  typename R::Scalar sum = ring.from_int(0);
  for (int m = 0; m < static_cast<int>(f.values.size()); ++m)
    sum = sum + f.values[m] * ring.spow(-4 * m);
  typename R::Scalar w = kind == JacksonKind::Ray ? ring.spow(-4) - ring.from_int(1)
                                                  : ring.from_int(1) - ring.spow(4);
  return sum * w;
}

// Weighted inner product <f,g> = (1-q^2) sum f_m conj(g_m) q^{-2m}.
template <class R>
typename R::Scalar radial_inner(const R& ring, const BasicRadial<R>& f,
                                const BasicRadial<R>& g) {
  typename R::Scalar sum = ring.from_int(0);
  int n = static_cast<int>(std::min(f.values.size(), g.values.size()));
  for (int m = 0; m < n; ++m)
    sum = sum + f.values[m] * ring.conj(g.values[m]) * ring.spow(-4 * m);
  return sum * (ring.from_int(1) - ring.spow(4));
}

struct RadialNorms {
  double norm_sq;
  double dbar_norm_sq;
};

// ||psi||^2 and ||dbar psi||^2 by the Jackson sums; the templated versions
// below are used by the exact form-equality tests.
template <class R>
typename R::Scalar radial_norm_sq(const R& ring, const BasicRadial<R>& f) {
  return radial_inner(ring, f, f);
}

template <class R>
typename R::Scalar radial_dbar_norm_sq(const R& ring, const BasicRadial<R>& f) {
  // (1-q^2)^{-1} sum |psi_m - psi_{m+1}|^2 (1-q^{2m+2}) q^{-2m}
  typename R::Scalar sum = ring.from_int(0);
  int n = static_cast<int>(f.values.size());
  for (int m = 0; m < n; ++m) {
    typename R::Scalar next = m + 1 < n ? f.values[m + 1] : ring.from_int(0);
    typename R::Scalar d = f.values[m] - next;
    sum = sum + d * ring.conj(d) * (ring.from_int(1) - ring.spow(4 * m + 4)) * ring.spow(-4 * m);
  }
  return sum / (ring.from_int(1) - ring.spow(4));
}

// --- numeric spectral theory ------------------------------------------------

using Complex = std::complex<double>;
using RadialD = BasicRadial<RealRing>;
using RadialC = BasicRadial<ComplexRing>;
using RadialX = BasicRadial<ExactRing>;

// Tridiagonal form of -box0 (non-symmetric; row m couples m-1, m, m+1).
struct TridiagOp {
  std::vector<double> diag, sub, super;
};

TridiagOp neg_box0_tridiag(const NumericContext& ctx, int n);

enum class Zone { L1, L2, L3, Other };

struct SpectralParam {
  Complex l;
  Zone zone = Zone::Other;
};

// box0 eigenvalue: e^{h/2} sh(lh/2) sh((l+1)h/2) / sh^2(h/2).
Complex lambda_of_l(Complex l, const NumericContext& ctx);

// Casimir eigenvalue on V^(l): sh(lh/2) sh((l+1)h/2) / sh^2(h/2).
Complex omega_of_l(Complex l, const NumericContext& ctx);

// Canonical representative modulo l ~ l + (2 pi i/h) Z and l ~ -1-l, plus
// its zone label.
SpectralParam classify_l(Complex l, const NumericContext& ctx);

// Unique solution of box0 Phi = lambda(l) Phi with Phi(1) = 1 on the
// truncated lattice, by the three-term recurrence upward from the boundary.
RadialC phi_l(Complex l, int n, const NumericContext& ctx);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, of -box0
  std::vector<double> weights;      // spectral-measure estimate of f0
  double c1 = 0.0;
  double c2 = 0.0;
};

SpectrumResult spectrum(int n, const NumericContext& ctx);

// u f(l) = q^2 int_1^inf conj(Phi_l) f d_{q^{-2}}x at each sample.
std::vector<Complex> transform_u(const RadialD& f, std::span<const Complex> samples, int n,
                                 const NumericContext& ctx);

// --- the modules V^(l) -------------------------------------------------------

struct VlModule {
  Complex l;
  int k_min = 0;
  int k_max = 0;
};

enum class VlGen { Xplus, Xminus, H, Omega };

// Image of a basis vector e_k under a generator: list of (k', coefficient).
std::vector<std::pair<int, Complex>> vl_action(const VlModule& mod, VlGen g, int k,
                                               const NumericContext& ctx);

// i^(l) e_k for |k| <= k_max, as finite elements over the complex ring
// (layer-k truncations of the embedding of V^(l) into distributions).
std::map<int, BasicFin<ComplexRing>> embed_il_fins(Complex l, int k_max, int n,
                                                   const NumericContext& ctx);

// Layer-k radial profiles of the embedded basis vectors.
std::map<int, std::vector<Complex>> embed_il(Complex l, int k_max, int n,
                                             const NumericContext& ctx);

// Pairing coefficients (j^(l) f, e_k) = int (i^(l)e_k)* f d nu, k in
// [-k_max, k_max].
std::map<int, Complex> project_jl(Complex l, const FinElement& f, int k_max, int n,
                                  const NumericContext& ctx);

}  // namespace qdisc
