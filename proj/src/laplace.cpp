#include "qdisc/laplace.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdisc {

namespace {

constexpr double kTol = 1e-9;

Complex sh(Complex x) { return std::sinh(x); }

}  // namespace

TridiagOp neg_box0_tridiag(const NumericContext& ctx, int n) {
  // Row m of -box0 applied to the value array: alpha_m couples the
  // half-lattice point q^{-2m-1} to its neighbours,
  //   alpha_m = (1 - q^{-2m-2}) / (q^{-1} - q).
  TridiagOp op;
  op.diag.resize(n);
  op.sub.assign(n, 0.0);
  op.super.assign(n, 0.0);
  double q = ctx.q;
  double gap = 1.0 / q - q;
  auto alpha = [&](int m) { return (1.0 - std::pow(q, -2 * m - 2)) / gap; };
  for (int m = 0; m < n; ++m) {
    double scale = std::pow(q, 2 * m) / gap;
    double am = alpha(m);
    double am1 = m > 0 ? alpha(m - 1) : 0.0;
    op.diag[m] = -(am + am1) * scale;
    op.super[m] = am * scale;
    if (m > 0) op.sub[m] = am1 * scale;
  }
  return op;
}

Complex lambda_of_l(Complex l, const NumericContext& ctx) {
  double h = ctx.h;
  Complex s2 = sh(Complex(h / 2));
  return std::exp(h / 2) * sh(l * (h / 2)) * sh((l + 1.0) * (h / 2)) / (s2 * s2);
}

Complex omega_of_l(Complex l, const NumericContext& ctx) {
  return ctx.q * lambda_of_l(l, ctx);
}

SpectralParam classify_l(Complex l, const NumericContext& ctx) {
  double period = 2.0 * std::numbers::pi / ctx.h;
  auto wrap = [&](Complex v) {
    // imaginary part into (-period/2, period/2]
    double im = std::remainder(v.imag(), period);
    if (im < -period / 2 || std::abs(im + period / 2) < 1e-15) im += period;
    return Complex(v.real(), im);
  };
  Complex c = wrap(l);
  if (c.real() < -0.5 - kTol) c = wrap(-1.0 - c);
  if (std::abs(c.real() + 0.5) < kTol && c.imag() < -kTol &&
      std::abs(c.imag() - period / 2) > kTol)
    c = wrap(-1.0 - c);  // on the critical line, take Im >= 0

  SpectralParam p;
  p.l = c;
  if (std::abs(c.imag()) < kTol && c.real() > -0.5 + kTol && c.real() < -kTol) {
    p.l = Complex(c.real(), 0.0);
    p.zone = Zone::L1;
  } else if (std::abs(c.real() + 0.5) < kTol && c.imag() > -kTol &&
             c.imag() < period / 2 - kTol) {
    p.l = Complex(-0.5, std::max(c.imag(), 0.0));
    p.zone = Zone::L2;
  } else if (std::abs(c.imag() - period / 2) < kTol && c.real() > -0.5 - kTol) {
    p.l = Complex(c.real(), period / 2);
    p.zone = Zone::L3;
  }
  return p;
}

RadialC phi_l(Complex l, int n, const NumericContext& ctx) {
  TridiagOp op = neg_box0_tridiag(ctx, n);
  Complex mu = -lambda_of_l(l, ctx);  // eigenvalue of -box0
  RadialC out;
  out.values.assign(n, Complex(0.0));
  out.values[0] = Complex(1.0);
  if (n < 2) return out;
  if (std::abs(op.super[0]) == 0.0) throw RecurrenceBreakdown();
  out.values[1] = (mu - op.diag[0]) / op.super[0];
  for (int m = 1; m + 1 < n; ++m) {
    if (std::abs(op.super[m]) == 0.0) throw RecurrenceBreakdown();
    out.values[m + 1] =
        ((mu - op.diag[m]) * out.values[m] - op.sub[m] * out.values[m - 1]) / op.super[m];
  }
  return out;
}

SpectrumResult spectrum(int n, const NumericContext& ctx) {
  TridiagOp op = neg_box0_tridiag(ctx, n);
  // Conjugation by the Jackson-weight diagonal r_m = q^{-m} makes the
  // off-diagonal symmetric: offdiag_m = q * super_m.
  Eigen::VectorXd diag(n), offdiag(n - 1);
  for (int m = 0; m < n; ++m) diag[m] = op.diag[m];
  for (int m = 0; m + 1 < n; ++m) offdiag[m] = ctx.q * op.super[m];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);

  SpectrumResult res;
  res.eigenvalues.resize(n);
  res.weights.resize(n);
  double norm_f0 = 1.0 - ctx.q * ctx.q;
  for (int i = 0; i < n; ++i) {
    res.eigenvalues[i] = solver.eigenvalues()[i];
    double v0 = solver.eigenvectors()(0, i);
    res.weights[i] = v0 * v0 * norm_f0;
  }
  res.c1 = res.eigenvalues.front();
  res.c2 = res.eigenvalues.back();
  return res;
}

std::vector<Complex> transform_u(const RadialD& f, std::span<const Complex> samples, int n,
                                 const NumericContext& ctx) {
  std::vector<Complex> out;
  out.reserve(samples.size());
  double q2 = ctx.q * ctx.q;
  double jackson = q2 * (1.0 / q2 - 1.0);  // q^2 (q^{-2} - 1) = 1 - q^2
  for (Complex l : samples) {
    RadialC phi = phi_l(l, std::max(n, static_cast<int>(f.values.size())), ctx);
    Complex sum(0.0);
    for (int m = 0; m < static_cast<int>(f.values.size()); ++m)
      sum += std::conj(phi.values[m]) * f.values[m] * std::pow(q2, -m);
    out.push_back(jackson * sum);
  }
  return out;
}

std::vector<std::pair<int, Complex>> vl_action(const VlModule& mod, VlGen g, int k,
                                               const NumericContext& ctx) {
  double h = ctx.h;
  Complex s2 = sh(Complex(h / 2));
  switch (g) {
    case VlGen::H:
      return {{k, Complex(2.0 * k)}};
    case VlGen::Xplus: {
      if (k + 1 > mod.k_max) throw BoundaryIndex();
      Complex c = sh((Complex(k) - mod.l) * (h / 2)) / s2;
      return {{k + 1, c}};
    }
    case VlGen::Xminus: {
      if (k - 1 < mod.k_min) throw BoundaryIndex();
      Complex c = -sh((Complex(k) + mod.l) * (h / 2)) / s2;
      return {{k - 1, c}};
    }
    case VlGen::Omega: {
      // X^- X^+ + sh(Hh/4) sh((H+2)h/4) / sh^2(h/2) on e_k, diagonal:
      Complex ladder = -sh((Complex(k) - mod.l) * (h / 2)) *
                       sh((Complex(k + 1) + mod.l) * (h / 2)) / (s2 * s2);
      Complex cartan = sh(Complex(k * h / 2.0)) * sh(Complex((k + 1) * h / 2.0)) / (s2 * s2);
      return {{k, ladder + cartan}};
    }
  }
  return {};
}

std::map<int, BasicFin<ComplexRing>> embed_il_fins(Complex l, int k_max, int n,
                                                   const NumericContext& ctx) {
  ComplexRing ring(ctx);
  double h = ctx.h;
  Complex s2 = sh(Complex(h / 2));

  RadialC phi = phi_l(l, n, ctx);
  std::map<int, BasicFin<ComplexRing>> out;
  out[0] = radial_compose(ring, 0, phi.values);

  // Ladder conversion on a layer-k homogeneous element:
  //   X^+ v = q^{-k} E v,  X^- v = q^{k-1} F v.
  BasicFin<ComplexRing> cur = out[0];
  for (int k = 0; k < k_max; ++k) {
    Complex c = sh((Complex(k) - l) * (h / 2)) / s2;
    if (std::abs(c) < 1e-12) throw DegenerateParameter();
    BasicFin<ComplexRing> up = act_gen_fin(ring, Gen::E, cur);
    cur = fin_scale(ring, up, std::pow(ctx.q, -k) / c);
    out[k + 1] = cur;
  }
  cur = out[0];
  for (int k = 0; k > -k_max; --k) {
    Complex c = -sh((Complex(k) + l) * (h / 2)) / s2;
    if (std::abs(c) < 1e-12) throw DegenerateParameter();
    BasicFin<ComplexRing> down = act_gen_fin(ring, Gen::F, cur);
    cur = fin_scale(ring, down, std::pow(ctx.q, k - 1) / c);
    out[k - 1] = cur;
  }
  return out;
}

std::map<int, std::vector<Complex>> embed_il(Complex l, int k_max, int n,
                                             const NumericContext& ctx) {
  ComplexRing ring(ctx);
  std::map<int, std::vector<Complex>> out;
  for (const auto& [k, fin] : embed_il_fins(l, k_max, n, ctx)) {
    auto layers = radial_decompose(ring, fun_of_fin(fin));
    auto it = layers.find(k);
    out[k] = it != layers.end() ? it->second : std::vector<Complex>{};
  }
  return out;
}

std::map<int, Complex> project_jl(Complex l, const FinElement& f, int k_max, int n,
                                  const NumericContext& ctx) {
  ComplexRing ring(ctx);
  BasicFin<ComplexRing> fc;
  for (const auto& [jk, c] : f.terms)
    fin_add_term(ring, fc, jk.first, jk.second, ring.from_exact(c));

  std::map<int, Complex> out;
  for (const auto& [k, e] : embed_il_fins(l, k_max, n, ctx)) {
    BasicFun<ComplexRing> p =
        fun_mul(ring, star_fun(ring, fun_of_fin(e)), fun_of_fin(fc));
    out[k] = nu_integral(ring, p.fin);
  }
  return out;
}

}  // namespace qdisc
