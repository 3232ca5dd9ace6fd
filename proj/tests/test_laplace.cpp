#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qdisc/laplace.hpp"

using namespace qdisc;

namespace {

const ExactRing xring;
const ExactScalar kOne = ExactScalar::one();

ExactScalar q_pow(int n) { return ExactScalar::spow(2 * n); }

ExactScalar rand_coef(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> half(-2, 2);
  return ExactScalar::from_int(coef(rng)) * ExactScalar::spow(half(rng));
}

RadialX exact_delta(int m, int n) { return RadialX::delta(xring, m, n); }

double inf_norm(const std::vector<Complex>& v, int lo, int hi) {
  double r = 0.0;
  for (int i = lo; i < hi && i < static_cast<int>(v.size()); ++i)
    r = std::max(r, std::abs(v[i]));
  return r;
}

}  // namespace

TEST_CASE("q_diff basics") {
  // constants are killed away from the window edge
  RadialX c;
  c.values.assign(8, kOne);
  RadialX dc = q_diff(xring, c);
  CHECK(dc.parity == 1);
  for (int m = 1; m <= 6; ++m) CHECK(dc.values[m].is_zero());

  // delta at x = 1: value at t = q is 1/((q^{-1}-q) q)
  RadialX dd = q_diff(xring, exact_delta(0, 8));
  ExactScalar gap = q_pow(-1) - q_pow(1);
  CHECK(dd.values[0] == (gap * q_pow(1)).inverse());
  CHECK(dd.values[1] == -(q_pow(1) / gap));
  for (int m = 2; m < 8; ++m) CHECK(dd.values[m].is_zero());

  // f(t) = t differentiates to 1 on interior points
  RadialX t;
  for (int m = 0; m < 8; ++m) t.values.push_back(q_pow(-2 * m));
  RadialX dt = q_diff(xring, t);
  for (int m = 1; m < 8; ++m) CHECK(dt.values[m] == kOne);

  // parity discipline: D o D returns to the integer lattice
  CHECK(q_diff(xring, dt).parity == 0);
}

TEST_CASE("box0 on deltas") {
  ExactScalar one_minus_q2 = kOne - q_pow(2);
  RadialX b = box0(xring, exact_delta(0, 8));
  CHECK(b.parity == 0);
  CHECK(b.values[0] == -(one_minus_q2.inverse()));
  CHECK(b.values[1] == q_pow(2) / one_minus_q2);
  for (int m = 2; m < 8; ++m) CHECK(b.values[m].is_zero());

  // constants: zero on interior points
  RadialX c;
  c.values.assign(8, kOne);
  RadialX bc = box0(xring, c);
  for (int m = 1; m <= 5; ++m) CHECK(bc.values[m].is_zero());

  // delta_1 produces exactly three entries
  RadialX b1 = box0(xring, exact_delta(1, 8));
  int nonzero = 0;
  for (const auto& v : b1.values) nonzero += !v.is_zero();
  CHECK(nonzero == 3);
}

TEST_CASE("box0 matches the precomputed tridiagonal") {
  NumericContext ctx(0.5);
  int n = 10;
  TridiagOp op = neg_box0_tridiag(ctx, n);
  for (int col = 0; col < n - 1; ++col) {
    RadialX d = exact_delta(col, n);
    RadialX b = box0(xring, d);
    for (int row = 0; row < n; ++row) {
      double want = 0.0;
      if (row == col) want = -op.diag[row];
      if (row == col + 1) want = -op.sub[row];
      if (row + 1 == col) want = -op.super[row];
      CHECK(b.values[row].eval(ctx) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("casimir_radial is q box0") {
  ExactScalar gap = q_pow(-1) - q_pow(1);
  RadialX c = casimir_radial(xring, exact_delta(0, 6));
  CHECK(c.values[0] == -(gap.inverse()));
  CHECK(c.values[1] == q_pow(2) / gap);

  RadialX d2 = exact_delta(2, 8);
  RadialX lhs = casimir_radial(xring, d2);
  RadialX rhs = box0(xring, d2);
  for (size_t m = 0; m < rhs.values.size(); ++m)
    CHECK(lhs.values[m] == rhs.values[m] * q_pow(1));
}

TEST_CASE("dbar_radial") {
  RadialX c;
  c.values.assign(8, kOne);
  RadialX dc = dbar_radial(xring, c);
  for (int m = 0; m < 7; ++m) CHECK(dc.values[m].is_zero());

  // psi(y) = y on the lattice y = q^{2m}
  RadialX y;
  for (int m = 0; m < 8; ++m) y.values.push_back(q_pow(2 * m));
  RadialX dy = dbar_radial(xring, y);
  for (int m = 0; m < 7; ++m) CHECK(dy.values[m] == -kOne);

  RadialX dd = dbar_radial(xring, exact_delta(0, 8));
  int nonzero = 0;
  for (const auto& v : dd.values) nonzero += !v.is_zero();
  CHECK(nonzero == 1);  // only the m = 0 difference survives (ghost below is 0)
}

TEST_CASE("jackson integrals and norms") {
  RadialX d0 = exact_delta(0, 8);
  CHECK(q_integral(xring, d0, JacksonKind::Ray) == q_pow(-2) - kOne);
  CHECK(q_integral(xring, d0, JacksonKind::Line) == kOne - q_pow(2));

  RadialX zero;
  zero.values.assign(8, ExactScalar());
  CHECK(q_integral(xring, zero, JacksonKind::Ray).is_zero());
  CHECK(radial_norm_sq(xring, zero).is_zero());
  CHECK(radial_dbar_norm_sq(xring, zero).is_zero());

  CHECK(radial_norm_sq(xring, d0) == kOne - q_pow(2));

  // dbar_norm_sq(delta_0) agrees with the quadratic form <-box0 d0, d0>
  RadialX nb = box0(xring, d0);
  for (auto& v : nb.values) v = -v;
  CHECK(radial_dbar_norm_sq(xring, d0) == radial_inner(xring, nb, d0));
}

TEST_CASE("box0 is symmetric for the Jackson inner product") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pos(1, 8);
  int n = 16;
  for (int t = 0; t < 20; ++t) {
    RadialX u, v;
    u.values.assign(n, ExactScalar());
    v.values.assign(n, ExactScalar());
    for (int i = 0; i < 3; ++i) {
      u.values[pos(rng)] = rand_coef(rng);
      v.values[pos(rng)] = rand_coef(rng);
    }
    CHECK(radial_inner(xring, box0(xring, u), v) ==
          radial_inner(xring, u, box0(xring, v)));
  }
}

TEST_CASE("form equality (random interior psi)") {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> pos(0, 30);
  int n = 40;
  for (int t = 0; t < 50; ++t) {
    RadialX psi;
    psi.values.assign(n, ExactScalar());
    for (int i = 0; i < 5; ++i) psi.values[pos(rng)] = rand_coef(rng);
    RadialX nb = box0(xring, psi);
    for (auto& v : nb.values) v = -v;
    CHECK(radial_dbar_norm_sq(xring, psi) == radial_inner(xring, nb, psi));
  }
}

TEST_CASE("lambda_of_l") {
  NumericContext ctx(0.5);
  CHECK(std::abs(lambda_of_l(Complex(0.0), ctx)) < 1e-14);
  CHECK(std::abs(lambda_of_l(Complex(-1.0), ctx)) < 1e-14);
  CHECK(lambda_of_l(Complex(-0.5), ctx).real() == doctest::Approx(-4.0 / 9.0).epsilon(1e-12));
  CHECK(std::abs(lambda_of_l(Complex(-0.5), ctx).imag()) < 1e-14);

  std::mt19937 rng(33);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(-3.0, 3.0);
  double period = 2.0 * std::numbers::pi / ctx.h;
  for (int t = 0; t < 20; ++t) {
    Complex l(re(rng), im(rng));
    CHECK(std::abs(lambda_of_l(l, ctx) - lambda_of_l(-1.0 - l, ctx)) < 1e-12);
    CHECK(std::abs(lambda_of_l(l, ctx) - lambda_of_l(l + Complex(0, period), ctx)) < 1e-10);
  }
}

TEST_CASE("classify_l") {
  NumericContext ctx(0.5);
  double period = 2.0 * std::numbers::pi / ctx.h;

  SpectralParam p1 = classify_l(Complex(-0.25), ctx);
  CHECK(p1.zone == Zone::L1);
  CHECK(p1.l == Complex(-0.25, 0.0));

  SpectralParam p2 = classify_l(Complex(-0.5, std::numbers::pi / (2 * ctx.h)), ctx);
  CHECK(p2.zone == Zone::L2);

  SpectralParam p3 = classify_l(Complex(-0.75), ctx);
  CHECK(p3.zone == Zone::L1);
  CHECK(p3.l.real() == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(std::abs(lambda_of_l(p3.l, ctx) - lambda_of_l(Complex(-0.75), ctx)) < 1e-12);

  SpectralParam p4 = classify_l(Complex(-0.25, period / 2), ctx);
  CHECK(p4.zone == Zone::L3);

  // equivalences leave the representative unchanged
  SpectralParam p5 = classify_l(Complex(-0.25, 3 * period), ctx);
  CHECK(p5.zone == Zone::L1);
  CHECK(p5.l.real() == doctest::Approx(-0.25).epsilon(1e-12));

  CHECK(classify_l(Complex(1.5), ctx).zone == Zone::Other);
}

TEST_CASE("phi_l") {
  NumericContext ctx(0.5);

  RadialC one0 = phi_l(Complex(0.0), 16, ctx);
  RadialC one1 = phi_l(Complex(-1.0), 16, ctx);
  for (int m = 0; m < 16; ++m) {
    CHECK(std::abs(one0.values[m] - 1.0) < 1e-12);
    CHECK(std::abs(one1.values[m] - 1.0) < 1e-12);
  }

  int n = 64;
  Complex l(-0.5, 0.3);
  RadialC phi = phi_l(l, n, ctx);
  CHECK(std::abs(phi.values[0] - 1.0) == 0.0);

  // residual of (box0 - lambda) phi on rows defined by the recurrence
  ComplexRing cring(ctx);
  RadialC b = box0(cring, phi);
  Complex lam = lambda_of_l(l, ctx);
  std::vector<Complex> res(n);
  for (int m = 0; m < n; ++m) res[m] = b.values[m] - lam * phi.values[m];
  CHECK(inf_norm(res, 0, n - 1) < 1e-10);
}

TEST_CASE("spectrum") {
  NumericContext ctx(0.5);

  SpectrumResult r200 = spectrum(200, ctx);
  for (double e : r200.eigenvalues) CHECK(e > 0.0);
  double wsum = 0.0;
  for (double w : r200.weights) wsum += w;
  CHECK(wsum == doctest::Approx(1.0 - 0.25).epsilon(1e-10));

  SpectrumResult r400 = spectrum(400, ctx);
  CHECK(std::abs(r400.c1 - 4.0 / 9.0) < 0.01);
  CHECK(std::abs(r400.c2 - 4.0) < 0.01);
  // spectral containment of the truncation
  CHECK(r400.c2 < 1.0 / ((1.0 - 0.5) * (1.0 - 0.5)) + 1e-6);
  // eigenvalues come out sorted
  for (size_t i = 1; i < r400.eigenvalues.size(); ++i)
    CHECK(r400.eigenvalues[i] >= r400.eigenvalues[i - 1]);
}

TEST_CASE("transform_u") {
  NumericContext ctx(0.5);
  std::vector<Complex> samples;
  for (int i = 0; i < 8; ++i)
    samples.push_back(Complex(-0.5, 0.2 + 0.3 * i));

  RadialD d0;
  d0.values.assign(16, 0.0);
  d0.values[0] = 1.0;
  for (Complex v : transform_u(d0, samples, 32, ctx))
    CHECK(std::abs(v - Complex(0.75)) < 1e-12);

  RadialD zero;
  zero.values.assign(16, 0.0);
  for (Complex v : transform_u(zero, samples, 32, ctx)) CHECK(std::abs(v) == 0.0);

  // diagonalization: u(box0 f) = lambda(l) u(f) for interior-supported f
  std::mt19937 rng(34);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  RealRing rring(ctx);
  RadialD f;
  f.values.assign(16, 0.0);
  for (int m = 2; m <= 6; ++m) f.values[m] = coef(rng);
  RadialD bf = box0(rring, f);
  auto ubf = transform_u(bf, samples, 32, ctx);
  auto uf = transform_u(f, samples, 32, ctx);
  for (size_t i = 0; i < samples.size(); ++i)
    CHECK(std::abs(ubf[i] - lambda_of_l(samples[i], ctx) * uf[i]) < 1e-8);
}

TEST_CASE("vl_action") {
  NumericContext ctx(0.5);
  VlModule mod{Complex(-0.5, 0.7), -25, 25};

  auto h = vl_action(mod, VlGen::H, 3, ctx);
  REQUIRE(h.size() == 1);
  CHECK(h[0].first == 3);
  CHECK(h[0].second == Complex(6.0));

  auto xp = vl_action(mod, VlGen::Xplus, 0, ctx);
  REQUIRE(xp.size() == 1);
  CHECK(xp[0].first == 1);
  Complex want = -std::sinh(mod.l * (ctx.h / 2)) / std::sinh(Complex(ctx.h / 2));
  CHECK(std::abs(xp[0].second - want) < 1e-14);

  // Omega e_k = sh(lh/2) sh((l+1)h/2)/sh^2(h/2) e_k
  std::mt19937 rng(35);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-2.0, 2.0);
  for (int t = 0; t < 10; ++t) {
    VlModule m2{Complex(re(rng), im(rng)), -25, 25};
    Complex ev = std::sinh(m2.l * (ctx.h / 2)) * std::sinh((m2.l + 1.0) * (ctx.h / 2)) /
                 std::pow(std::sinh(Complex(ctx.h / 2)), 2);
    for (int k = -20; k <= 20; ++k) {
      auto om = vl_action(m2, VlGen::Omega, k, ctx);
      REQUIRE(om.size() == 1);
      CHECK(om[0].first == k);
      // relative to the size of the cancelling terms (sinh blows up in k)
      double scale = 1.0 + std::abs(std::sinh(Complex(k * ctx.h / 2)) *
                                    std::sinh(Complex((k + 1) * ctx.h / 2))) /
                               std::norm(std::sinh(Complex(ctx.h / 2)));
      CHECK(std::abs(om[0].second - ev) < 1e-12 * scale);
    }
  }

  // [X+,X-] e_k = (sh(kh)/sh(h/2)) e_k on interior k
  for (int k = -10; k <= 10; ++k) {
    auto down = vl_action(mod, VlGen::Xminus, k, ctx);
    auto up_after = vl_action(mod, VlGen::Xplus, k - 1, ctx);
    auto up = vl_action(mod, VlGen::Xplus, k, ctx);
    auto down_after = vl_action(mod, VlGen::Xminus, k + 1, ctx);
    Complex comm = up_after[0].second * down[0].second;  // X+ X- e_k
    comm = down_after[0].second * up[0].second - comm;   // -> [X-, X+]? no: see below
    // X- X+ - X+ X- = -[X+,X-]
    Complex wantc = -std::sinh(Complex(k * ctx.h)) / std::sinh(Complex(ctx.h / 2));
    CHECK(std::abs(comm - wantc) < 1e-12 * (1.0 + std::abs(wantc)));
  }

  CHECK_THROWS_AS(vl_action(mod, VlGen::Xplus, 25, ctx), BoundaryIndex);
  CHECK_THROWS_AS(vl_action(mod, VlGen::Xminus, -25, ctx), BoundaryIndex);
}

TEST_CASE("embed_il") {
  NumericContext ctx(0.5);
  Complex l(-0.5, 0.6);
  int n = 24, k_max = 3;

  auto layers = embed_il(l, k_max, n, ctx);
  RadialC phi = phi_l(l, n, ctx);

  // e_0 embeds to Phi_l
  REQUIRE(layers.count(0) == 1);
  for (int m = 0; m < n; ++m) CHECK(std::abs(layers[0][m] - phi.values[m]) < 1e-12);

  // layer grading: embed_il[k] lives in layer k only
  ComplexRing cring(ctx);
  auto fins = embed_il_fins(l, k_max, n, ctx);
  for (const auto& [k, fin] : fins) {
    for (const auto& [jk, c] : fin.terms) CHECK(jk.first - jk.second == k);
    CHECK(layers.count(k) == 1);
  }

  // Casimir eigenvalue on every embedded vector (interior lattice points)
  Complex ev = omega_of_l(l, ctx);
  UqElement omega = casimir();
  for (const auto& [k, fin] : fins) {
    BasicFun<ComplexRing> acted = act_fun(cring, omega, fun_of_fin(fin));
    CHECK(acted.pol.is_zero());
    auto got = radial_decompose(cring, acted);
    REQUIRE(got.count(k) == 1);
    auto want = radial_decompose(cring, fun_of_fin(fin));
    std::vector<Complex> res;
    int interior = n - std::abs(k) - 2;
    for (int m = 0; m < interior; ++m) {
      Complex g = m < static_cast<int>(got[k].size()) ? got[k][m] : 0.0;
      Complex w = m < static_cast<int>(want[k].size()) ? want[k][m] : 0.0;
      res.push_back(g - ev * w);
    }
    CHECK(inf_norm(res, 0, interior) < 1e-8);
  }

  // integer l degenerates the ladder
  CHECK_THROWS_AS(embed_il(Complex(1.0), 2, 16, ctx), DegenerateParameter);
}

TEST_CASE("project_jl") {
  NumericContext ctx(0.5);
  Complex l(-0.5, 0.45);
  ExactRing ring;
  int n = 24, k_max = 3;

  FinElement f0 = fin_monomial(ring, 0, 0, kOne);
  auto coeffs = project_jl(l, f0, k_max, n, ctx);
  CHECK(std::abs(coeffs[0] - Complex(0.75)) < 1e-12);
  for (const auto& [k, c] : coeffs)
    if (k != 0) CHECK(std::abs(c) < 1e-14);

  // intertwining: project_jl(Omega f) = omega(l) project_jl(f) (real on L2)
  std::mt19937 rng(36);
  std::uniform_int_distribution<int> e(0, 4);
  Complex ev = omega_of_l(l, ctx);
  for (int t = 0; t < 5; ++t) {
    FinElement f;
    for (int i = 0; i < 3; ++i) fin_add_term(ring, f, e(rng), e(rng), rand_coef(rng));
    FunElement of = act_fun(ring, casimir(), fun_of_fin(f));
    auto pf = project_jl(l, f, k_max, n, ctx);
    auto pof = project_jl(l, of.fin, k_max, n, ctx);
    for (int k = -k_max; k <= k_max; ++k)
      CHECK(std::abs(pof[k] - ev * pf[k]) < 1e-8);
  }
}
