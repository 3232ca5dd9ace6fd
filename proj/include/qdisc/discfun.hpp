// The covariant *-algebra Fun(U)_q = Pol(C)_q + D(U)_q with generators
// z, z*, f0 and relations
//   z*z = q^2 zz* + 1 - q^2;  z* f0 = f0 z = 0;  f0 f0 = f0.
// Finite functions are sparse maps (j,k) -> coefficient over the basis
// z^j f0 z*^k. Also: the matrix model T, the U_q sl2 action, radial
// decomposition, and the invariant integrals eta and nu.

#pragma once

#include <map>
#include <vector>

#include "qdisc/hopf.hpp"

namespace qdisc {

struct CutoffTooSmall : std::runtime_error {
  CutoffTooSmall() : std::runtime_error("matrix cutoff is smaller than element support") {}
};

template <class R>
struct BasicFin {
  using Scalar = typename R::Scalar;
  std::map<std::pair<int, int>, Scalar> terms;  // (j,k) -> a_jk, element z^j f0 z*^k

  bool is_zero() const { return terms.empty(); }
  bool operator==(const BasicFin& o) const { return terms == o.terms; }
};

template <class R>
struct BasicFun {
  BasicPol<R> pol;
  BasicFin<R> fin;

  bool is_zero() const { return pol.is_zero() && fin.is_zero(); }
  bool operator==(const BasicFun& o) const { return pol == o.pol && fin == o.fin; }
};

template <class R>
void fin_add_term(const R& ring, BasicFin<R>& f, int j, int k, typename R::Scalar c) {
  if (ring.is_zero(c)) return;
  auto [it, inserted] = f.terms.try_emplace({j, k}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (ring.is_zero(it->second)) f.terms.erase(it);
  }
}

template <class R>
BasicFin<R> fin_monomial(const R& ring, int j, int k, typename R::Scalar c) {
  BasicFin<R> f;
  fin_add_term(ring, f, j, k, std::move(c));
  return f;
}

template <class R>
BasicFin<R> fin_add(const R& ring, const BasicFin<R>& f, const BasicFin<R>& g) {
  BasicFin<R> r = f;
  for (const auto& [jk, c] : g.terms) fin_add_term(ring, r, jk.first, jk.second, c);
  return r;
}

template <class R>
BasicFin<R> fin_scale(const R& ring, const BasicFin<R>& f, const typename R::Scalar& c) {
  BasicFin<R> r;
  for (const auto& [jk, a] : f.terms) fin_add_term(ring, r, jk.first, jk.second, a * c);
  return r;
}

template <class R>
BasicFin<R> fin_sub(const R& ring, const BasicFin<R>& f, const BasicFin<R>& g) {
  return fin_add(ring, f, fin_scale(ring, g, ring.from_int(-1)));
}

template <class R>
BasicFun<R> fun_of_pol(BasicPol<R> p) {
  BasicFun<R> f;
  f.pol = std::move(p);
  return f;
}

template <class R>
BasicFun<R> fun_of_fin(BasicFin<R> p) {
  BasicFun<R> f;
  f.fin = std::move(p);
  return f;
}

template <class R>
BasicFun<R> fun_f0(const R& ring) {
  return fun_of_fin(fin_monomial(ring, 0, 0, ring.from_int(1)));
}

template <class R>
BasicFun<R> fun_add(const R& ring, const BasicFun<R>& f, const BasicFun<R>& g) {
  BasicFun<R> r;
  r.pol = pol_add(ring, f.pol, g.pol);
  r.fin = fin_add(ring, f.fin, g.fin);
  return r;
}

template <class R>
BasicFun<R> fun_scale(const R& ring, const BasicFun<R>& f, const typename R::Scalar& c) {
  BasicFun<R> r;
  r.pol = pol_scale(ring, f.pol, c);
  r.fin = fin_scale(ring, f.fin, c);
  return r;
}

template <class R>
BasicFun<R> fun_sub(const R& ring, const BasicFun<R>& f, const BasicFun<R>& g) {
  return fun_add(ring, f, fun_scale(ring, g, ring.from_int(-1)));
}

// prod_{i=1..m} (1 - q^{2i})
template <class R>
typename R::Scalar weight_prod(const R& ring, int m) {
  typename R::Scalar w = ring.from_int(1);
  for (int i = 1; i <= m; ++i) w = w * (ring.from_int(1) - ring.spow(4 * i));
  return w;
}

// --- multiplication -------------------------------------------------------

// z^u z*^v . (z^j f0 z*^k): apply z* from the left v times, then z u times.
// Left rules: z*.(j,k) = (1-q^{2j})(j-1,k) [zero at j=0], z.(j,k) = (j+1,k).
template <class R>
BasicFin<R> fin_left_mul_monomial(const R& ring, int u, int v, const BasicFin<R>& f) {
  BasicFin<R> cur = f;
  for (int step = 0; step < v; ++step) {
    BasicFin<R> next;
    for (const auto& [jk, c] : cur.terms)
      if (jk.first > 0)
        fin_add_term(ring, next, jk.first - 1, jk.second,
                     c * (ring.from_int(1) - ring.spow(4 * jk.first)));
    cur = std::move(next);
  }
  if (u > 0) {
    BasicFin<R> next;
    for (const auto& [jk, c] : cur.terms) fin_add_term(ring, next, jk.first + u, jk.second, c);
    cur = std::move(next);
  }
  return cur;
}

// (z^j f0 z*^k) . z^u z*^v: apply z from the right u times, then z* v times.
// Right rules: (j,k).z = (1-q^{2k})(j,k-1) [zero at k=0], (j,k).z* = (j,k+1).
template <class R>
BasicFin<R> fin_right_mul_monomial(const R& ring, const BasicFin<R>& f, int u, int v) {
  BasicFin<R> cur = f;
  for (int step = 0; step < u; ++step) {
    BasicFin<R> next;
    for (const auto& [jk, c] : cur.terms)
      if (jk.second > 0)
        fin_add_term(ring, next, jk.first, jk.second - 1,
                     c * (ring.from_int(1) - ring.spow(4 * jk.second)));
    cur = std::move(next);
  }
  if (v > 0) {
    BasicFin<R> next;
    for (const auto& [jk, c] : cur.terms) fin_add_term(ring, next, jk.first, jk.second + v, c);
    cur = std::move(next);
  }
  return cur;
}

template <class R>
BasicFun<R> fun_mul(const R& ring, const BasicFun<R>& f, const BasicFun<R>& g) {
  BasicFun<R> r;
  r.pol = normal_mul(ring, f.pol, g.pol);
  for (const auto& [uv, c] : f.pol.terms) {
    BasicFin<R> part = fin_left_mul_monomial(ring, uv.first, uv.second, g.fin);
    r.fin = fin_add(ring, r.fin, fin_scale(ring, part, c));
  }
  for (const auto& [uv, c] : g.pol.terms) {
    BasicFin<R> part = fin_right_mul_monomial(ring, f.fin, uv.first, uv.second);
    r.fin = fin_add(ring, r.fin, fin_scale(ring, part, c));
  }
  // (z^j f0 z*^k)(z^j' f0 z*^k') = delta_{k,j'} prod_{i=1..k}(1-q^{2i}) z^j f0 z*^k'
  for (const auto& [jk1, c1] : f.fin.terms)
    for (const auto& [jk2, c2] : g.fin.terms)
      if (jk1.second == jk2.first)
        fin_add_term(ring, r.fin, jk1.first, jk2.second,
                     c1 * c2 * weight_prod(ring, jk1.second));
  return r;
}

// Antimultiplicative involution: (z^j f0 z*^k)* = z^k f0 z*^j.
template <class R>
BasicFun<R> star_fun(const R& ring, const BasicFun<R>& f) {
  BasicFun<R> r;
  r.pol = star_pol(ring, f.pol);
  for (const auto& [jk, c] : f.fin.terms)
    fin_add_term(ring, r.fin, jk.second, jk.first, ring.conj(c));
  return r;
}

// --- matrix model ----------------------------------------------------------

// The exact (non-symmetric) model on basis e_0..e_{N-1}:
//   z e_n = (1 - q^{2(n+1)}) e_{n+1},  z* e_n = e_{n-1},  f0 = matrix unit (0,0).
template <class R>
struct BasicMatrix {
  int cutoff = 0;
  std::map<std::pair<int, int>, typename R::Scalar> entries;  // (row, col)
  bool truncated = false;
};

template <class R>
BasicMatrix<R> to_matrix(const R& ring, const BasicFun<R>& f, int cutoff) {
  BasicMatrix<R> m;
  m.cutoff = cutoff;
  auto add = [&](int row, int col, typename R::Scalar c) {
    if (ring.is_zero(c)) return;
    auto [it, inserted] = m.entries.try_emplace({row, col}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring.is_zero(it->second)) m.entries.erase(it);
    }
  };
  for (const auto& [jk, c] : f.pol.terms) {
    int j = jk.first, k = jk.second;
    for (int n = k; n < cutoff; ++n) {
      int target = n - k + j;
      if (target >= cutoff) {
        m.truncated = true;
        continue;
      }
      typename R::Scalar w = c;
      for (int i = n - k + 1; i <= n - k + j; ++i)
        w = w * (ring.from_int(1) - ring.spow(4 * i));
      add(target, n, w);
    }
  }
  for (const auto& [jk, c] : f.fin.terms) {
    if (jk.first >= cutoff || jk.second >= cutoff) {
      m.truncated = true;
      continue;
    }
    add(jk.first, jk.second, c * weight_prod(ring, jk.first));
  }
  return m;
}

template <class R>
BasicMatrix<R> matrix_mul(const R& ring, const BasicMatrix<R>& a, const BasicMatrix<R>& b) {
  BasicMatrix<R> m;
  m.cutoff = a.cutoff;
  m.truncated = a.truncated || b.truncated;
  for (const auto& [rc1, c1] : a.entries)
    for (const auto& [rc2, c2] : b.entries) {
      if (rc1.second != rc2.first) continue;
      auto key = std::make_pair(rc1.first, rc2.second);
      auto [it, inserted] = m.entries.try_emplace(key, c1 * c2);
      if (!inserted) {
        it->second = it->second + c1 * c2;
        if (ring.is_zero(it->second)) m.entries.erase(it);
      }
    }
  return m;
}

// --- the U_q sl2 action -----------------------------------------------------

// Generator values on f0 (the ladder formulas, converted to
// E = X^+ K^{1/2}, F = K^{-1/2} X^- on graded vectors):
//   K^{±1} f0 = f0,
//   E f0 = -(q^{1/2}/(1-q^2)) z f0,
//   F f0 = -(q^{5/2}/(1-q^2)) f0 z*.
template <class R>
BasicFin<R> act_gen_fin(const R& ring, Gen g, const BasicFin<R>& f) {
  BasicFin<R> r;
  const typename R::Scalar one = ring.from_int(1);
  const typename R::Scalar one_minus_q2 = one - ring.spow(4);
  for (const auto& [jk, coef] : f.terms) {
    int j = jk.first, k = jk.second;
    switch (g) {
      case Gen::K:
        fin_add_term(ring, r, j, k, coef * ring.spow(4 * (j - k)));
        break;
      case Gen::Kinv:
        fin_add_term(ring, r, j, k, coef * ring.spow(-4 * (j - k)));
        break;
      case Gen::E: {
        typename R::Scalar cur = coef;
        for (int t = 0; t < j; ++t) {
          fin_add_term(ring, r, j + 1, k, cur * ring.spow(1) * ring.from_int(-1));
          cur = cur * ring.spow(4);
        }
        // (E f0) z*^k, prefixed by z^j
        fin_add_term(ring, r, j + 1, k,
                     cur * ring.spow(1) * ring.from_int(-1) / one_minus_q2);
        // f0 E(z*^k)
        for (int t = 0; t < k; ++t) {
          fin_add_term(ring, r, j, k - 1, cur * ring.spow(-3));
          cur = cur * ring.spow(-4);
        }
        break;
      }
      case Gen::F: {
        typename R::Scalar cur = coef;
        for (int t = 0; t < j; ++t)
          fin_add_term(ring, r, j - 1, k,
                       cur * ring.spow(1) * ring.spow(-4 * (j - 1 - t - k)));
        // (F f0)(K^{-1} z*^k) = -(q^{5/2}/(1-q^2)) q^{2k} f0 z*^{k+1}
        fin_add_term(ring, r, j, k + 1,
                     cur * ring.spow(5) * ring.spow(4 * k) * ring.from_int(-1) / one_minus_q2);
        // f0 F(z*^k)
        for (int t = 0; t < k; ++t)
          fin_add_term(ring, r, j, k + 1,
                       cur * ring.spow(5) * ring.spow(4 * (k - 1 - t)) * ring.from_int(-1));
        break;
      }
    }
  }
  return r;
}

template <class R>
BasicFun<R> act_gen_fun(const R& ring, Gen g, const BasicFun<R>& f) {
  BasicFun<R> r;
  r.pol = act_gen_pol(ring, g, f.pol);
  r.fin = act_gen_fin(ring, g, f.fin);
  return r;
}

template <class R>
BasicFun<R> act_fun(const R& ring, const UqElement& x, const BasicFun<R>& f) {
  BasicFun<R> out;
  for (const auto& [m, coef] : x.terms) {
    BasicFun<R> cur = f;
    for (int i = 0; i < m.c; ++i) cur = act_gen_fun(ring, Gen::E, cur);
    if (m.b != 0) {
      Gen kg = m.b > 0 ? Gen::K : Gen::Kinv;
      for (int i = 0; i < std::abs(m.b); ++i) cur = act_gen_fun(ring, kg, cur);
    }
    for (int i = 0; i < m.a; ++i) cur = act_gen_fun(ring, Gen::F, cur);
    out = fun_add(ring, out, fun_scale(ring, cur, ring.from_exact(coef)));
  }
  return out;
}

// --- radial decomposition ---------------------------------------------------

// Layer l = j - k; the layer-l radial profile at lattice point y = q^{2m}
// (equivalently x = q^{-2m}) is psi_l[m] = a_{(m+l,m) or (m,m-l)} *
// prod_{i=1..m}(1-q^{2i}), matching the diagonal values of the matrix model.
template <class R>
std::map<int, std::vector<typename R::Scalar>> radial_decompose(const R& ring,
                                                                const BasicFun<R>& f) {
  std::map<int, std::vector<typename R::Scalar>> layers;
  for (const auto& [jk, c] : f.fin.terms) {
    int l = jk.first - jk.second;
    int m = std::min(jk.first, jk.second);
    auto& v = layers[l];
    if (static_cast<int>(v.size()) <= m) v.resize(m + 1, ring.from_int(0));
    v[m] = v[m] + c * weight_prod(ring, m);
  }
  return layers;
}

// Inverse: a layer-l profile back to a finite element.
template <class R>
BasicFin<R> radial_compose(const R& ring, int layer,
                           const std::vector<typename R::Scalar>& psi) {
  BasicFin<R> f;
  for (int m = 0; m < static_cast<int>(psi.size()); ++m) {
    if (ring.is_zero(psi[m])) continue;
    int j = layer >= 0 ? m + layer : m;
    int k = layer >= 0 ? m : m - layer;
    fin_add_term(ring, f, j, k, psi[m] / weight_prod(ring, m));
  }
  return f;
}

// --- invariant integrals ----------------------------------------------------

// eta(z^j f0 z*^k) = delta_{jk} q^{-2k} prod_{i=1..k}(1-q^{2i});
// the closed form of tr(T~(f) Gamma~(K^{-1})).
template <class R>
typename R::Scalar eta(const R& ring, const BasicFin<R>& f) {
  typename R::Scalar v = ring.from_int(0);
  for (const auto& [jk, c] : f.terms)
    if (jk.first == jk.second)
      v = v + c * ring.spow(-4 * jk.second) * weight_prod(ring, jk.second);
  return v;
}

// nu(f) = (1-q^2) sum_m psi_0(q^{2m}) q^{-2m}, over the layer-0 profile.
template <class R>
typename R::Scalar nu_integral(const R& ring, const BasicFin<R>& f) {
  auto layers = radial_decompose(ring, fun_of_fin(f));
  typename R::Scalar v = ring.from_int(0);
  auto it = layers.find(0);
  if (it == layers.end()) return v;
  for (int m = 0; m < static_cast<int>(it->second.size()); ++m)
    v = v + it->second[m] * ring.spow(-4 * m);
  return (ring.from_int(1) - ring.spow(4)) * v;
}

// (f1, f2) = integral of f2* f1 d nu.
template <class R>
typename R::Scalar scalar_product(const R& ring, const BasicFin<R>& f1,
                                  const BasicFin<R>& f2) {
  BasicFun<R> p = fun_mul(ring, star_fun(ring, fun_of_fin(f2)), fun_of_fin(f1));
  return nu_integral(ring, p.fin);
}

// --- generation of D(U)_q by f0 (exact) ------------------------------------

struct SpanReport {
  bool generated = false;
  int achieved_rank = 0;
  int target_dim = 0;
  int vectors_used = 0;
};

// True iff the exact span of {act_fun(F^a K^b E^c, f0) : a+|b|+c <= maxlen}
// contains every basis element z^i f0 z*^j with i,j <= m.
SpanReport span_check(int m, int maxlen);

using FinElement = BasicFin<ExactRing>;
using FunElement = BasicFun<ExactRing>;
using MatrixModel = BasicMatrix<ExactRing>;

}  // namespace qdisc
