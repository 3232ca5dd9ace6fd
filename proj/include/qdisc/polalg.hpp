// The covariant algebra Pol(C)_q: normal-ordered noncommutative polynomials
// in z, z* subject to z*z = q^2 zz* + 1 - q^2. Elements are sparse maps
// (j,k) -> coefficient, meaning sum a_jk z^j z*^k with all z factors to the
// left of all z* factors.

#pragma once

#include <map>
#include <utility>

#include "qdisc/rings.hpp"

namespace qdisc {

template <class R>
struct BasicPol {
  using Scalar = typename R::Scalar;
  std::map<std::pair<int, int>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const BasicPol& o) const { return terms == o.terms; }
};

// deg(z^j z*^k) = 2(j-k): the K^{-1}-eigenvalue is q^{-deg}.
inline int pol_degree(int j, int k) { return 2 * (j - k); }

template <class R>
void pol_add_term(const R& ring, BasicPol<R>& f, int j, int k, typename R::Scalar c) {
  if (ring.is_zero(c)) return;
  auto [it, inserted] = f.terms.try_emplace({j, k}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (ring.is_zero(it->second)) f.terms.erase(it);
  }
}

template <class R>
BasicPol<R> pol_monomial(const R& ring, int j, int k, typename R::Scalar c) {
  BasicPol<R> f;
  pol_add_term(ring, f, j, k, std::move(c));
  return f;
}

template <class R>
BasicPol<R> pol_one(const R& ring) {
  return pol_monomial(ring, 0, 0, ring.from_int(1));
}

template <class R>
BasicPol<R> pol_z(const R& ring) {
  return pol_monomial(ring, 1, 0, ring.from_int(1));
}

template <class R>
BasicPol<R> pol_zstar(const R& ring) {
  return pol_monomial(ring, 0, 1, ring.from_int(1));
}

template <class R>
BasicPol<R> pol_add(const R& ring, const BasicPol<R>& f, const BasicPol<R>& g) {
  BasicPol<R> r = f;
  for (const auto& [jk, c] : g.terms) pol_add_term(ring, r, jk.first, jk.second, c);
  return r;
}

template <class R>
BasicPol<R> pol_scale(const R& ring, const BasicPol<R>& f, const typename R::Scalar& c) {
  BasicPol<R> r;
  for (const auto& [jk, a] : f.terms) pol_add_term(ring, r, jk.first, jk.second, a * c);
  return r;
}

template <class R>
BasicPol<R> pol_neg(const R& ring, const BasicPol<R>& f) {
  return pol_scale(ring, f, ring.from_int(-1));
}

template <class R>
BasicPol<R> pol_sub(const R& ring, const BasicPol<R>& f, const BasicPol<R>& g) {
  return pol_add(ring, f, pol_neg(ring, g));
}

// Normal-ordered expansion of z*^k z^j. Built by left-multiplying z^j by z*
// k times with the single rewrite z* z^u = q^{2u} z^u z* + (1-q^{2u}) z^{u-1},
// which is the defining relation iterated.
template <class R>
BasicPol<R> pol_star_z_pow(const R& ring, int k, int j) {
  BasicPol<R> cur = pol_monomial(ring, j, 0, ring.from_int(1));
  for (int step = 0; step < k; ++step) {
    BasicPol<R> next;
    for (const auto& [jk, c] : cur.terms) {
      int u = jk.first, v = jk.second;
      if (u > 0) {
        pol_add_term(ring, next, u, v + 1, c * ring.spow(4 * u));
        pol_add_term(ring, next, u - 1, v,
                     c * (ring.from_int(1) - ring.spow(4 * u)));
      } else {
        pol_add_term(ring, next, 0, v + 1, c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

template <class R>
BasicPol<R> normal_mul(const R& ring, const BasicPol<R>& f, const BasicPol<R>& g) {
  BasicPol<R> r;
  for (const auto& [jk1, c1] : f.terms) {
    for (const auto& [jk2, c2] : g.terms) {
      typename R::Scalar c = c1 * c2;
      if (jk1.second == 0 || jk2.first == 0) {
        pol_add_term(ring, r, jk1.first + jk2.first, jk1.second + jk2.second, c);
        continue;
      }
      BasicPol<R> mid = pol_star_z_pow(ring, jk1.second, jk2.first);
      for (const auto& [uv, cm] : mid.terms)
        pol_add_term(ring, r, jk1.first + uv.first, uv.second + jk2.second, c * cm);
    }
  }
  return r;
}

// Antilinear antihomomorphism with z <-> z*; on a normal-ordered monomial
// (z^j z*^k)* = z^k z*^j, which is already normal-ordered.
template <class R>
BasicPol<R> star_pol(const R& ring, const BasicPol<R>& f) {
  BasicPol<R> r;
  for (const auto& [jk, c] : f.terms)
    pol_add_term(ring, r, jk.second, jk.first, ring.conj(c));
  return r;
}

// Normal-ordered expansion of y^n, y = 1 - zz*.
template <class R>
BasicPol<R> y_expand(const R& ring, int n) {
  BasicPol<R> y = pol_one(ring);
  pol_add_term(ring, y, 1, 1, ring.from_int(-1));
  BasicPol<R> r = pol_one(ring);
  for (int i = 0; i < n; ++i) r = normal_mul(ring, r, y);
  return r;
}

using PolElement = BasicPol<ExactRing>;

}  // namespace qdisc
