// The Hopf *-algebra U_q sl2 in the PBW basis F^a K^b E^c: straightened
// multiplication, coproduct, counit, antipode, star, the Casimir element,
// and the covariant action on Pol(C)_q.

#pragma once

#include <compare>
#include <map>
#include <tuple>
#include <utility>

#include "qdisc/polalg.hpp"

namespace qdisc {

struct UqMonomial {
  int a = 0;  // F power, >= 0
  int b = 0;  // K power, any integer
  int c = 0;  // E power, >= 0
  auto operator<=>(const UqMonomial&) const = default;
};

struct UqElement {
  std::map<UqMonomial, ExactScalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const UqElement& o) const { return terms == o.terms; }
};

struct TensorUq {
  std::map<std::pair<UqMonomial, UqMonomial>, ExactScalar> terms;

  bool operator==(const TensorUq& o) const { return terms == o.terms; }
};

void uq_add_term(UqElement& x, const UqMonomial& m, const ExactScalar& c);

UqElement uq_monomial(const UqMonomial& m, const ExactScalar& c);
UqElement uq_one();
UqElement uq_gen_E();
UqElement uq_gen_F();
UqElement uq_gen_K(int b = 1);  // K^b

UqElement uq_add(const UqElement& x, const UqElement& y);
UqElement uq_sub(const UqElement& x, const UqElement& y);
UqElement uq_scale(const UqElement& x, const ExactScalar& c);
UqElement uq_mul(const UqElement& x, const UqElement& y);
UqElement uq_pow(const UqElement& x, int n);

TensorUq coproduct(const UqElement& x);
TensorUq tensor_mul(const TensorUq& x, const TensorUq& y);

UqElement antipode(const UqElement& x);
ExactScalar counit(const UqElement& x);
std::pair<UqElement, ExactScalar> antipode_counit(const UqElement& x);

// Antilinear antihomomorphism: E* = -KF, F* = -E K^{-1}, K* = K.
UqElement star_uq(const UqElement& x);

// The Casimir Omega = FE + (q^{-1}K^{-1} + qK - (q^{-1}+q)) / (q^{-1}-q)^2.
UqElement casimir();

// Generators, for composing actions one factor at a time.
enum class Gen { K, Kinv, E, F };

// Action of a generator on Pol(C)_q, extended from
//   K^{±1}z = q^{±2}z, Ez = -q^{1/2}z^2, Fz = q^{1/2},
//   K^{±1}z* = q^{∓2}z*, Ez* = q^{-3/2}, Fz* = -q^{5/2}z*^2
// by the twisted Leibniz rules E(fg) = (Ef)g + (Kf)(Eg),
// F(fg) = (Ff)(K^{-1}g) + f(Fg).
template <class R>
BasicPol<R> act_gen_pol(const R& ring, Gen g, const BasicPol<R>& f) {
  BasicPol<R> r;
  for (const auto& [jk, coef] : f.terms) {
    int j = jk.first, k = jk.second;
    switch (g) {
      case Gen::K:
        pol_add_term(ring, r, j, k, coef * ring.spow(4 * (j - k)));
        break;
      case Gen::Kinv:
        pol_add_term(ring, r, j, k, coef * ring.spow(-4 * (j - k)));
        break;
      case Gen::E: {
        // E(z^j z*^k) = -q^{1/2} (1-q^{2j})/(1-q^2) z^{j+1} z*^k
        //             + q^{2j} q^{-3/2} (1-q^{-2k})/(1-q^{-2}) z^j z*^{k-1}
        // (peel z factors, then z* factors; each step is one Leibniz split).
        typename R::Scalar cur = coef;
        for (int t = 0; t < j; ++t) {
          pol_add_term(ring, r, j + 1, k, cur * ring.spow(1) * ring.from_int(-1));
          cur = cur * ring.spow(4);
        }
        for (int t = 0; t < k; ++t) {
          pol_add_term(ring, r, j, k - 1, cur * ring.spow(-3));
          cur = cur * ring.spow(-4);
        }
        break;
      }
      case Gen::F: {
        typename R::Scalar cur = coef;
        for (int t = 0; t < j; ++t) {
          // (Fz) K^{-1}(z^{j-1-t} z*^k) picked off at position t.
          pol_add_term(ring, r, j - 1, k,
                       cur * ring.spow(1) * ring.spow(-4 * (j - 1 - t - k)));
        }
        for (int t = 0; t < k; ++t) {
          pol_add_term(ring, r, j, k + 1,
                       cur * ring.spow(5) * ring.spow(4 * (k - 1 - t)) * ring.from_int(-1));
        }
        break;
      }
    }
  }
  return r;
}

// Action of a full PBW element: a monomial F^a K^b E^c acts by composition,
// rightmost factor first.
template <class R>
BasicPol<R> act_pol(const R& ring, const UqElement& x, const BasicPol<R>& f) {
  BasicPol<R> out;
  for (const auto& [m, coef] : x.terms) {
    BasicPol<R> cur = f;
    for (int i = 0; i < m.c; ++i) cur = act_gen_pol(ring, Gen::E, cur);
    if (m.b != 0) {
      BasicPol<R> scaled;
      for (const auto& [jk, c] : cur.terms)
        pol_add_term(ring, scaled, jk.first, jk.second,
                     c * ring.spow(4 * m.b * (jk.first - jk.second)));
      cur = std::move(scaled);
    }
    for (int i = 0; i < m.a; ++i) cur = act_gen_pol(ring, Gen::F, cur);
    out = pol_add(ring, out, pol_scale(ring, cur, ring.from_exact(coef)));
  }
  return out;
}

}  // namespace qdisc
