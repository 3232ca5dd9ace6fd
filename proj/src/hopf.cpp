#include "qdisc/hopf.hpp"

namespace qdisc {

namespace {

const ExactScalar kOne = ExactScalar::from_int(1);

// q - q^{-1}
ExactScalar q_minus_qinv() { return ExactScalar::spow(2) - ExactScalar::spow(-2); }

}  // namespace

void uq_add_term(UqElement& x, const UqMonomial& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.terms.erase(it);
  }
}

UqElement uq_monomial(const UqMonomial& m, const ExactScalar& c) {
  UqElement x;
  uq_add_term(x, m, c);
  return x;
}

UqElement uq_one() { return uq_monomial({0, 0, 0}, kOne); }
UqElement uq_gen_E() { return uq_monomial({0, 0, 1}, kOne); }
UqElement uq_gen_F() { return uq_monomial({1, 0, 0}, kOne); }
UqElement uq_gen_K(int b) { return uq_monomial({0, b, 0}, kOne); }

UqElement uq_add(const UqElement& x, const UqElement& y) {
  UqElement r = x;
  for (const auto& [m, c] : y.terms) uq_add_term(r, m, c);
  return r;
}

UqElement uq_sub(const UqElement& x, const UqElement& y) {
  UqElement r = x;
  for (const auto& [m, c] : y.terms) uq_add_term(r, m, -c);
  return r;
}

UqElement uq_scale(const UqElement& x, const ExactScalar& c) {
  UqElement r;
  for (const auto& [m, a] : x.terms) uq_add_term(r, m, a * c);
  return r;
}

namespace {

// E^c F straightened. Recursion:
//   E^c F = (E^{c-1} F) E + [q^{-2(c-1)} K - q^{2(c-1)} K^{-1}] E^{c-1} / (q - q^{-1})
UqElement epow_times_F(int c) {
  if (c == 0) return uq_gen_F();
  UqElement prev = epow_times_F(c - 1);
  UqElement r;
  for (const auto& [m, coef] : prev.terms)
    uq_add_term(r, {m.a, m.b, m.c + 1}, coef);
  ExactScalar inv = kOne / q_minus_qinv();
  uq_add_term(r, {0, 1, c - 1}, ExactScalar::spow(-4 * (c - 1)) * inv);
  uq_add_term(r, {0, -1, c - 1}, -(ExactScalar::spow(4 * (c - 1)) * inv));
  return r;
}

UqElement rmul_F(const UqElement& x) {
  UqElement r;
  for (const auto& [m, coef] : x.terms) {
    if (m.c == 0) {
      // F^a K^b F = q^{-2b} F^{a+1} K^b
      uq_add_term(r, {m.a + 1, m.b, 0}, coef * ExactScalar::spow(-4 * m.b));
      continue;
    }
    UqElement tail = epow_times_F(m.c);
    for (const auto& [t, tc] : tail.terms) {
      // F^a K^b . F^{t.a} K^{t.b} E^{t.c} = q^{-2 b t.a} F^{a+t.a} K^{b+t.b} E^{t.c}
      uq_add_term(r, {m.a + t.a, m.b + t.b, t.c},
                  coef * tc * ExactScalar::spow(-4 * m.b * t.a));
    }
  }
  return r;
}

UqElement rmul_Kpow(const UqElement& x, int b2) {
  if (b2 == 0) return x;
  UqElement r;
  for (const auto& [m, coef] : x.terms)
    // E^c K^{b2} = q^{-2 c b2} K^{b2} E^c
    uq_add_term(r, {m.a, m.b + b2, m.c}, coef * ExactScalar::spow(-4 * m.c * b2));
  return r;
}

UqElement rmul_E(const UqElement& x) {
  UqElement r;
  for (const auto& [m, coef] : x.terms) uq_add_term(r, {m.a, m.b, m.c + 1}, coef);
  return r;
}

}  // namespace

UqElement uq_mul(const UqElement& x, const UqElement& y) {
  UqElement out;
  for (const auto& [m2, c2] : y.terms) {
    UqElement cur = uq_scale(x, c2);
    for (int i = 0; i < m2.a; ++i) cur = rmul_F(cur);
    cur = rmul_Kpow(cur, m2.b);
    for (int i = 0; i < m2.c; ++i) cur = rmul_E(cur);
    out = uq_add(out, cur);
  }
  return out;
}

UqElement uq_pow(const UqElement& x, int n) {
  UqElement r = uq_one();
  for (int i = 0; i < n; ++i) r = uq_mul(r, x);
  return r;
}

TensorUq tensor_mul(const TensorUq& x, const TensorUq& y) {
  TensorUq out;
  for (const auto& [p1, c1] : x.terms) {
    for (const auto& [p2, c2] : y.terms) {
      UqElement left = uq_mul(uq_monomial(p1.first, kOne), uq_monomial(p2.first, kOne));
      UqElement right = uq_mul(uq_monomial(p1.second, kOne), uq_monomial(p2.second, kOne));
      ExactScalar c = c1 * c2;
      for (const auto& [lm, lc] : left.terms)
        for (const auto& [rm, rc] : right.terms) {
          auto key = std::make_pair(lm, rm);
          auto [it, inserted] = out.terms.try_emplace(key, c * lc * rc);
          if (!inserted) {
            it->second += c * lc * rc;
            if (it->second.is_zero()) out.terms.erase(it);
          }
        }
    }
  }
  return out;
}

namespace {

TensorUq tensor_of(const UqMonomial& l, const UqMonomial& r, const ExactScalar& c) {
  TensorUq t;
  t.terms[{l, r}] = c;
  return t;
}

TensorUq coproduct_gen(Gen g) {
  TensorUq t;
  switch (g) {
    case Gen::E:  // E x 1 + K x E
      t.terms[{{0, 0, 1}, {0, 0, 0}}] = kOne;
      t.terms[{{0, 1, 0}, {0, 0, 1}}] = kOne;
      break;
    case Gen::F:  // F x K^{-1} + 1 x F
      t.terms[{{1, 0, 0}, {0, -1, 0}}] = kOne;
      t.terms[{{0, 0, 0}, {1, 0, 0}}] = kOne;
      break;
    case Gen::K:
      t.terms[{{0, 1, 0}, {0, 1, 0}}] = kOne;
      break;
    case Gen::Kinv:
      t.terms[{{0, -1, 0}, {0, -1, 0}}] = kOne;
      break;
  }
  return t;
}

}  // namespace

TensorUq coproduct(const UqElement& x) {
  TensorUq out;
  for (const auto& [m, coef] : x.terms) {
    TensorUq cur = tensor_of({0, 0, 0}, {0, 0, 0}, coef);
    for (int i = 0; i < m.a; ++i) cur = tensor_mul(cur, coproduct_gen(Gen::F));
    Gen kg = m.b >= 0 ? Gen::K : Gen::Kinv;
    for (int i = 0; i < std::abs(m.b); ++i) cur = tensor_mul(cur, coproduct_gen(kg));
    for (int i = 0; i < m.c; ++i) cur = tensor_mul(cur, coproduct_gen(Gen::E));
    for (const auto& [p, c] : cur.terms) {
      auto [it, inserted] = out.terms.try_emplace(p, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

UqElement antipode(const UqElement& x) {
  // S(E) = -K^{-1}E, S(F) = -FK, S(K^b) = K^{-b}; S is an antihomomorphism.
  UqElement sE = uq_scale(uq_mul(uq_gen_K(-1), uq_gen_E()), -kOne);
  UqElement sF = uq_scale(uq_mul(uq_gen_F(), uq_gen_K(1)), -kOne);
  UqElement out;
  for (const auto& [m, coef] : x.terms) {
    UqElement cur = uq_scale(uq_pow(sE, m.c), coef);
    cur = uq_mul(cur, uq_gen_K(-m.b));
    cur = uq_mul(cur, uq_pow(sF, m.a));
    out = uq_add(out, cur);
  }
  return out;
}

ExactScalar counit(const UqElement& x) {
  ExactScalar e;
  for (const auto& [m, coef] : x.terms)
    if (m.a == 0 && m.c == 0) e += coef;
  return e;
}

std::pair<UqElement, ExactScalar> antipode_counit(const UqElement& x) {
  return {antipode(x), counit(x)};
}

UqElement star_uq(const UqElement& x) {
  // E* = -KF, F* = -E K^{-1}, K* = K; * is an antihomomorphism.
  UqElement sE = uq_scale(uq_mul(uq_gen_K(1), uq_gen_F()), -kOne);
  UqElement sF = uq_scale(uq_mul(uq_gen_E(), uq_gen_K(-1)), -kOne);
  UqElement out;
  for (const auto& [m, coef] : x.terms) {
    UqElement cur = uq_scale(uq_pow(sE, m.c), coef);
    cur = uq_mul(cur, uq_gen_K(m.b));
    cur = uq_mul(cur, uq_pow(sF, m.a));
    out = uq_add(out, cur);
  }
  return out;
}

UqElement casimir() {
  ExactScalar qinv_minus_q = ExactScalar::spow(-2) - ExactScalar::spow(2);
  ExactScalar d = kOne / (qinv_minus_q * qinv_minus_q);
  UqElement omega = uq_monomial({1, 0, 1}, kOne);
  uq_add_term(omega, {0, -1, 0}, ExactScalar::spow(-2) * d);
  uq_add_term(omega, {0, 1, 0}, ExactScalar::spow(2) * d);
  uq_add_term(omega, {0, 0, 0}, -((ExactScalar::spow(-2) + ExactScalar::spow(2)) * d));
  return omega;
}

}  // namespace qdisc
