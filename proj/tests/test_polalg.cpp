#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdisc/polalg.hpp"

using namespace qdisc;

namespace {

const ExactRing ring;

ExactScalar q_pow(int n) { return ExactScalar::spow(2 * n); }

PolElement random_pol(std::mt19937& rng, int deg = 4, int terms = 3) {
  std::uniform_int_distribution<int> e(0, deg);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> half(-3, 3);
  PolElement f;
  for (int t = 0; t < terms; ++t)
    pol_add_term(ring, f, e(rng), e(rng),
                 ExactScalar::from_int(coef(rng)) * ExactScalar::spow(half(rng)));
  return f;
}

}  // namespace

TEST_CASE("defining relation") {
  PolElement got = normal_mul(ring, pol_zstar(ring), pol_z(ring));
  PolElement want;
  pol_add_term(ring, want, 1, 1, q_pow(2));
  pol_add_term(ring, want, 0, 0, ExactScalar::one() - q_pow(2));
  CHECK(got == want);
}

TEST_CASE("unit") {
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    PolElement f = random_pol(rng);
    CHECK(normal_mul(ring, pol_one(ring), f) == f);
    CHECK(normal_mul(ring, f, pol_one(ring)) == f);
  }
}

TEST_CASE("z* z^2 straightened") {
  PolElement z2 = pol_monomial(ring, 2, 0, ExactScalar::one());
  PolElement got = normal_mul(ring, pol_zstar(ring), z2);
  PolElement want;
  pol_add_term(ring, want, 2, 1, q_pow(4));
  pol_add_term(ring, want, 1, 0, ExactScalar::one() - q_pow(4));
  CHECK(got == want);
}

TEST_CASE("star on generators and monomials") {
  CHECK(star_pol(ring, pol_z(ring)) == pol_zstar(ring));

  PolElement zzstar = pol_monomial(ring, 1, 1, ExactScalar::one());
  CHECK(star_pol(ring, zzstar) == zzstar);

  std::mt19937 rng(2);
  for (int t = 0; t < 50; ++t) {
    PolElement f = random_pol(rng);
    CHECK(star_pol(ring, star_pol(ring, f)) == f);
  }
}

TEST_CASE("star is antimultiplicative") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    PolElement f = random_pol(rng), g = random_pol(rng);
    PolElement lhs = star_pol(ring, normal_mul(ring, f, g));
    PolElement rhs = normal_mul(ring, star_pol(ring, g), star_pol(ring, f));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("y powers") {
  CHECK(y_expand(ring, 0) == pol_one(ring));

  PolElement y1;
  pol_add_term(ring, y1, 0, 0, ExactScalar::one());
  pol_add_term(ring, y1, 1, 1, -ExactScalar::one());
  CHECK(y_expand(ring, 1) == y1);

  PolElement y2;
  pol_add_term(ring, y2, 0, 0, ExactScalar::one());
  pol_add_term(ring, y2, 1, 1, -(ExactScalar::one() + q_pow(2)));
  pol_add_term(ring, y2, 2, 2, q_pow(2));
  CHECK(y_expand(ring, 2) == y2);
}

TEST_CASE("associativity") {
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    PolElement f = random_pol(rng), g = random_pol(rng), h = random_pol(rng);
    PolElement lhs = normal_mul(ring, normal_mul(ring, f, g), h);
    PolElement rhs = normal_mul(ring, f, normal_mul(ring, g, h));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("grading additivity") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> e(0, 4);
    int j1 = e(rng), k1 = e(rng), j2 = e(rng), k2 = e(rng);
    PolElement p = normal_mul(ring, pol_monomial(ring, j1, k1, ExactScalar::one()),
                              pol_monomial(ring, j2, k2, ExactScalar::one()));
    int want = pol_degree(j1, k1) + pol_degree(j2, k2);
    for (const auto& [jk, c] : p.terms)
      CHECK(pol_degree(jk.first, jk.second) == want);
  }
}
