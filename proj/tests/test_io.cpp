#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdisc/io.hpp"

using namespace qdisc;

namespace {

const ExactRing ring;
const ExactScalar kOne = ExactScalar::one();

ExactScalar q_pow(int n) { return ExactScalar::spow(2 * n); }

ExactScalar rand_coef(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> half(-3, 3);
  return ExactScalar::from_int(coef(rng)) * ExactScalar::spow(half(rng));
}

FunElement random_fun(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3);
  std::uniform_int_distribution<int> nt(1, 4);
  FunElement f;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    if (e(rng) % 2)
      pol_add_term(ring, f.pol, e(rng), e(rng), rand_coef(rng));
    else
      fin_add_term(ring, f.fin, e(rng), e(rng), rand_coef(rng));
  }
  return f;
}

UqElement random_uq(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<int> b(-2, 2);
  std::uniform_int_distribution<int> nt(1, 4);
  UqElement x;
  int n = nt(rng);
  for (int i = 0; i < n; ++i)
    uq_add_term(x, {e(rng), b(rng), e(rng)}, rand_coef(rng));
  return x;
}

}  // namespace

TEST_CASE("parse_fun straightens products") {
  FunElement got = parse_fun("z' * z");
  FunElement want;
  pol_add_term(ring, want.pol, 1, 1, q_pow(2));
  pol_add_term(ring, want.pol, 0, 0, kOne - q_pow(2));
  CHECK(got.pol == want.pol);
  CHECK(got.fin.is_zero());
  CHECK(fun_str(got) == "q^2*z*z' + (1-q^2)");

  CHECK(parse_fun("z' * f0").is_zero());
  CHECK(fun_str(parse_fun("z' * f0")) == "0");

  FunElement zf0 = parse_fun("z * f0");
  REQUIRE(zf0.fin.terms.size() == 1);
  CHECK(zf0.fin.terms.count({1, 0}) == 1);
  CHECK(fun_str(zf0) == "z*f0");

  // y expands in the z, z' generators
  FunElement y2 = parse_fun("y^2");
  CHECK(y2.pol == y_expand(ring, 2));
}

TEST_CASE("parse_fun scalar handling") {
  FunElement s = parse_fun("(1-q^2)/(q^(-1)-q) * z");
  FunElement want;
  pol_add_term(ring, want.pol, 1, 0, q_pow(1));
  CHECK(s.pol == want.pol);

  CHECK(parse_fun("z - z").is_zero());
  CHECK(fun_str(parse_fun("f0 + q^(1/2)*z*f0")) ==
        fun_str(parse_fun("q^(1/2)*z*f0 + f0")));
}

TEST_CASE("parse_uq") {
  UqElement comm = parse_uq("E*F - F*E");
  // (K - Kinv)/(q - q^{-1})
  ExactScalar denom = q_pow(1) - q_pow(-1);
  UqElement want;
  uq_add_term(want, {0, 1, 0}, denom.inverse());
  uq_add_term(want, {0, -1, 0}, -denom.inverse());
  CHECK(comm == want);
  CHECK(uq_str(comm) == "(-q)/(1-q^2)*K + (q)/(1-q^2)*Kinv");

  CHECK(parse_uq("K*Kinv") == parse_uq("1"));
  CHECK(parse_uq("K^(-1)") == parse_uq("Kinv"));
  CHECK(parse_uq("Omega") == casimir());
  CHECK(parse_uq("E*K") == parse_uq("q^(-2) * K*E"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_fun("z + @"), UnknownToken);
  CHECK_THROWS_AS(parse_fun("z * w"), UnknownToken);
  CHECK_THROWS_AS(parse_uq("E + grr"), UnknownToken);

  try {
    parse_fun("z + @");
    CHECK(false);
  } catch (const UnknownToken& e) {
    CHECK(e.offset == 4);
  }

  CHECK_THROWS_AS(parse_fun("z * K"), MixedKind);
  CHECK_THROWS_AS(parse_fun("Omega"), MixedKind);
  CHECK_THROWS_AS(parse_uq("E * z'"), MixedKind);
  CHECK_THROWS_AS(parse_uq("f0"), MixedKind);

  CHECK_THROWS_AS(parse_fun("z +"), SyntaxError);
  CHECK_THROWS_AS(parse_fun("(z"), SyntaxError);
  CHECK_THROWS_AS(parse_fun("z / z"), SyntaxError);
  CHECK_THROWS_AS(parse_fun("z^(1/2)"), SyntaxError);
  CHECK_THROWS_AS(parse_uq("E^(-1)"), SyntaxError);
}

TEST_CASE("print/parse round-trip") {
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    FunElement f = random_fun(rng);
    CHECK(parse_fun(fun_str(f)) == f);
  }
  for (int t = 0; t < 100; ++t) {
    UqElement x = random_uq(rng);
    CHECK(parse_uq(uq_str(x)) == x);
  }
}

TEST_CASE("fun json round-trip") {
  CHECK(fun_to_json(FunElement{}) == nlohmann::json({{"pol", nlohmann::json::array()},
                                                     {"fin", nlohmann::json::array()}}));
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    FunElement f = random_fun(rng);
    CHECK(fun_from_json(fun_to_json(f)) == f);
  }
}

TEST_CASE("uq json round-trip") {
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    UqElement x = random_uq(rng);
    CHECK(uq_from_json(uq_to_json(x)) == x);
  }
  CHECK(uq_from_json(uq_to_json(casimir())) == casimir());
}

TEST_CASE("radial json") {
  RadialX f = RadialX::delta(ring, 1, 4);
  f.parity = 1;
  nlohmann::json j = radial_to_json(f);
  CHECK(j.at("parity") == 1);
  CHECK(j.at("values").size() == 4);
  CHECK(j.at("values")[1] == "1");

  RadialX back = radial_exact_from_json(j);
  CHECK(back.parity == 1);
  for (size_t m = 0; m < f.values.size(); ++m) CHECK(back.values[m] == f.values[m]);

  NumericContext ctx(0.5);
  nlohmann::json mixed = {{"parity", 0}, {"values", {"1-q^2", 0.25, 3}}};
  RadialD num = radial_numeric_from_json(mixed, ctx);
  CHECK(num.values[0] == doctest::Approx(0.75));
  CHECK(num.values[1] == doctest::Approx(0.25));
  CHECK(num.values[2] == doctest::Approx(3.0));

  RadialD d;
  d.values = {1.0, 0.5};
  nlohmann::json jd = radial_to_json(d);
  CHECK(jd.at("values")[1] == 0.5);
}

TEST_CASE("matrix json") {
  FunElement zf0 = parse_fun("z * f0");
  MatrixModel m = to_matrix(ring, zf0, 6);
  nlohmann::json j = matrix_to_json(m);
  CHECK(j.at("cutoff") == 6);
  CHECK(j.at("truncated") == false);
  REQUIRE(j.at("entries").size() == 1);
  CHECK(j.at("entries")[0].at("row") == 1);
  CHECK(j.at("entries")[0].at("col") == 0);
  CHECK(j.at("entries")[0].at("c") == "1-q^2");
  CHECK(j.at("entries")[0].count("value") == 0);

  NumericContext ctx(0.5);
  nlohmann::json jn = matrix_to_json(m, &ctx);
  CHECK(jn.at("entries")[0].at("value") == doctest::Approx(0.75));
}

TEST_CASE("spectrum json") {
  NumericContext ctx(0.5);
  SpectrumResult r = spectrum(32, ctx);
  nlohmann::json j = spectrum_to_json(r, 0.5, 32);
  CHECK(j.at("q") == 0.5);
  CHECK(j.at("N") == 32);
  CHECK(j.at("eigs").size() == 32);
  CHECK(j.at("weights").size() == 32);
  CHECK(j.at("c1").get<double>() == doctest::Approx(r.c1));
  CHECK(j.at("c2").get<double>() == doctest::Approx(r.c2));
}
