#include "doctest.h"
#include "oracles.hpp"
#include "weylva/mode_parser.hpp"

#include <random>

using namespace weylva;

namespace {

ModeElement el(const char* s) { return parse_mode_element(s); }

ModeElement random_element(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), idx(-3, 3), kind(0, 1), coef(-2, 2);
  ModeElement e;
  for (int t = 0; t < 3; ++t) {
    std::vector<Generator> gens;
    int l = len(rng);
    for (int i = 0; i < l; ++i) gens.push_back(kind(rng) ? Generator::a(idx(rng)) : Generator::a_star(idx(rng)));
    e.add(ModeWord(gens), Rational(coef(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/-4")) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("commutators") {
  CHECK(commutator(Generator::a(1), Generator::a_star(-1)) == mode_scalar(1));
  CHECK(commutator(Generator::a(2), Generator::a(3)).is_zero());
  CHECK(commutator(Generator::a_star(5), Generator::a_star(-5)).is_zero());
  CHECK(commutator(Generator::a_star(-1), Generator::a(1)) == mode_scalar(-1));
  CHECK(commutator(Generator::a(2), Generator::a_star(-3)).is_zero());
}

TEST_CASE("normal ordering") {
  CHECK(normal_order(el("a*(1) a(-1)")) == el("a(-1) a*(1) - 1"));
  CHECK(normal_order(el("a(-2) a*(3)")) == el("a(-2) a*(3)"));
  CHECK(normal_order(el("a(0) a*(0)")) == el("a*(0) a(0) + 1"));
  CHECK(normal_order(el("a(1) a(-1)")) == el("a(-1) a(1)"));
  CHECK(el("a(-1)") * el("a*(1)") == el("a(-1) a*(1)"));
  CHECK(el("a*(1)") * el("a(-1)") == el("a(-1) a*(1) - 1"));
  CHECK(mode_scalar(1) * el("a(3) + 2 * a*(-1)") == el("a(3) + 2 * a*(-1)"));
}

TEST_CASE("normal ordering agrees with the differential-operator model") {
  std::mt19937 rng(7);
  for (int s = 0; s < 60; ++s) {
    ModeElement e = random_element(rng, 5);
    ModeElement n = normal_order(e);
    CHECK(oracle::same_operator(e, n));
    CHECK(normal_order(n) == n);
    for (const auto& [w, c] : n) CHECK(w.is_normal_ordered());
  }
}

TEST_CASE("the oracle can tell distinct operators apart") {
  CHECK_FALSE(oracle::same_operator(el("a(0) a*(0)"), el("a*(0) a(0)")));
  CHECK_FALSE(oracle::same_operator(el("a*(1) a(-1)"), el("a(-1) a*(1)")));
}

TEST_CASE("spectral flow") {
  CHECK(spectral_flow(Generator::a(0), 1) == Generator::a(1));
  CHECK(spectral_flow(Generator::a_star(0), 1) == Generator::a_star(-1));
  CHECK(spectral_flow(el("a(0) a*(0) - a*(0) a(0)"), 1) == mode_scalar(1));
  std::mt19937 rng(11);
  for (int s = 0; s < 40; ++s) {
    ModeElement x = random_element(rng, 3), y = random_element(rng, 3);
    int l = s % 7 - 3;
    CHECK(spectral_flow(spectral_flow(x, l), -l) == normal_order(x));
    CHECK(spectral_flow(x * y, l) == spectral_flow(x, l) * spectral_flow(y, l));
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(3);
  for (int s = 0; s < 40; ++s) {
    ModeElement x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("bihomogeneous components") {
  auto comps = bihomogeneous_components(el("a(-1) a*(1) + a(2) + 3"));
  CHECK(comps.size() == 2);
  CHECK(comps.at({0, 0}) == el("a(-1) a*(1) + 3"));
  CHECK(comps.at({-2, -1}) == el("a(2)"));
}

TEST_CASE("Weyl algebra and Dixmier automorphisms") {
  CHECK(weyl_a() * weyl_a_star() - weyl_a_star() * weyl_a() == weyl_scalar(1));
  CHECK(dixmier_phi(weyl_a(), 2) == weyl_a_star() * Rational(2));
  CHECK(dixmier_phi(weyl_a_star(), 2) == weyl_a() * Rational(-1, 2));
  CHECK(dixmier_phi(dixmier_phi(weyl_a(), Rational(1, 3)), Rational(1, 3)) == weyl_a() * Rational(-1));
  WeylElement asa = weyl_a_star() * weyl_a();
  CHECK(dixmier_phi(asa, 1) == asa * Rational(-1) - weyl_scalar(1));
  CHECK_THROWS_AS(dixmier_phi(weyl_a(), 0), std::invalid_argument);
  CHECK(to_string(weyl_power(weyl_a(), 2) * weyl_a_star()) == "2 * a + a* a^2");
}

TEST_CASE("zero-mode projection") {
  WeylElement p = weyl_project(el("a*(0) a(0)"));
  CHECK(p == weyl_a_star() * weyl_a());
  CHECK(weyl_project(el("a(-1) a*(1)")).is_zero());
  CHECK(weyl_project(normal_order(el("a*(1) a(-1)"))) == weyl_scalar(-1));
  CHECK_THROWS_AS(weyl_project(el("a(1)")), std::domain_error);
}

TEST_CASE("parser round trip and errors") {
  ModeElement e = el("2/3 * a(-1) a*(2) - a*(0) + 5");
  CHECK(parse_mode_element(to_string(e)) == e);
  CHECK_THROWS_AS(parse_mode_element("a(1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mode_element("b(1)"), std::invalid_argument);
}
