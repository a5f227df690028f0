#include "doctest.h"
#include "oracles.hpp"
#include "weylva/bipartition.hpp"
#include "weylva/character.hpp"
#include "weylva/mta.hpp"
#include "weylva/mode_parser.hpp"
#include "weylva/series_io.hpp"
#include "weylva/vertex_operators.hpp"

using namespace weylva;

namespace {

FockVector st(const char* word) { return fock_state(parse_mode_word(word)); }

}  // namespace

TEST_CASE("generator action on small states") {
  CHECK(act(Generator::a(0), vacuum()).is_zero());
  CHECK(act(Generator::a_star(1), vacuum()).is_zero());
  CHECK(act(Generator::a(1), st("a*(-1)")) == vacuum());
  CHECK(act(Generator::a_star(1), st("a(-1)")) == vacuum() * Rational(-1));
  CHECK(act(Generator::a(0), st("a*(0) a*(0)")) == st("a*(0)") * Rational(2));
}

TEST_CASE("weights and charges") {
  PBWMonomial m{{-2}, {-1, 0, 0, 0}};
  CHECK(m.weight() == 3);
  CHECK(m.charge() == 3);
  CHECK(PBWMonomial{}.weight() == 0);
  int w = -1;
  CHECK(is_weight_homogeneous(omega(), &w));
  CHECK(w == 2);
  CHECK(bigrade(omega()).count({2, 0}) == 1);
}

TEST_CASE("action agrees with normal ordering the word first") {
  auto basis = fock_basis(3, 1);
  std::vector<const char*> ops = {"a(1) a*(-1)", "a*(1) a(-1) a(0)", "a(2) a*(-2) - a*(0) a(1)", "a(0) a*(0)"};
  for (const char* op : ops) {
    ModeElement e = parse_mode_element(op);
    for (const auto& m : basis) CHECK(act(e, FockVector(m)) == act_by_normal_ordering(e, FockVector(m)));
  }
}

TEST_CASE("bipartitions") {
  CHECK(enumerate_bipartitions(0).size() == 1);
  CHECK(enumerate_bipartitions(1).size() == 2);
  auto series = oracle::bipartition_series(6);
  for (int d = 0; d <= 6; ++d) CHECK(Integer(bipartition_count(d)) == series[static_cast<std::size_t>(d)]);
  CHECK(bipartition_count(6) == 65);
  CHECK_THROWS(enumerate_bipartitions(-1));
  auto b = enumerate_bipartitions(5);
  CHECK(std::is_sorted(b.begin(), b.end()));
}

TEST_CASE("graded dimensions") {
  CHECK(graded_dimension(0, 0) == 1);
  CHECK(graded_dimension(0, 4) == 1);
  CHECK(graded_dimension(0, -1) == 0);
  CHECK(graded_dimension(2, -1) == oracle::brute_graded_dimension(2, -1));
  for (int d = 0; d <= 5; ++d) CHECK(graded_dimension(d, -d - 1) == 0);
}

TEST_CASE("character series") {
  auto s = character_series(6, 6);
  CHECK(s.coefficient(2, -1) == graded_dimension(2, -1));
  CHECK(s.coefficient(3, -5) == 0);
  CHECK(s.prefactor_exponent == Rational(-1, 12));
  CHECK_THROWS_AS(character_series(-1, 3), std::invalid_argument);
}

TEST_CASE("series serialization round trips and agrees") {
  auto s = character_series(4, 4);
  auto csv = series_to_csv(s);
  auto json = series_to_json(s);
  auto a = series_from_csv(csv);
  auto b = series_from_json(json);
  CHECK(a.coefficients == s.coefficients);
  CHECK(b.coefficients == s.coefficients);
  CHECK(series_to_csv(s) == csv);
}

TEST_CASE("vertex operator modes") {
  FockVector w = omega();
  CHECK(vertex_modes(w, 3, w) == vacuum());
  CHECK(vertex_modes(w, 2, w).is_zero());
  CHECK(virasoro_mode(0, w) == w * Rational(2));
  CHECK(virasoro_mode(-1, vacuum()).is_zero());
  for (const auto& m : fock_basis(3, 2)) {
    FockVector t(m);
    CHECK(virasoro_mode(0, t) == t * Rational(m.weight()));
    CHECK(heisenberg_mode(0, t) == t * Rational(m.charge()));
    for (int n = -2; n <= 2; ++n) {
      CHECK(virasoro_mode(n, t) == oracle::free_field_virasoro(n, t));
      CHECK(heisenberg_mode(n, t) == oracle::free_field_heisenberg(n, t));
    }
  }
}

TEST_CASE("Zhu products") {
  FockVector a = alpha_state(), b = beta_state();
  FockVector comm = zhu_star(a, b, 0) - zhu_star(b, a, 0);
  CHECK(zhu_symbol(comm) == mode_scalar(1));
  CHECK(normal_order(zhu_symbol(a)) == parse_mode_element("a(0)"));
  CHECK(zhu_symbol(b) == parse_mode_element("a*(0)"));
  CHECK(zhu_symbol(st("a*(-1)")).is_zero());
  CHECK_THROWS(zhu_star(a, b, -1));
}
