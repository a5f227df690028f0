#include "doctest.h"
#include "oracles.hpp"
#include "weylva/delta.hpp"
#include "weylva/interlock.hpp"

using namespace weylva;

TEST_CASE("Weyl module actions") {
  auto V = WeightModuleSpec::make(Family::V, 8);
  CHECK(weyl_act(V, WeylGenerator::A, WeightVector(3)).value == WeightVector(2, 3));
  CHECK(weyl_act(V, WeylGenerator::AStar, WeightVector(3)).value == WeightVector(4));
  auto cV = WeightModuleSpec::make(Family::CV, 8);
  CHECK(weyl_act(cV, WeylGenerator::AStar, WeightVector(0)).value.is_zero());
  auto W = WeightModuleSpec::make(Family::WLambda, 8, Rational(1, 2));
  CHECK(weyl_act(W, WeylGenerator::A, WeightVector(0)).value == WeightVector(-1, Rational(1, 2)));
  CHECK(weyl_act(V, WeylGenerator::AStar, WeightVector(8)).leaked);
  CHECK_THROWS_AS(weyl_act(V, WeylGenerator::A, WeightVector(-1)), std::invalid_argument);
}

TEST_CASE("spec validation and names") {
  CHECK_THROWS_AS(WeightModuleSpec::make(Family::V, -1), std::invalid_argument);
  CHECK_THROWS_AS(WeightModuleSpec::make(Family::WLambda, 4, Rational(1)), std::invalid_argument);
  CHECK(WeightModuleSpec::make(Family::WLambda, 4, Rational(1, 2)).name() == "W_1/2");
  CHECK(parse_family("w0+") == Family::W0Plus);
  CHECK_FALSE(parse_family("x").has_value());
}

TEST_CASE("dense oracle agrees with the action") {
  for (auto fam : {Family::V, Family::CV, Family::W0Plus, Family::W0Minus}) {
    auto sh = WeightModuleSpec::make(fam, 6).shape();
    for (auto g : {WeylGenerator::A, WeylGenerator::AStar}) {
      auto m = oracle::dense_action(sh, g);
      int lo = sh.min_exponent();
      for (int k = lo; k <= sh.max_exponent(); ++k) {
        WeightVector img = weyl_act(sh, g, WeightVector(k)).value;
        for (int t = lo; t <= sh.max_exponent(); ++t)
          CHECK(img.coefficient(t) == m[static_cast<std::size_t>(t - lo)][static_cast<std::size_t>(k - lo)]);
      }
    }
  }
}

TEST_CASE("conjugate isomorphism") {
  for (auto lam : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) CHECK(cw_iso_check(lam, 8).passed());
}

TEST_CASE("socle, radical and interlocking") {
  for (auto fam : {Family::V, Family::CV}) CHECK(weakly_interlocked(WeightModuleSpec::make(fam, 6)).weakly_interlocked);
  CHECK(weakly_interlocked(WeightModuleSpec::make(Family::WLambda, 6, Rational(1, 3))).weakly_interlocked);
  auto plus = weakly_interlocked(WeightModuleSpec::make(Family::W0Plus, 6));
  CHECK_FALSE(plus.weakly_interlocked);
  CHECK(plus.witness.find("V ≇ cV") != std::string::npos);
  CHECK(plus.submodules.status == BoundaryStatus::Clean);
  auto minus = weakly_interlocked(WeightModuleSpec::make(Family::W0Minus, 6));
  CHECK_FALSE(minus.weakly_interlocked);
  CHECK(minus.socle_type == "cV");
  CHECK(minus.quotient_by_socle_type == "V");
}

TEST_CASE("induced modules") {
  auto m = induce(WeightModuleSpec::make(Family::V, 4), 2);
  CHECK(m.multiplicity(0) == 1);
  CHECK(m.multiplicity(1) == 2);
  CHECK(m.multiplicity(2) == 5);
  auto rep = check_associativity(m, 2);
  CHECK(rep.failures.empty());
  CHECK(vertex_weakly_interlocked(m).weakly_interlocked);
  auto w = induce(WeightModuleSpec::make(Family::W0Plus, 4), 2);
  CHECK_FALSE(vertex_weakly_interlocked(w).weakly_interlocked);
  auto wm = induce(WeightModuleSpec::make(Family::W0Minus, 4), 2);
  Flowed<InducedTruncation> f(wm, 2);
  CHECK_FALSE(vertex_weakly_interlocked(f).weakly_interlocked);
  Flowed<InducedTruncation> f0(wm, 0);
  for (const auto& b : wm.level_basis(1)) {
    InducedVector v(b);
    CHECK(f0.act(Generator::a(0), v) == wm.act(Generator::a(0), v));
  }
}

TEST_CASE("spectral flow verification") {
  auto m = induce(WeightModuleSpec::make(Family::W0Plus, 3), 1);
  for (int ell = -1; ell <= 1; ++ell) CHECK(verify_spectral_flow(m, ell).passed());
}

TEST_CASE("Delta operator") {
  for (int ell = -2; ell <= 2; ++ell) {
    auto d = delta_operator(ell, alpha_state());
    CHECK(d.terms.size() == 1);
    CHECK(d.coefficient(ell) == alpha_state());
    CHECK(delta_operator(ell, vacuum()).coefficient(0) == vacuum());
  }
}
