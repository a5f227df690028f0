#include "doctest.h"
#include "oracles.hpp"
#include "weylva/mta.hpp"

using namespace weylva;

namespace {

Rational wick(const Bipartition& q) { return oracle::wick_full_contraction(annihilator_word(q), creator_word(q)); }

}  // namespace

TEST_CASE("creator and annihilator words") {
  CHECK(to_string(creator_word({{1}, {}})) == "a(-1)");
  CHECK(to_string(annihilator_word({{1}, {}})) == "a*(1)");
  CHECK(creator_word({}).empty());
  CHECK(to_string(creator_word({{2, 1}, {1}})) == "a(-2) a(-1) a*(-1)");
  CHECK(to_string(annihilator_word({{2, 1}, {1}})) == "a*(1) a*(2) a(1)");
}

TEST_CASE("contraction constants") {
  CHECK(contraction_constant({}) == 1);
  CHECK(contraction_constant({{1}, {}}) == -1);
  CHECK(contraction_constant({{}, {1}}) == 1);
  CHECK(contraction_constant({{1, 1}, {}}) == 2);
  CHECK(contraction_constant({{2, 1}, {}}) == 1);
  CHECK(contraction_constant({{1, 1}, {2, 2, 2}}) == 12);
  for (int d = 0; d <= 4; ++d)
    for (const auto& q : enumerate_bipartitions(d)) CHECK(Rational(contraction_constant(q)) == wick(q));
}

TEST_CASE("circledast") {
  CHECK(circledast(creator_word({{1}, {}}), creator_word({{1}, {}})).is_zero());
  for (const auto& q : enumerate_bipartitions(3))
    for (const auto& p : enumerate_bipartitions(3))
      if (p != q) CHECK(circledast(annihilator_word(q), creator_word(p)).is_zero());
}

TEST_CASE("epsilon products") {
  Bipartition x{{1}, {}}, y{{}, {1}};
  CHECK(star(epsilon(x, y), epsilon(x, y)).is_zero());
  CHECK(star(epsilon(x, y), epsilon(y, x)) == epsilon(x, x, weyl_scalar(1)));
  CHECK(star(epsilon(y, x), epsilon(x, y)) == epsilon(y, y, weyl_scalar(-1)));
  CHECK(star(epsilon(x, x, weyl_a()), epsilon(x, x, weyl_a_star())) == epsilon(x, x, weyl_a() * weyl_a_star() * Rational(-1)));
  CHECK_THROWS_AS(epsilon(x, Bipartition{{2}, {}}).add(x, x, weyl_scalar(1)), std::invalid_argument);
}

TEST_CASE("unity") {
  CHECK(unity(0) == epsilon({}, {}));
  MTAElement u1 = unity(1);
  CHECK(u1.entries().size() == 2);
  CHECK(u1.entry({{1}, {}}, {{1}, {}}) == weyl_scalar(-1));
  CHECK(u1.entry({{}, {1}}, {{}, {1}}) == weyl_scalar(1));
  for (int d = 0; d <= 3; ++d) CHECK(star(unity(d), unity(d)) == unity(d));
}

TEST_CASE("strong unity and its negative control") {
  CHECK(verify_strong_unity(0, 0).passed());
  CHECK(verify_strong_unity(1, 2).passed());
  auto corrupted = [](int d) {
    if (d != 1) return unity(d);
    MTAElement u(1, -1);
    u.add({{1}, {}}, {{1}, {}}, weyl_scalar(-1));
    u.add({{}, {1}}, {{}, {1}}, weyl_scalar(Rational(1) / (contraction_constant({{}, {1}}) + 1)));
    return u;
  };
  auto r = verify_strong_unity(1, 1, corrupted);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.front().find("((),(1))") != std::string::npos);
}

TEST_CASE("matrix isomorphism") {
  for (int d = 0; d <= 2; ++d) {
    auto b = enumerate_bipartitions(d);
    CHECK(matrix_iso(unity(d)) == WeylMatrix::identity(b.size()));
    for (const auto& p : b)
      for (const auto& q : b)
        for (const auto& r : b) {
          MTAElement x = epsilon(p, q, weyl_a()), y = epsilon(q, r, weyl_a_star());
          CHECK(matrix_iso(star(x, y)) == matrix_iso(x) * matrix_iso(y));
          CHECK(matrix_iso_inverse(matrix_iso(x), d) == x);
        }
  }
}

TEST_CASE("Zhu block descriptors") {
  CHECK(zhu_structure(0).block_sizes == std::vector<std::size_t>{1});
  CHECK(zhu_structure(0).total == 1);
  CHECK(zhu_structure(1).block_sizes == std::vector<std::size_t>{1, 2});
  CHECK(zhu_structure(1).total == 5);
  auto z4 = zhu_structure(4);
  CHECK(z4.block_sizes == std::vector<std::size_t>{1, 2, 5, 10, 20});
  CHECK(z4.total == 530);
}
