#pragma once

#include "weylva/linear_combination.hpp"

#include <compare>
#include <initializer_list>
#include <vector>

namespace weylva {

enum class GeneratorKind { A, AStar };

// A single mode a_m or a*_m of the affinized Weyl algebra.
struct Generator {
  GeneratorKind kind = GeneratorKind::A;
  int index = 0;

  static Generator a(int m) { return {GeneratorKind::A, m}; }
  static Generator a_star(int n) { return {GeneratorKind::AStar, n}; }

  bool is_a() const { return kind == GeneratorKind::A; }
  int degree() const { return -index; }
  int charge() const { return is_a() ? -1 : 1; }

  // Canonical order: index ascending; a*_0 before a_0; a_m before a*_m for m != 0.
  friend std::strong_ordering operator<=>(const Generator& x, const Generator& y) {
    if (auto c = x.index <=> y.index; c != 0) return c;
    return x.rank() <=> y.rank();
  }
  friend bool operator==(const Generator& x, const Generator& y) = default;

 private:
  int rank() const {
    bool a_first = index != 0;
    return (is_a() == a_first) ? 0 : 1;
  }
};

class ModeWord {
 public:
  ModeWord() = default;
  ModeWord(std::initializer_list<Generator> gens) : gens_(gens) {}
  explicit ModeWord(std::vector<Generator> gens) : gens_(std::move(gens)) {}

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t length() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }

  int degree() const;
  int charge() const;
  bool is_normal_ordered() const;

  friend ModeWord operator*(const ModeWord& x, const ModeWord& y);
  friend auto operator<=>(const ModeWord&, const ModeWord&) = default;
  friend bool operator==(const ModeWord&, const ModeWord&) = default;

 private:
  std::vector<Generator> gens_;
};

using ModeElement = LinearCombination<ModeWord>;

ModeElement mode_scalar(const Rational& c);
ModeElement mode_element(const ModeWord& w, const Rational& c = Rational(1));

// [g1, g2] as a scalar multiple of the empty word.
ModeElement commutator(const Generator& g1, const Generator& g2);
Rational contraction(const Generator& g1, const Generator& g2);

ModeElement normal_order(const ModeElement& e);
ModeElement normal_order(const ModeWord& w);
ModeElement multiply(const ModeElement& e1, const ModeElement& e2);
ModeElement operator*(const ModeElement& e1, const ModeElement& e2);

Generator spectral_flow(const Generator& g, int ell);
ModeElement spectral_flow(const ModeElement& e, int ell);

// Splits into (degree, charge)-homogeneous parts.
std::map<std::pair<int, int>, ModeElement> bihomogeneous_components(const ModeElement& e);

// Monomial a*^i a^j of the Weyl algebra.
struct WeylMonomial {
  int astar_power = 0;
  int a_power = 0;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

using WeylElement = LinearCombination<WeylMonomial>;

WeylElement weyl_scalar(const Rational& c);
WeylElement weyl_a();
WeylElement weyl_a_star();
WeylElement operator*(const WeylElement& x, const WeylElement& y);
WeylElement weyl_power(const WeylElement& x, int n);

WeylElement dixmier_phi(const WeylElement& w, const Rational& lambda);

// Level-0 zero-mode projection; requires degree 0.
WeylElement weyl_project(const ModeElement& e);

std::string to_string(const Generator& g);
std::string to_string(const ModeWord& w);
std::string to_string(const ModeElement& e);
std::string to_string(const WeylElement& w);

}  // namespace weylva
