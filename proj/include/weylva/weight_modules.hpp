#pragma once

#include "weylva/linear_combination.hpp"
#include "weylva/mode_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylva {

enum class Family { V, CV, WLambda, W0Plus, W0Minus };

// Exponent k stands for x^{k+λ}; conjugate shapes use a = x, a* = -d/dx.
struct WeylModuleShape {
  bool laurent = false;
  bool conjugate = false;
  Rational lambda = 0;
  int window = 0;

  int min_exponent() const { return laurent ? -window : 0; }
  int max_exponent() const { return window; }
  bool in_window(int k) const { return k >= min_exponent() && k <= max_exponent(); }
  bool in_domain(int k) const { return laurent || k >= 0; }
};

struct WeightModuleSpec {
  Family family = Family::V;
  Rational lambda = 0;
  int window = 0;

  // Throws std::invalid_argument for a negative window or λ outside (0,1).
  static WeightModuleSpec make(Family family, int window, const Rational& lambda = 0);

  WeylModuleShape shape() const;
  std::string name() const;
  bool irreducible() const { return family == Family::V || family == Family::CV || family == Family::WLambda; }
};

std::string family_key(Family f);
// Accepts v, cv, wlambda, w0+, w0-.
std::optional<Family> parse_family(std::string_view key);

using WeightVector = LinearCombination<int>;

enum class WeylGenerator { A, AStar };

struct ActionResult {
  WeightVector value;
  bool leaked = false;  // some output exponent lies outside the window
};

ActionResult weyl_act(const WeylModuleShape& shape, WeylGenerator g, const WeightVector& v);
ActionResult weyl_act(const WeightModuleSpec& spec, WeylGenerator g, const WeightVector& v);
ActionResult apply_weyl(const WeylModuleShape& shape, const WeylElement& w, const WeightVector& v);

// Eigenvalue of a·a* on x^{k+λ}.
Rational aa_star_eigenvalue(const WeylModuleShape& shape, int k);

struct CwIsoReport {
  Rational lambda;
  int window = 0;
  std::size_t checked = 0;
  std::vector<std::pair<int, Rational>> coefficients;  // k -> f(k)
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// ψ(x^{k+λ}) = f(k) x^{-(k+1+λ)} intertwines cW_λ with W_{-λ} ≅ W_{1-λ}.
CwIsoReport cw_iso_check(const Rational& lambda, int window);
Rational cw_iso_coefficient(const Rational& lambda, int k);

enum class BoundaryStatus { Clean, Inconclusive };
std::string to_string(BoundaryStatus s);

// Subquotient type labels: "0", "V", "cV", "W", or "reducible".
struct SubmoduleReport {
  std::string family;
  int window = 0;
  std::vector<int> exponents;
  std::vector<int> socle;
  std::vector<int> radical;
  BoundaryStatus status = BoundaryStatus::Clean;
  std::vector<std::string> boundary_notes;
};

SubmoduleReport socle_radical(const WeightModuleSpec& spec);
SubmoduleReport socle_radical(const WeylModuleShape& shape, const std::string& name);

struct InterlockReport {
  SubmoduleReport submodules;
  bool weakly_interlocked = false;
  std::string socle_type;
  std::string radical_type;
  std::string quotient_by_socle_type;
  std::string quotient_by_radical_type;
  std::string witness;
};

InterlockReport weakly_interlocked(const WeightModuleSpec& spec);
InterlockReport weakly_interlocked(const WeylModuleShape& shape, const std::string& name);

// Classifies the subquotient spanned by `nodes`, with `below` the submodule being quotiented out.
std::string subquotient_type(const WeylModuleShape& shape, const std::vector<int>& nodes, const std::vector<int>& below);

}  // namespace weylva
