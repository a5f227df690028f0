#pragma once

#include "weylva/bipartition.hpp"
#include "weylva/vertex_operators.hpp"
#include "weylva/weight_modules.hpp"

#include <string>
#include <vector>

namespace weylva {

// Basis vector a_{-m1}..a_{-mk} a*_{-n1}..a*_{-nl} ⊗ x^{exponent+λ}, creators = ((m), (n)).
struct InducedBasis {
  Bipartition creators;
  int exponent = 0;

  int level() const { return creators.total(); }
  friend auto operator<=>(const InducedBasis&, const InducedBasis&) = default;
};

using InducedVector = LinearCombination<InducedBasis>;

struct SparseEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

struct ActionMatrix {
  int source_level = 0;
  int target_level = 0;
  std::vector<SparseEntry> entries;  // row-major
  bool overflow = false;             // some image lies outside the truncation
};

// Generalized Verma module M_0(Z) for Z a weight module, truncated at depth and window.
// The action itself is exact; `overflows` reports vectors outside the truncation.
class InducedTruncation {
 public:
  using Vector = InducedVector;

  InducedTruncation(WeightModuleSpec base, int depth);

  Vector act(const Generator& g, const Vector& v) const;
  int max_level(const Vector& v) const;
  int flow() const { return 0; }

  const WeightModuleSpec& base() const { return base_; }
  const WeylModuleShape& shape() const { return shape_; }
  int depth() const { return depth_; }

  std::vector<int> base_exponents() const;
  std::vector<InducedBasis> level_basis(int level) const;
  std::size_t multiplicity(int level) const;  // over the base module
  bool overflows(const Vector& v) const;
  ActionMatrix action_matrix(const Generator& g, int level) const;

 private:
  WeightModuleSpec base_;
  WeylModuleShape shape_;
  int depth_;
};

InducedTruncation induce(const WeightModuleSpec& spec, int depth);
InducedVector induced_basis_vector(const Bipartition& creators, int exponent);

std::string to_string(const InducedBasis& b);
std::string to_string(const InducedVector& v);

// σ^ℓ(M): generator label g acts as σ^ℓ(g) on the underlying module.
template <ModeModule M>
class Flowed {
 public:
  using Vector = typename M::Vector;

  Flowed(const M& base, int ell) : base_(&base), ell_(ell) {}

  Vector act(const Generator& g, const Vector& v) const { return base_->act(spectral_flow(g, ell_), v); }
  int max_level(const Vector& v) const { return base_->max_level(v); }
  int flow() const { return base_->flow() + ell_; }
  int ell() const { return ell_; }
  const M& base() const { return *base_; }

 private:
  const M* base_;
  int ell_;
};

struct AssociativityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Coefficient form of (x0+x2)^{wt v} Y(v,x0+x2)Y(w,x2)u = (x2+x0)^{wt v} Y(Y(v,x0)w,x2)u on level-0 u,
// for v, w in {a_{-1}1, a*_0 1, J, ω} and x0, x2 exponents in [-max_order, max_order].
AssociativityReport check_associativity(const InducedTruncation& m, int max_order);

}  // namespace weylva
