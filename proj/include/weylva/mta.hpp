#pragma once

#include "weylva/bipartition.hpp"
#include "weylva/fock_module.hpp"
#include "weylva/mode_algebra.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace weylva {

ModeWord creator_word(const Bipartition& bp);
ModeWord annihilator_word(const Bipartition& bp);

// beta ⊛ alpha: zero unless degrees cancel, otherwise the zero-mode projection of beta·alpha.
WeylElement circledast(const ModeWord& beta, const ModeWord& alpha);

// annihilator(bp) ⊛ creator(bp), memoized. Throws std::logic_error if it is zero or not a scalar.
Integer contraction_constant(const Bipartition& bp);

class MTAElement {
 public:
  using Entry = std::pair<Bipartition, Bipartition>;

  MTAElement(int d1, int d2) : d1_(d1), d2_(d2) {}

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  const std::map<Entry, WeylElement>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // Throws std::invalid_argument when totals do not match the bidegree.
  void add(const Bipartition& row, const Bipartition& col, const WeylElement& w);
  WeylElement entry(const Bipartition& row, const Bipartition& col) const;

  friend bool operator==(const MTAElement&, const MTAElement&) = default;

 private:
  int d1_;
  int d2_;
  std::map<Entry, WeylElement> entries_;
};

MTAElement epsilon(const Bipartition& row, const Bipartition& col, const WeylElement& middle = weyl_scalar(1));
MTAElement star(const MTAElement& x, const MTAElement& y);
MTAElement unity(int d);

struct StrongUnityReport {
  int n = 0;
  int m = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

StrongUnityReport verify_strong_unity(int n, int m);
StrongUnityReport verify_strong_unity(int n, int m, const std::function<MTAElement(int)>& unity_for);

struct WeylMatrix {
  std::size_t size = 0;
  std::vector<WeylElement> cells;  // row-major

  explicit WeylMatrix(std::size_t n = 0) : size(n), cells(n * n) {}
  WeylElement& at(std::size_t r, std::size_t c) { return cells[r * size + c]; }
  const WeylElement& at(std::size_t r, std::size_t c) const { return cells[r * size + c]; }
  static WeylMatrix identity(std::size_t n);
  friend bool operator==(const WeylMatrix&, const WeylMatrix&) = default;
};

WeylMatrix operator*(const WeylMatrix& x, const WeylMatrix& y);

// ε_{(p,q)} w ↦ c(q) w E_{p,q}, rows and columns in enumerate_bipartitions order.
WeylMatrix matrix_iso(const MTAElement& x);
MTAElement matrix_iso_inverse(const WeylMatrix& m, int d);

struct ZhuBlockDescriptor {
  int level = 0;
  std::vector<std::size_t> block_sizes;
  std::size_t total = 0;
  std::vector<bool> unity_idempotent;
  bool unities_orthogonal = true;
};

ZhuBlockDescriptor zhu_structure(int d);

// Level-0 symbol of o(u): (a*_0)^r (a_0)^k times prod (-1)^m over factors a_{-m-1}; zero if any a*_{-n}, n >= 1.
ModeElement zhu_symbol(const FockVector& u);

}  // namespace weylva
