#pragma once

#include "weylva/mode_algebra.hpp"

#include <map>
#include <vector>

namespace weylva {

// a_{m1}...a_{mk} a*_{n1}...a*_{nl} 1 with m_i <= -1, n_j <= 0, each list sorted ascending.
struct PBWMonomial {
  std::vector<int> a_indices;
  std::vector<int> astar_indices;

  int weight() const;
  int charge() const;
  int zero_mode_count() const;
  ModeWord word() const;

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

using FockVector = LinearCombination<PBWMonomial>;

FockVector vacuum();
FockVector act(const Generator& g, const FockVector& v);
// Applies the word right to left.
FockVector act(const ModeWord& w, const FockVector& v);
FockVector act(const ModeElement& e, const FockVector& v);
// w·1 for a word of creation modes (or any word).
FockVector fock_state(const ModeWord& w);

// Word-level action via normal ordering; used as an independent route.
FockVector act_by_normal_ordering(const ModeElement& e, const FockVector& v);

int max_weight(const FockVector& v);
std::map<std::pair<int, int>, FockVector> bigrade(const FockVector& v);
bool is_weight_homogeneous(const FockVector& v, int* weight = nullptr);

// All monomials with weight <= max_weight and at most max_zero_modes factors of a*_0.
std::vector<PBWMonomial> fock_basis(int max_weight, int max_zero_modes);

std::string to_string(const PBWMonomial& m);
std::string to_string(const FockVector& v);
// Parses an element of the mode syntax and applies it to the vacuum.
FockVector parse_fock_vector(std::string_view text);

struct FockModule {
  using Vector = FockVector;
  Vector act(const Generator& g, const Vector& v) const { return weylva::act(g, v); }
  int max_level(const Vector& v) const { return max_weight(v); }
  int flow() const { return 0; }
};

}  // namespace weylva
