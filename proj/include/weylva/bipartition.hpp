#pragma once

#include "weylva/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace weylva {

using Partition = std::vector<int>;  // weakly decreasing, parts >= 1

struct Bipartition {
  Partition first;
  Partition second;

  int total() const;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

std::vector<Partition> enumerate_partitions(int n);
// Lexicographic on (first, second); throws std::invalid_argument for d < 0.
std::vector<Bipartition> enumerate_bipartitions(int d);
std::size_t bipartition_count(int d);

// dim of the (weight d, charge j) subspace of the Fock module, by PBW enumeration.
Integer graded_dimension(int d, int j);

std::string to_string(const Partition& p);
std::string to_string(const Bipartition& bp);

}  // namespace weylva
