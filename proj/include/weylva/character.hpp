#pragma once

#include "weylva/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace weylva {

struct BivariateSeries {
  int max_d = 0;
  int j_min = 0;
  int j_max = 0;
  Rational prefactor_exponent;
  std::string q_j_convention;
  // (d, j) -> coefficient of q_L^d q_J^j; zero coefficients omitted.
  std::map<std::pair<int, int>, Integer> coefficients;

  Integer coefficient(int d, int j) const;
};

// Expands prod_{n>=1} (1 - q_J^{-1} q_L^n)^{-1} (1 - q_J q_L^{n-1})^{-1} for d <= max_d, j in [-max_d, j_window].
// Throws std::invalid_argument unless 0 <= max_d <= j_window.
BivariateSeries character_series(int max_d, int j_window);

inline constexpr const char* kQJConvention =
    "q_J^{+1} per a*-mode, q_J^{-1} per a-mode; the a*_0 tower expands as sum_{r>=0} q_J^{+r}";

}  // namespace weylva
