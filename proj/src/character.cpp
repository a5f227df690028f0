#include "weylva/character.hpp"

#include <stdexcept>
#include <vector>

namespace weylva {

Integer BivariateSeries::coefficient(int d, int j) const {
  auto it = coefficients.find({d, j});
  return it == coefficients.end() ? Integer(0) : it->second;
}

namespace {

class Grid {
 public:
  Grid(int max_d, int j_min, int j_max)
      : max_d_(max_d), j_min_(j_min), width_(j_max - j_min + 1),
        cells_(static_cast<std::size_t>((max_d + 1) * width_)) {}

  bool contains(int d, int j) const { return d >= 0 && d <= max_d_ && j >= j_min_ && j < j_min_ + width_; }
  Integer& at(int d, int j) { return cells_[static_cast<std::size_t>(d * width_ + (j - j_min_))]; }

  // Multiplies by 1/(1 - q_J^{charge} q_L^{step}), step >= 1.
  void geometric(int step, int charge) {
    for (int d = step; d <= max_d_; ++d) {
      for (int j = j_min_; j < j_min_ + width_; ++j) {
        if (contains(d - step, j - charge)) at(d, j) += at(d - step, j - charge);
      }
    }
  }

  // Multiplies by 1/(1 - q_J); exact because support before this step has j >= -d >= j_min.
  void zero_mode_tower() {
    for (int d = 0; d <= max_d_; ++d) {
      for (int j = j_min_ + 1; j < j_min_ + width_; ++j) at(d, j) += at(d, j - 1);
    }
  }

 private:
  int max_d_;
  int j_min_;
  int width_;
  std::vector<Integer> cells_;
};

}  // namespace

BivariateSeries character_series(int max_d, int j_window) {
  if (max_d < 0) throw std::invalid_argument("character_series: max_d must be non-negative");
  if (j_window < max_d) throw std::invalid_argument("character_series: j_window must be >= max_d");
  BivariateSeries s;
  s.max_d = max_d;
  s.j_min = -max_d;
  s.j_max = j_window;
  s.prefactor_exponent = Rational(-1, 12);
  s.q_j_convention = kQJConvention;

  Grid grid(max_d, s.j_min, s.j_max);
  grid.at(0, 0) = 1;
  for (int n = 1; n <= max_d; ++n) {
    grid.geometric(n, -1);
    grid.geometric(n, +1);
  }
  grid.zero_mode_tower();

  for (int d = 0; d <= max_d; ++d) {
    for (int j = s.j_min; j <= s.j_max; ++j) {
      if (grid.at(d, j) != 0) s.coefficients[{d, j}] = grid.at(d, j);
    }
  }
  return s;
}

}  // namespace weylva
