#include "weylva/vertex_operators.hpp"

namespace weylva {

FockVector omega() { return fock_state({Generator::a(-1), Generator::a_star(-1)}); }
FockVector heisenberg_j() { return fock_state({Generator::a(-1), Generator::a_star(0)}); }
FockVector alpha_state() { return fock_state({Generator::a(-1)}); }
FockVector beta_state() { return fock_state({Generator::a_star(0)}); }

namespace {

int homogeneous_weight(const FockVector& u, const char* op) {
  int wt = 0;
  if (!is_weight_homogeneous(u, &wt)) throw std::invalid_argument(std::string(op) + ": u must be L0-homogeneous");
  return wt;
}

// sum_{i>=0} C(wt+n, i) u_{i+shift} v
FockVector binomial_sum(const FockVector& u, int wt, int n, int shift, const FockVector& v) {
  FockVector out;
  int top = wt + n;
  int cut = max_weight(v) + wt - 1;
  for (int i = 0; i <= top && i + shift <= cut; ++i) {
    out.add(vertex_modes(u, i + shift, v), Rational(binomial(top, i)));
  }
  return out;
}

}  // namespace

FockVector zhu_circ(const FockVector& u, const FockVector& v, int n) {
  if (n < 0) throw std::invalid_argument("zhu_circ: n must be non-negative");
  int wt = homogeneous_weight(u, "zhu_circ");
  return binomial_sum(u, wt, n, -2 * n - 2, v);
}

FockVector zhu_star(const FockVector& u, const FockVector& v, int n) {
  if (n < 0) throw std::invalid_argument("zhu_star: n must be non-negative");
  int wt = homogeneous_weight(u, "zhu_star");
  FockVector out;
  for (int m = 0; m <= n; ++m) {
    Rational sign = (m % 2 == 0) ? 1 : -1;
    out.add(binomial_sum(u, wt, n, -n - m - 1, v), sign * Rational(binomial(m + n, n)));
  }
  return out;
}

}  // namespace weylva
