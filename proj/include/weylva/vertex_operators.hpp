#pragma once

#include "weylva/fock_module.hpp"

#include <concepts>
#include <stdexcept>

namespace weylva {

// What vertex_modes needs from a module: generator action plus a level bound and a flow twist for truncation.
template <typename M>
concept ModeModule = requires(const M& m, const typename M::Vector& v, const Generator& g) {
  { m.act(g, v) } -> std::same_as<typename M::Vector>;
  { m.max_level(v) } -> std::convertible_to<int>;
  { m.flow() } -> std::convertible_to<int>;
};

FockVector omega();          // a_{-1} a*_{-1} 1
FockVector heisenberg_j();   // a_{-1} a*_0 1
FockVector alpha_state();    // a_{-1} 1
FockVector beta_state();     // a*_0 1

namespace detail {

// Field label: alpha_p = a_p (from a_{-1}1), beta_p = a*_{p+1} (from a*_0 1).
inline Generator field_mode(bool alpha, int p) { return alpha ? Generator::a(p) : Generator::a_star(p + 1); }

// Largest p with v_p t possibly nonzero, for homogeneous v of weight wt and charge q.
inline int mode_cutoff(int level, int wt, int q, int flow) { return level + wt - 1 + flow * q; }

template <ModeModule M>
typename M::Vector monomial_mode(const M& module, const PBWMonomial& u, int k, const typename M::Vector& t) {
  using Vector = typename M::Vector;
  if (t.is_zero()) return Vector{};
  if (u.a_indices.empty() && u.astar_indices.empty()) return k == -1 ? t : Vector{};

  int level = module.max_level(t);
  if (k > mode_cutoff(level, u.weight(), u.charge(), module.flow())) return Vector{};

  // u = x_n w with x the first PBW factor
  PBWMonomial w = u;
  bool alpha = !u.a_indices.empty();
  int n;
  if (alpha) {
    n = w.a_indices.front();
    w.a_indices.erase(w.a_indices.begin());
  } else {
    n = w.astar_indices.front() - 1;
    w.astar_indices.erase(w.astar_indices.begin());
  }
  int x_wt = alpha ? 1 : 0;
  int x_q = alpha ? -1 : 1;
  int flow = module.flow();
  int w_cut = mode_cutoff(level, w.weight(), w.charge(), flow);
  int x_cut = mode_cutoff(level, x_wt, x_q, flow);
  Rational sign_n = (n % 2 == 0) ? 1 : -1;

  Vector out;
  // (x_n w)_k t = sum_i (-1)^i C(n,i) [x_{n-i} w_{k+i} t - (-1)^n w_{n+k-i} x_i t]
  int i_max = std::max(w_cut - k, x_cut);
  for (int i = 0; i <= i_max; ++i) {
    Integer b = binomial(n, i);
    if (b == 0) continue;
    Rational coeff = (i % 2 == 0) ? Rational(b) : Rational(-b);
    if (k + i <= w_cut) {
      Vector inner = monomial_mode(module, w, k + i, t);
      if (!inner.is_zero()) out.add(module.act(field_mode(alpha, n - i), inner), coeff);
    }
    if (i <= x_cut) {
      Vector xt = module.act(field_mode(alpha, i), t);
      if (!xt.is_zero()) out.add(monomial_mode(module, w, n + k - i, xt), -coeff * sign_n);
    }
  }
  return out;
}

}  // namespace detail

// u_k t: the z^{-k-1} coefficient of Y(u, z) t.
template <ModeModule M>
typename M::Vector vertex_modes(const M& module, const FockVector& u, int k, const typename M::Vector& t) {
  typename M::Vector out;
  for (const auto& [m, c] : u) out.add(detail::monomial_mode(module, m, k, t), c);
  return out;
}

inline FockVector vertex_modes(const FockVector& u, int k, const FockVector& t) {
  return vertex_modes(FockModule{}, u, k, t);
}

template <ModeModule M>
typename M::Vector virasoro_mode(const M& module, int n, const typename M::Vector& t) {
  return vertex_modes(module, omega(), n + 1, t);
}

template <ModeModule M>
typename M::Vector heisenberg_mode(const M& module, int n, const typename M::Vector& t) {
  return vertex_modes(module, heisenberg_j(), n, t);
}

inline FockVector virasoro_mode(int n, const FockVector& t) { return virasoro_mode(FockModule{}, n, t); }
inline FockVector heisenberg_mode(int n, const FockVector& t) { return heisenberg_mode(FockModule{}, n, t); }

// o(u) = sum over weight components u_h of (u_h)_{wt(h)-1}.
template <ModeModule M>
typename M::Vector zero_mode(const M& module, const FockVector& u, const typename M::Vector& t) {
  typename M::Vector out;
  for (const auto& [m, c] : u) out.add(detail::monomial_mode(module, m, m.weight() - 1, t), c);
  return out;
}

// Zhu products; u must be L0-homogeneous (std::invalid_argument otherwise).
FockVector zhu_circ(const FockVector& u, const FockVector& v, int n);
FockVector zhu_star(const FockVector& u, const FockVector& v, int n);

}  // namespace weylva
