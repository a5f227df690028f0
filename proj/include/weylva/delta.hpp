#pragma once

#include "weylva/vertex_operators.hpp"

#include <map>
#include <stdexcept>

namespace weylva {

// Finite Laurent expansion sum_p x^p v_p.
template <typename Vector>
struct DeltaExpansion {
  std::map<int, Vector> terms;

  void add(int power, const Vector& v, const Rational& c = Rational(1)) {
    if (v.is_zero() || c == 0) return;
    auto& slot = terms[power];
    slot.add(v, c);
    if (slot.is_zero()) terms.erase(power);
  }
  Vector coefficient(int power) const {
    auto it = terms.find(power);
    return it == terms.end() ? Vector{} : it->second;
  }
  friend bool operator==(const DeltaExpansion&, const DeltaExpansion&) = default;
};

// J_0-eigenvalue of a single basis vector; throws std::logic_error if it is not an integral eigenvector.
template <ModeModule M, typename Key>
int j_zero_charge(const M& module, const Key& key) {
  typename M::Vector b(key);
  auto j0 = heisenberg_mode(module, 0, b);
  Rational c = j0.coefficient(key);
  if (!(j0 == b * c) || !is_integer(c)) throw std::logic_error("delta_operator: basis vector is not an integral J_0-eigenvector");
  return static_cast<int>(numerator(c).template convert_to<long>());
}

// Δ(-ℓJ, x) v = x^{h_0} exp(sum_k h_k/(-k) (-x)^{-k}) v with h = -ℓJ.
template <ModeModule M>
DeltaExpansion<typename M::Vector> delta_operator(const M& module, int ell, const typename M::Vector& v) {
  using Vector = typename M::Vector;
  // exponent A = sum_k (ℓ/k) (-1)^k J_k x^{-k}
  DeltaExpansion<Vector> exp_sum;
  DeltaExpansion<Vector> power;
  power.add(0, v);
  exp_sum.add(0, v);
  for (int n = 1; !power.terms.empty(); ++n) {
    DeltaExpansion<Vector> next;
    for (const auto& [p, w] : power.terms) {
      int top = module.max_level(w);
      for (int k = 1; k <= top; ++k) {
        Vector jk = heisenberg_mode(module, k, w);
        Rational c = Rational(ell, k) / n;
        if (k % 2) c = -c;
        next.add(p - k, jk, c);
      }
    }
    power = std::move(next);
    for (const auto& [p, w] : power.terms) exp_sum.add(p, w);
  }
  DeltaExpansion<Vector> out;
  for (const auto& [p, w] : exp_sum.terms) {
    for (const auto& [key, c] : w) {
      out.add(p - ell * j_zero_charge(module, key), Vector(key), c);
    }
  }
  return out;
}

inline DeltaExpansion<FockVector> delta_operator(int ell, const FockVector& v) {
  return delta_operator(FockModule{}, ell, v);
}

// Δ applied to every coefficient of an expansion, multiplying the Laurent series.
template <ModeModule M>
DeltaExpansion<typename M::Vector> delta_compose(const M& module, int ell,
                                                 const DeltaExpansion<typename M::Vector>& e) {
  DeltaExpansion<typename M::Vector> out;
  for (const auto& [p, w] : e.terms) {
    for (const auto& [q, u] : delta_operator(module, ell, w).terms) out.add(p + q, u);
  }
  return out;
}

// ṽ_n t = sum_p ((Δv)_p)_{n+p} t: the twisted mode through Li's Δ-operator acting in the untwisted module.
template <ModeModule M>
typename M::Vector delta_twisted_mode(const M& module, int ell, const FockVector& v, int n,
                                      const typename M::Vector& t) {
  typename M::Vector out;
  for (const auto& [p, vp] : delta_operator(ell, v).terms) out.add(vertex_modes(module, vp, n + p, t));
  return out;
}

}  // namespace weylva
