#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace weylva::oracle {

std::vector<Integer> bipartition_series(int max_d) {
  std::vector<Integer> series(static_cast<std::size_t>(max_d) + 1, 0);
  series[0] = 1;
  for (int n = 1; n <= max_d; ++n) {
    for (int copy = 0; copy < 2; ++copy) {
      // multiply by 1 + q^n + q^{2n} + ...
      std::vector<Integer> next(series.size(), 0);
      for (int d = 0; d <= max_d; ++d) {
        for (int e = 0; d + e * n <= max_d; ++e) next[static_cast<std::size_t>(d + e * n)] += series[static_cast<std::size_t>(d)];
      }
      series = std::move(next);
    }
  }
  return series;
}

namespace {

void add_term(Polynomial& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Polynomial apply_generator(const Generator& g, const Polynomial& p) {
  Polynomial out;
  if (!g.is_a()) {
    for (const auto& [m, c] : p) {
      Monomial r = m;
      ++r[g.index];
      add_term(out, r, c);
    }
    return out;
  }
  int var = -g.index;
  for (const auto& [m, c] : p) {
    auto it = m.find(var);
    if (it == m.end()) continue;
    Monomial r = m;
    int e = it->second;
    if (e == 1) r.erase(var);
    else r[var] = e - 1;
    add_term(out, r, c * e);
  }
  return out;
}

}  // namespace

Polynomial apply(const ModeElement& e, const Polynomial& p) {
  Polynomial out;
  for (const auto& [w, c] : e) {
    Polynomial cur = p;
    for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) cur = apply_generator(*it, cur);
    for (const auto& [m, v] : cur) add_term(out, m, v * c);
  }
  return out;
}

std::vector<Polynomial> probe_polynomials(const std::vector<int>& variables, int degree) {
  std::vector<Polynomial> out;
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == variables.size()) {
      out.push_back(Polynomial{{m, Rational(1)}});
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e) m[variables[i]] = e;
      else m.erase(variables[i]);
      rec(i + 1, left - e);
    }
    m.erase(variables[i]);
  };
  rec(0, degree);
  return out;
}

bool same_operator(const ModeElement& e1, const ModeElement& e2) {
  std::set<int> vars;
  std::size_t longest = 0;
  for (const auto* e : {&e1, &e2}) {
    for (const auto& [w, c] : *e) {
      longest = std::max(longest, w.length());
      for (const auto& g : w.generators()) vars.insert(g.is_a() ? -g.index : g.index);
    }
  }
  // a differential operator of order <= k is determined by its values on polynomials of degree <= k
  for (const auto& p : probe_polynomials({vars.begin(), vars.end()}, static_cast<int>(longest))) {
    if (apply(e1, p) != apply(e2, p)) return false;
  }
  return true;
}

Rational wick_full_contraction(const ModeWord& beta, const ModeWord& alpha) {
  if (beta.length() != alpha.length()) return 0;
  std::vector<bool> used(alpha.length(), false);
  std::function<Rational(std::size_t)> rec = [&](std::size_t i) -> Rational {
    if (i == beta.length()) return 1;
    Rational total = 0;
    for (std::size_t j = 0; j < alpha.length(); ++j) {
      if (used[j]) continue;
      const Generator& x = beta[i];
      const Generator& y = alpha[j];
      Rational c = 0;
      if (x.kind != y.kind && x.index + y.index == 0) c = x.is_a() ? 1 : -1;
      if (c == 0) continue;
      used[j] = true;
      total += c * rec(i + 1);
      used[j] = false;
    }
    return total;
  };
  return rec(0);
}

namespace {

FockVector normal_ordered_pair(int p, int q, const FockVector& t) {
  Generator a = Generator::a(p), as = Generator::a_star(q);
  if (p >= 0) return act(as, act(a, t));
  return act(a, act(as, t));
}

}  // namespace

FockVector free_field_virasoro(int n, const FockVector& t) {
  FockVector out;
  int range = max_weight(t) + std::abs(n) + 2;
  for (int p = -range; p <= range; ++p) {
    int q = n - p;
    out.add(normal_ordered_pair(p, q, t), Rational(-q));
  }
  return out;
}

FockVector free_field_heisenberg(int n, const FockVector& t) {
  FockVector out;
  int range = max_weight(t) + std::abs(n) + 2;
  for (int p = -range; p <= range; ++p) out.add(normal_ordered_pair(p, n - p, t));
  return out;
}

Integer brute_graded_dimension(int d, int j) {
  Integer count = 0;
  // charge j needs r = j + k - l copies of a*_0, and k <= d
  for (const auto& m : fock_basis(d, std::max(0, j + d))) {
    if (m.weight() == d && m.charge() == j) ++count;
  }
  return count;
}

std::map<std::pair<int, int>, Integer> brute_graded_table(int max_d, int j_max) {
  std::map<std::pair<int, int>, Integer> table;
  for (const auto& m : fock_basis(max_d, j_max + max_d)) {
    if (m.charge() <= j_max) table[{m.weight(), m.charge()}] += 1;
  }
  return table;
}

std::vector<std::vector<Rational>> dense_action(const WeylModuleShape& shape, WeylGenerator g) {
  int lo = shape.min_exponent(), hi = shape.max_exponent();
  std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (int k = lo; k <= hi; ++k) {
    Rational base = Rational(k) + shape.lambda;
    bool derivative = (g == WeylGenerator::A) != shape.conjugate;
    int target = derivative ? k - 1 : k + 1;
    Rational c = derivative ? (shape.conjugate ? Rational(-base) : base) : Rational(1);
    if (target < lo || target > hi) continue;
    m[static_cast<std::size_t>(target - lo)][static_cast<std::size_t>(k - lo)] = c;
  }
  return m;
}

}  // namespace weylva::oracle
