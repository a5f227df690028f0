#include "weylva/fock_module.hpp"

#include "weylva/bipartition.hpp"
#include "weylva/mode_parser.hpp"

#include <algorithm>
#include <numeric>

namespace weylva {

int PBWMonomial::weight() const {
  return -std::accumulate(a_indices.begin(), a_indices.end(), 0) -
         std::accumulate(astar_indices.begin(), astar_indices.end(), 0);
}

int PBWMonomial::charge() const {
  return static_cast<int>(astar_indices.size()) - static_cast<int>(a_indices.size());
}

int PBWMonomial::zero_mode_count() const {
  return static_cast<int>(std::count(astar_indices.begin(), astar_indices.end(), 0));
}

ModeWord PBWMonomial::word() const {
  std::vector<Generator> gens;
  for (int m : a_indices) gens.push_back(Generator::a(m));
  for (int n : astar_indices) gens.push_back(Generator::a_star(n));
  return ModeWord(std::move(gens));
}

FockVector vacuum() { return FockVector(PBWMonomial{}); }

namespace {

void insert_sorted(std::vector<int>& v, int x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }

void act_on_monomial(const Generator& g, const PBWMonomial& m, const Rational& c, FockVector& out) {
  if (g.is_a()) {
    if (g.index <= -1) {
      PBWMonomial r = m;
      insert_sorted(r.a_indices, g.index);
      out.add(r, c);
      return;
    }
    // a_m with m >= 0 contracts with a*_{-m}
    auto range = std::equal_range(m.astar_indices.begin(), m.astar_indices.end(), -g.index);
    auto count = range.second - range.first;
    if (count == 0) return;
    PBWMonomial r = m;
    r.astar_indices.erase(r.astar_indices.begin() + (range.first - m.astar_indices.begin()));
    out.add(r, c * static_cast<long>(count));
    return;
  }
  if (g.index <= 0) {
    PBWMonomial r = m;
    insert_sorted(r.astar_indices, g.index);
    out.add(r, c);
    return;
  }
  // a*_n with n >= 1 contracts with a_{-n}: [a*_n, a_{-n}] = -1
  auto range = std::equal_range(m.a_indices.begin(), m.a_indices.end(), -g.index);
  auto count = range.second - range.first;
  if (count == 0) return;
  PBWMonomial r = m;
  r.a_indices.erase(r.a_indices.begin() + (range.first - m.a_indices.begin()));
  out.add(r, -c * static_cast<long>(count));
}

}  // namespace

FockVector act(const Generator& g, const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : v) act_on_monomial(g, m, c, out);
  return out;
}

FockVector act(const ModeWord& w, const FockVector& v) {
  FockVector cur = v;
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) {
    cur = act(*it, cur);
    if (cur.is_zero()) break;
  }
  return cur;
}

FockVector act(const ModeElement& e, const FockVector& v) {
  FockVector out;
  for (const auto& [w, c] : e) out.add(act(w, v), c);
  return out;
}

FockVector fock_state(const ModeWord& w) { return act(w, vacuum()); }

FockVector act_by_normal_ordering(const ModeElement& e, const FockVector& v) {
  FockVector out;
  for (const auto& [vm, vc] : v) {
    ModeElement product = multiply(e, mode_element(vm.word()));
    for (const auto& [w, c] : product) {
      bool survives = true;
      for (const auto& g : w.generators()) {
        if ((g.is_a() && g.index >= 0) || (!g.is_a() && g.index >= 1)) {
          survives = false;
          break;
        }
      }
      if (!survives) continue;
      PBWMonomial m;
      for (const auto& g : w.generators()) (g.is_a() ? m.a_indices : m.astar_indices).push_back(g.index);
      out.add(m, c * vc);
    }
  }
  return out;
}

int max_weight(const FockVector& v) {
  int w = 0;
  for (const auto& [m, c] : v) w = std::max(w, m.weight());
  return w;
}

std::map<std::pair<int, int>, FockVector> bigrade(const FockVector& v) {
  std::map<std::pair<int, int>, FockVector> parts;
  for (const auto& [m, c] : v) parts[{m.weight(), m.charge()}].add(m, c);
  return parts;
}

bool is_weight_homogeneous(const FockVector& v, int* weight) {
  if (v.is_zero()) {
    if (weight) *weight = 0;
    return true;
  }
  int w = v.begin()->first.weight();
  for (const auto& [m, c] : v) {
    if (m.weight() != w) return false;
  }
  if (weight) *weight = w;
  return true;
}

std::vector<PBWMonomial> fock_basis(int max_weight, int max_zero_modes) {
  std::vector<PBWMonomial> out;
  for (int w = 0; w <= max_weight; ++w) {
    for (int s = 0; s <= w; ++s) {
      for (const auto& lam : enumerate_partitions(s)) {
        for (const auto& mu : enumerate_partitions(w - s)) {
          for (int r = 0; r <= max_zero_modes; ++r) {
            PBWMonomial m;
            for (int p : lam) m.a_indices.push_back(-p);
            for (int p : mu) m.astar_indices.push_back(-p);
            for (int i = 0; i < r; ++i) m.astar_indices.push_back(0);
            std::sort(m.a_indices.begin(), m.a_indices.end());
            std::sort(m.astar_indices.begin(), m.astar_indices.end());
            out.push_back(std::move(m));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const PBWMonomial& m) {
  if (m.a_indices.empty() && m.astar_indices.empty()) return "1";
  return to_string(m.word());
}

std::string to_string(const FockVector& v) {
  ModeElement e;
  for (const auto& [m, c] : v) e.add(m.word(), c);
  return to_string(e);
}

FockVector parse_fock_vector(std::string_view text) { return act(parse_mode_element(text), vacuum()); }

}  // namespace weylva
