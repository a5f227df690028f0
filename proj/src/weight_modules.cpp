#include "weylva/weight_modules.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylva {

WeightModuleSpec WeightModuleSpec::make(Family family, int window, const Rational& lambda) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  WeightModuleSpec s;
  s.family = family;
  s.window = window;
  if (family == Family::WLambda) {
    if (lambda <= 0 || lambda >= 1) throw std::invalid_argument("lambda must lie in (0,1), got " + to_string(lambda));
    s.lambda = lambda;
  }
  return s;
}

WeylModuleShape WeightModuleSpec::shape() const {
  WeylModuleShape sh;
  sh.window = window;
  sh.lambda = family == Family::WLambda ? lambda : Rational(0);
  sh.laurent = family == Family::WLambda || family == Family::W0Plus || family == Family::W0Minus;
  sh.conjugate = family == Family::CV || family == Family::W0Minus;
  return sh;
}

std::string family_key(Family f) {
  switch (f) {
    case Family::V: return "v";
    case Family::CV: return "cv";
    case Family::WLambda: return "wlambda";
    case Family::W0Plus: return "w0+";
    case Family::W0Minus: return "w0-";
  }
  return "?";
}

std::string WeightModuleSpec::name() const {
  switch (family) {
    case Family::V: return "V";
    case Family::CV: return "cV";
    case Family::WLambda: return "W_" + to_string(lambda);
    case Family::W0Plus: return "W0+";
    case Family::W0Minus: return "W0-";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view key) {
  if (key == "v") return Family::V;
  if (key == "cv") return Family::CV;
  if (key == "wlambda") return Family::WLambda;
  if (key == "w0+") return Family::W0Plus;
  if (key == "w0-") return Family::W0Minus;
  return std::nullopt;
}

namespace {

// The single term g·x^{k+λ} as (target exponent, coefficient).
std::pair<int, Rational> move(const WeylModuleShape& sh, WeylGenerator g, int k) {
  bool derivative = (g == WeylGenerator::A) != sh.conjugate;
  if (derivative) {
    Rational c = Rational(k) + sh.lambda;
    if (sh.conjugate) c = -c;
    return {k - 1, c};
  }
  return {k + 1, Rational(1)};
}

}  // namespace

ActionResult weyl_act(const WeylModuleShape& shape, WeylGenerator g, const WeightVector& v) {
  ActionResult r;
  for (const auto& [k, c] : v) {
    if (!shape.in_domain(k)) throw std::invalid_argument("exponent " + std::to_string(k) + " is not in the module");
    auto [t, coeff] = move(shape, g, k);
    if (coeff == 0) continue;
    r.value.add(t, c * coeff);
    if (!shape.in_window(t)) r.leaked = true;
  }
  return r;
}

ActionResult weyl_act(const WeightModuleSpec& spec, WeylGenerator g, const WeightVector& v) {
  return weyl_act(spec.shape(), g, v);
}

ActionResult apply_weyl(const WeylModuleShape& shape, const WeylElement& w, const WeightVector& v) {
  ActionResult out;
  for (const auto& [m, c] : w) {
    WeightVector cur = v;
    for (int i = 0; i < m.a_power; ++i) {
      auto r = weyl_act(shape, WeylGenerator::A, cur);
      out.leaked |= r.leaked;
      cur = std::move(r.value);
    }
    for (int i = 0; i < m.astar_power; ++i) {
      auto r = weyl_act(shape, WeylGenerator::AStar, cur);
      out.leaked |= r.leaked;
      cur = std::move(r.value);
    }
    out.value.add(cur, c);
  }
  return out;
}

Rational aa_star_eigenvalue(const WeylModuleShape& shape, int k) {
  Rational e = Rational(k) + shape.lambda;
  return shape.conjugate ? Rational(-e) : Rational(e + 1);
}

Rational cw_iso_coefficient(const Rational& lambda, int k) {
  Rational f = 1;
  if (k >= 0) {
    for (int i = 0; i < k; ++i) f *= -(Rational(i + 1) + lambda);
  } else {
    for (int i = 0; i > k; --i) f /= -(Rational(i) + lambda);
  }
  return f;
}

CwIsoReport cw_iso_check(const Rational& lambda, int window) {
  if (lambda <= 0 || lambda >= 1) throw std::invalid_argument("cw_iso_check: lambda must lie in (0,1)");
  if (window < 0) throw std::invalid_argument("cw_iso_check: window must be non-negative");
  CwIsoReport report;
  report.lambda = lambda;
  report.window = window;
  WeylModuleShape source{true, true, lambda, window};
  WeylModuleShape target{true, false, 1 - lambda, window + 2};
  // ψ(x^{k+λ}) = f(k) x^{(-k-2) + (1-λ)}
  auto psi = [&](const WeightVector& v) {
    WeightVector out;
    for (const auto& [k, c] : v) out.add(-k - 2, c * cw_iso_coefficient(lambda, k));
    return out;
  };
  for (int k = -window; k <= window; ++k) {
    report.coefficients.emplace_back(k, cw_iso_coefficient(lambda, k));
    for (auto g : {WeylGenerator::A, WeylGenerator::AStar}) {
      WeightVector basis(k);
      WeightVector lhs = psi(weyl_act(source, g, basis).value);
      WeightVector rhs = weyl_act(target, g, psi(basis)).value;
      ++report.checked;
      if (!(lhs == rhs)) {
        report.failures.push_back(std::string(g == WeylGenerator::A ? "a" : "a*") + " at k=" + std::to_string(k));
      }
    }
  }
  return report;
}

std::string to_string(BoundaryStatus s) { return s == BoundaryStatus::Clean ? "clean" : "inconclusive"; }

namespace {

struct Graph {
  std::vector<int> nodes;
  std::map<int, std::set<int>> out;
};

Graph transition_graph(const WeylModuleShape& sh) {
  Graph g;
  for (int k = sh.min_exponent(); k <= sh.max_exponent(); ++k) g.nodes.push_back(k);
  for (int k : g.nodes) {
    g.out[k];
    for (auto gen : {WeylGenerator::A, WeylGenerator::AStar}) {
      auto [t, c] = move(sh, gen, k);
      if (c != 0 && sh.in_window(t) && sh.in_domain(t)) g.out[k].insert(t);
    }
  }
  return g;
}

bool has_edge(const WeylModuleShape& sh, int from, int to) {
  if (!sh.in_domain(from) || !sh.in_domain(to)) return false;
  for (auto gen : {WeylGenerator::A, WeylGenerator::AStar}) {
    auto [t, c] = move(sh, gen, from);
    if (t == to && c != 0) return true;
  }
  return false;
}

std::set<int> reachable(const Graph& g, int start) {
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    for (int t : g.out.at(k)) {
      if (seen.insert(t).second) stack.push_back(t);
    }
  }
  return seen;
}

struct Components {
  std::vector<std::vector<int>> members;
  std::map<int, std::size_t> of;
};

Components strongly_connected(const Graph& g) {
  std::map<int, std::set<int>> reach;
  for (int k : g.nodes) reach[k] = reachable(g, k);
  Components c;
  for (int k : g.nodes) {
    if (c.of.count(k)) continue;
    std::vector<int> comp;
    for (int t : reach[k]) {
      if (reach[t].count(k)) comp.push_back(t);
    }
    for (int t : comp) c.of[t] = c.members.size();
    c.members.push_back(comp);
  }
  return c;
}

std::vector<std::string> boundary_problems(const WeylModuleShape& sh) {
  std::vector<std::string> notes;
  std::vector<std::pair<int, int>> crossings;
  if (sh.laurent) crossings.emplace_back(sh.min_exponent(), sh.min_exponent() - 1);
  crossings.emplace_back(sh.max_exponent(), sh.max_exponent() + 1);
  for (auto [inside, outside] : crossings) {
    bool out_edge = has_edge(sh, inside, outside);
    bool in_edge = has_edge(sh, outside, inside);
    if (out_edge != in_edge) {
      notes.push_back("unreciprocated edge between " + std::to_string(inside) + " and " + std::to_string(outside));
    }
  }
  if (sh.laurent && is_integer(sh.lambda)) {
    // the derivative vanishes at k = -λ
    Rational z = -sh.lambda;
    int k = static_cast<int>(numerator(z).convert_to<long>());
    if (!(k > sh.min_exponent() && k < sh.max_exponent())) {
      notes.push_back("vanishing coefficient at exponent " + std::to_string(k) + " is not interior to the window");
    }
  }
  return notes;
}

std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SubmoduleReport socle_radical(const WeylModuleShape& shape, const std::string& name) {
  SubmoduleReport r;
  r.family = name;
  r.window = shape.window;
  Graph g = transition_graph(shape);
  r.exponents = g.nodes;
  Components comps = strongly_connected(g);
  std::size_t n = comps.members.size();
  std::vector<bool> sink(n, true), source(n, true);
  for (int k : g.nodes) {
    for (int t : g.out.at(k)) {
      std::size_t a = comps.of[k], b = comps.of[t];
      if (a != b) {
        sink[a] = false;
        source[b] = false;
      }
    }
  }
  std::set<int> soc, top;
  for (std::size_t i = 0; i < n; ++i) {
    if (sink[i]) soc.insert(comps.members[i].begin(), comps.members[i].end());
    if (source[i]) top.insert(comps.members[i].begin(), comps.members[i].end());
  }
  r.socle.assign(soc.begin(), soc.end());
  for (int k : g.nodes) {
    if (!top.count(k)) r.radical.push_back(k);
  }
  r.boundary_notes = boundary_problems(shape);
  r.status = r.boundary_notes.empty() ? BoundaryStatus::Clean : BoundaryStatus::Inconclusive;
  return r;
}

SubmoduleReport socle_radical(const WeightModuleSpec& spec) { return socle_radical(spec.shape(), spec.name()); }

namespace {

struct NodeData {
  Rational eigenvalue;
  bool a_kills = false;
  bool astar_kills = false;
};

// Action data of the subquotient spanned by nodes modulo the submodule `below`.
std::vector<NodeData> subquotient_data(const WeylModuleShape& sh, const std::vector<int>& nodes,
                                       const std::vector<int>& below) {
  std::set<int> quotient(below.begin(), below.end());
  std::vector<NodeData> out;
  for (int k : nodes) {
    NodeData d;
    d.eigenvalue = aa_star_eigenvalue(sh, k);
    for (auto gen : {WeylGenerator::A, WeylGenerator::AStar}) {
      auto [t, c] = move(sh, gen, k);
      bool kills = c == 0 || !sh.in_domain(t) || quotient.count(t) > 0;
      (gen == WeylGenerator::A ? d.a_kills : d.astar_kills) = kills;
    }
    out.push_back(d);
  }
  return out;
}

bool single_component(const WeylModuleShape& sh, const std::vector<int>& nodes) {
  if (nodes.empty()) return true;
  Graph g;
  g.nodes = nodes;
  std::set<int> in(nodes.begin(), nodes.end());
  for (int k : nodes) {
    g.out[k];
    for (int t : {k - 1, k + 1}) {
      if (in.count(t) && has_edge(sh, k, t)) g.out[k].insert(t);
    }
  }
  return strongly_connected(g).members.size() == 1;
}

struct Invariant {
  std::string type;
  std::vector<Rational> key;  // extremal eigenvalue, λ mod 1, or the full sorted profile
  friend bool operator==(const Invariant&, const Invariant&) = default;
};

Rational frac(const Rational& q) {
  Integer f = numerator(q) / denominator(q);
  Rational r = q - Rational(f);
  if (r < 0) r += 1;
  return r;
}

Invariant invariant_of(const WeylModuleShape& sh, const std::vector<int>& nodes, const std::vector<int>& below) {
  Invariant inv;
  if (nodes.empty()) {
    inv.type = "0";
    return inv;
  }
  auto data = subquotient_data(sh, nodes, below);
  bool a_kill = false, astar_kill = false;
  for (const auto& d : data) {
    a_kill |= d.a_kills;
    astar_kill |= d.astar_kills;
  }
  if (!single_component(sh, nodes) || (a_kill && astar_kill)) {
    inv.type = "reducible";
    for (const auto& d : data) {
      inv.key.push_back(d.eigenvalue);
      inv.key.push_back(d.a_kills ? 1 : 0);
      inv.key.push_back(d.astar_kills ? 1 : 0);
    }
    return inv;
  }
  if (a_kill) {
    inv.type = "V";
    for (const auto& d : data) {
      if (d.a_kills) inv.key.push_back(d.eigenvalue);
    }
  } else if (astar_kill) {
    inv.type = "cV";
    for (const auto& d : data) {
      if (d.astar_kills) inv.key.push_back(d.eigenvalue);
    }
  } else {
    inv.type = "W";
    inv.key.push_back(frac(data.front().eigenvalue));
  }
  return inv;
}

std::string spectrum_preview(const WeylModuleShape& sh, const std::vector<int>& nodes) {
  std::vector<Rational> ev;
  for (int k : nodes) ev.push_back(aa_star_eigenvalue(sh, k));
  std::sort(ev.begin(), ev.end(), [](const Rational& x, const Rational& y) { return abs(x) < abs(y); });
  std::string s = "{";
  for (std::size_t i = 0; i < ev.size() && i < 3; ++i) s += (i ? ", " : "") + to_string(ev[i]);
  return s + (ev.size() > 3 ? ", ...}" : "}");
}

std::string describe_mismatch(const WeylModuleShape& sh, const std::string& lhs_name, const Invariant& lhs,
                              const std::vector<int>& lhs_nodes, const std::string& rhs_name, const Invariant& rhs,
                              const std::vector<int>& rhs_nodes) {
  std::ostringstream w;
  w << lhs_name << " ≅ " << lhs.type << " but " << rhs_name << " ≅ " << rhs.type << "; ";
  std::string x = lhs.type, y = rhs.type;
  if (x == "cV" && y == "V") std::swap(x, y);
  w << x << " ≇ " << y;
  if (lhs.type != rhs.type) {
    w << " (aa* spectra " << spectrum_preview(sh, lhs_nodes) << " vs " << spectrum_preview(sh, rhs_nodes) << ")";
  } else {
    w << " (same type, different extremal aa*-eigenvalue)";
  }
  return w.str();
}

}  // namespace

std::string subquotient_type(const WeylModuleShape& shape, const std::vector<int>& nodes,
                             const std::vector<int>& below) {
  return invariant_of(shape, nodes, below).type;
}

InterlockReport weakly_interlocked(const WeylModuleShape& shape, const std::string& name) {
  InterlockReport r;
  r.submodules = socle_radical(shape, name);
  const auto& all = r.submodules.exponents;
  const auto& soc = r.submodules.socle;
  const auto& rad = r.submodules.radical;
  auto top_soc = difference(all, soc);
  auto top_rad = difference(all, rad);
  Invariant q_soc = invariant_of(shape, top_soc, soc);
  Invariant i_rad = invariant_of(shape, rad, {});
  Invariant q_rad = invariant_of(shape, top_rad, rad);
  Invariant i_soc = invariant_of(shape, soc, {});
  r.quotient_by_socle_type = q_soc.type;
  r.radical_type = i_rad.type;
  r.quotient_by_radical_type = q_rad.type;
  r.socle_type = i_soc.type;
  bool first = q_soc == i_rad;
  bool second = q_rad == i_soc;
  r.weakly_interlocked = first && second;
  if (r.weakly_interlocked) {
    r.witness = "W/Soc(W) ≅ Rad(W) ≅ " + q_soc.type + " and W/Rad(W) ≅ Soc(W) ≅ " + q_rad.type;
  } else if (!first) {
    r.witness = describe_mismatch(shape, "W/Soc(W)", q_soc, top_soc, "Rad(W)", i_rad, rad);
  } else {
    r.witness = describe_mismatch(shape, "W/Rad(W)", q_rad, top_rad, "Soc(W)", i_soc, soc);
  }
  return r;
}

InterlockReport weakly_interlocked(const WeightModuleSpec& spec) { return weakly_interlocked(spec.shape(), spec.name()); }

}  // namespace weylva
