#include "weylva/interlock.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weylva {

namespace {

struct Eigen {
  Rational l0;
  Rational j0;
  friend std::weak_ordering operator<=>(const Eigen&, const Eigen&) = default;
  friend bool operator==(const Eigen&, const Eigen&) = default;
};

std::string to_string(const Eigen& e) { return "(" + weylva::to_string(e.l0) + "," + weylva::to_string(e.j0) + ")"; }

template <ModeModule M>
std::optional<Eigen> joint_eigenvalue(const M& module, const InducedBasis& b) {
  InducedVector v(b);
  InducedVector l0 = virasoro_mode(module, 0, v);
  InducedVector j0 = heisenberg_mode(module, 0, v);
  Rational l = l0.coefficient(b);
  Rational j = j0.coefficient(b);
  if (!(l0 == v * l) || !(j0 == v * j)) return std::nullopt;
  return Eigen{l, j};
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Level-0 vectors of a subquotient that are killed by the given generator label (modulo `below`).
template <ModeModule M>
std::vector<int> extremal(const M& module, const std::vector<int>& nodes, const std::vector<int>& below,
                          const Generator& g) {
  std::set<int> quotient(below.begin(), below.end());
  std::vector<int> out;
  for (int k : nodes) {
    InducedVector img = module.act(g, induced_basis_vector(Bipartition{}, k));
    bool killed = true;
    for (const auto& [b, c] : img) {
      if (!(b.level() == 0 && quotient.count(b.exponent))) killed = false;
    }
    if (killed) out.push_back(k);
  }
  return out;
}

template <ModeModule M>
VertexInterlockReport interlock_impl(const M& module, const InducedTruncation& under, int ell, int probe_depth) {
  VertexInterlockReport r;
  r.module_name = (ell == 0 ? "" : "sigma^" + std::to_string(ell) + " ") + std::string("M_0(") + under.base().name() + ")";
  r.ell = ell;
  r.depth = under.depth();
  r.probe_depth = std::min(probe_depth, under.depth());
  int pd = r.probe_depth;

  std::vector<Generator> labels;
  for (int n = -std::max(pd, 1); n <= std::max(pd, 1); ++n) {
    labels.push_back(spectral_flow(Generator::a(n), -ell));
    labels.push_back(spectral_flow(Generator::a_star(n), -ell));
  }

  auto exps = under.base_exponents();
  std::map<int, std::set<int>> reach;
  for (int k : exps) {
    auto span = generate_submodule(module, under, {induced_basis_vector(Bipartition{}, k)}, labels, pd);
    for (int t : exps) {
      if (span.contains(induced_basis_vector(Bipartition{}, t))) reach[k].insert(t);
    }
  }
  // mutual reachability classes; sinks reach nothing outside, sources are reached from nothing outside
  std::set<int> soc, top;
  for (int k : exps) {
    bool sink = true, source = true;
    for (int t : reach[k]) {
      if (!reach[t].count(k)) sink = false;
    }
    for (int t : exps) {
      if (reach[t].count(k) && !reach[k].count(t)) source = false;
    }
    if (sink) soc.insert(k);
    if (source) top.insert(k);
  }
  r.socle_level0.assign(soc.begin(), soc.end());
  for (int k : exps) {
    if (!top.count(k)) r.radical_level0.push_back(k);
  }

  InterlockReport base = weakly_interlocked(under.base());
  r.matches_base = base.submodules.socle == r.socle_level0 && base.submodules.radical == r.radical_level0;
  r.status = base.submodules.status;
  r.notes = base.submodules.boundary_notes;
  if (!r.matches_base) r.notes.push_back("level-0 socle/radical differ from the base module computation");

  std::vector<InducedVector> seeds;
  for (int k : r.socle_level0) seeds.push_back(induced_basis_vector(Bipartition{}, k));
  auto soc_span = generate_submodule(module, under, seeds, labels, pd);
  r.socle_multiplicities_ok = true;
  std::map<int, std::size_t> per_level;
  for (const auto& [pivot, row] : soc_span.rows()) {
    ++per_level[pivot.level()];
    for (const auto& [b, c] : row) {
      if (!soc.count(b.exponent)) r.socle_multiplicities_ok = false;
    }
  }
  for (int j = 0; j <= pd; ++j) {
    if (per_level[j] != bipartition_count(j) * r.socle_level0.size()) r.socle_multiplicities_ok = false;
  }

  // invariants: level-0 isomorphism type of each subquotient plus joint (L0, J0) data of extremal vectors
  const auto& all = exps;
  const auto& rad = r.radical_level0;
  const auto& socv = r.socle_level0;
  auto top_soc = set_difference(all, socv);
  auto top_rad = set_difference(all, rad);
  const auto& shape = under.shape();
  Generator a0 = spectral_flow(Generator::a(0), -ell);
  Generator as0 = spectral_flow(Generator::a_star(0), -ell);
  auto profile = [&](const std::vector<int>& nodes, const std::vector<int>& below) {
    std::string type = subquotient_type(shape, nodes, below);
    std::vector<Eigen> ev;
    for (const auto& g : {a0, as0}) {
      for (int k : extremal(module, nodes, below, g)) {
        if (auto e = joint_eigenvalue(module, InducedBasis{Bipartition{}, k})) ev.push_back(*e);
      }
    }
    std::sort(ev.begin(), ev.end());
    return std::make_pair(type, ev);
  };
  auto q_soc = profile(top_soc, socv);
  auto i_rad = profile(rad, {});
  auto q_rad = profile(top_rad, rad);
  auto i_soc = profile(socv, {});
  bool first = q_soc == i_rad;
  bool second = q_rad == i_soc;
  r.weakly_interlocked = first && second;
  auto show = [](const std::pair<std::string, std::vector<Eigen>>& p) {
    std::string s = p.first + " [extremal (L0,J0):";
    for (const auto& e : p.second) s += " " + to_string(e);
    return s + "]";
  };
  if (r.weakly_interlocked) {
    r.witness = "W/Soc(W) ≅ Rad(W) and W/Rad(W) ≅ Soc(W) on level 0";
  } else {
    std::string x = first ? q_rad.first : q_soc.first;
    std::string y = first ? i_soc.first : i_rad.first;
    if (x == "cV" && y == "V") std::swap(x, y);
    std::ostringstream w;
    if (!first) {
      w << "W/Soc(W) ~ " << show(q_soc) << " but Rad(W) ~ " << show(i_rad);
    } else {
      w << "W/Rad(W) ~ " << show(q_rad) << " but Soc(W) ~ " << show(i_soc);
    }
    w << "; " << x << " ≇ " << y;
    r.witness = w.str();
  }
  return r;
}

}  // namespace

VertexInterlockReport vertex_weakly_interlocked(const InducedTruncation& m, int probe_depth) {
  return interlock_impl(m, m, 0, probe_depth);
}

VertexInterlockReport vertex_weakly_interlocked(const Flowed<InducedTruncation>& m, int probe_depth) {
  return interlock_impl(m, m.base(), m.ell(), probe_depth);
}

SpectralFlowReport verify_spectral_flow(const InducedTruncation& m, int ell, int probe_depth) {
  SpectralFlowReport r;
  r.family = m.base().name();
  r.ell = ell;
  r.depth = m.depth();
  r.window = m.base().window;
  Flowed<InducedTruncation> f(m, ell);

  std::vector<InducedVector> samples;
  for (int level = 0; level <= std::min(m.depth(), 1); ++level) {
    for (const auto& b : m.level_basis(level)) {
      if (std::abs(b.exponent) <= 1) samples.emplace_back(b);
    }
  }

  for (const auto& t : samples) {
    for (int i = -3; i <= 3; ++i) {
      for (int j = -3; j <= 3; ++j) {
        Generator a = Generator::a(i), as = Generator::a_star(j);
        InducedVector lhs = f.act(a, f.act(as, t)) - f.act(as, f.act(a, t));
        ++r.commutator_checks;
        if (!(lhs == t * contraction(a, as))) r.failures.push_back("[a~(" + std::to_string(i) + "), a*~(" + std::to_string(j) + ")]");
      }
    }
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        InducedVector jj = heisenberg_mode(f, i, heisenberg_mode(f, j, t)) - heisenberg_mode(f, j, heisenberg_mode(f, i, t));
        ++r.heisenberg_checks;
        if (!(jj == t * Rational(i + j == 0 ? -i : 0)))
          r.failures.push_back("[J~" + std::to_string(i) + ", J~" + std::to_string(j) + "] on " + to_string(t));
        InducedVector ll = virasoro_mode(f, i, virasoro_mode(f, j, t)) - virasoro_mode(f, j, virasoro_mode(f, i, t));
        InducedVector expected = virasoro_mode(f, i + j, t) * Rational(i - j);
        if (i + j == 0) expected.add(t, Rational(i * i * i - i, 6));
        ++r.virasoro_checks;
        if (!(ll == expected))
          r.failures.push_back("[L~" + std::to_string(i) + ", L~" + std::to_string(j) + "] on " + to_string(t));
      }
    }
    const std::vector<std::pair<std::string, FockVector>> fields = {
        {"a", alpha_state()}, {"a*", beta_state()}, {"J", heisenberg_j()}, {"omega", omega()}};
    for (const auto& [name, v] : fields) {
      for (int n = -2; n <= 2; ++n) {
        ++r.delta_checks;
        if (!(vertex_modes(f, v, n, t) == delta_twisted_mode(m, ell, v, n, t)))
          r.failures.push_back("Delta route differs for " + name + "_" + std::to_string(n) + " on " + to_string(t));
      }
    }
  }

  for (int level = 0; level <= m.depth(); ++level) {
    for (const auto& b : m.level_basis(level)) {
      for (int n = -1; n <= 1; ++n) {
        for (const auto& g : {Generator::a(n), Generator::a_star(n)}) {
          if (m.overflows(f.act(g, InducedVector(b)))) ++r.escaping_images;
        }
      }
    }
  }

  r.interlock = vertex_weakly_interlocked(f, probe_depth);
  if (!r.interlock.matches_base) r.failures.push_back("flowed level-0 socle/radical differ from the base module");
  if (!r.interlock.socle_multiplicities_ok) r.failures.push_back("flowed socle multiplicities differ from |P2(k)|");
  return r;
}

}  // namespace weylva
