#include "weylva/induced_module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weylva {

InducedTruncation::InducedTruncation(WeightModuleSpec base, int depth)
    : base_(std::move(base)), shape_(base_.shape()), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("induce: depth must be non-negative");
}

InducedTruncation induce(const WeightModuleSpec& spec, int depth) { return InducedTruncation(spec, depth); }

InducedVector induced_basis_vector(const Bipartition& creators, int exponent) {
  return InducedVector(InducedBasis{creators, exponent});
}

namespace {

void insert_part(Partition& p, int part) { p.insert(std::upper_bound(p.begin(), p.end(), part, std::greater<>()), part); }

// Removes one copy of part; returns its multiplicity before removal.
long remove_part(Partition& p, int part) {
  auto range = std::equal_range(p.begin(), p.end(), part, std::greater<>());
  long count = range.second - range.first;
  if (count > 0) p.erase(range.first);
  return count;
}

}  // namespace

InducedVector InducedTruncation::act(const Generator& g, const InducedVector& v) const {
  InducedVector out;
  for (const auto& [b, c] : v) {
    if (g.index == 0) {
      auto r = weyl_act(shape_, g.is_a() ? WeylGenerator::A : WeylGenerator::AStar, WeightVector(b.exponent));
      for (const auto& [k, w] : r.value) out.add(InducedBasis{b.creators, k}, c * w);
      continue;
    }
    InducedBasis t = b;
    if (g.index < 0) {
      insert_part(g.is_a() ? t.creators.first : t.creators.second, -g.index);
      out.add(t, c);
      continue;
    }
    if (g.is_a()) {
      long n = remove_part(t.creators.second, g.index);
      if (n) out.add(t, c * n);
    } else {
      long n = remove_part(t.creators.first, g.index);
      if (n) out.add(t, -c * n);
    }
  }
  return out;
}

int InducedTruncation::max_level(const InducedVector& v) const {
  int l = 0;
  for (const auto& [b, c] : v) l = std::max(l, b.level());
  return l;
}

std::vector<int> InducedTruncation::base_exponents() const {
  std::vector<int> e;
  for (int k = shape_.min_exponent(); k <= shape_.max_exponent(); ++k) e.push_back(k);
  return e;
}

std::vector<InducedBasis> InducedTruncation::level_basis(int level) const {
  std::vector<InducedBasis> out;
  for (const auto& bp : enumerate_bipartitions(level)) {
    for (int k : base_exponents()) out.push_back({bp, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t InducedTruncation::multiplicity(int level) const {
  return level_basis(level).size() / base_exponents().size();
}

bool InducedTruncation::overflows(const InducedVector& v) const {
  for (const auto& [b, c] : v) {
    if (b.level() > depth_ || !shape_.in_window(b.exponent)) return true;
  }
  return false;
}

ActionMatrix InducedTruncation::action_matrix(const Generator& g, int level) const {
  ActionMatrix m;
  m.source_level = level;
  m.target_level = level - g.index;
  auto source = level_basis(level);
  std::vector<InducedBasis> target;
  if (m.target_level >= 0) target = level_basis(m.target_level);
  for (std::size_t col = 0; col < source.size(); ++col) {
    InducedVector img = act(g, InducedVector(source[col]));
    for (const auto& [b, c] : img) {
      auto it = std::lower_bound(target.begin(), target.end(), b);
      if (it == target.end() || !(*it == b) || m.target_level > depth_) {
        m.overflow = true;
        continue;
      }
      m.entries.push_back({static_cast<std::size_t>(it - target.begin()), col, c});
    }
  }
  std::sort(m.entries.begin(), m.entries.end(),
            [](const SparseEntry& x, const SparseEntry& y) { return std::tie(x.row, x.col) < std::tie(y.row, y.col); });
  return m;
}

std::string to_string(const InducedBasis& b) {
  std::string s;
  std::vector<Generator> gens;
  for (int m : b.creators.first) gens.push_back(Generator::a(-m));
  for (int n : b.creators.second) gens.push_back(Generator::a_star(-n));
  if (!gens.empty()) s = to_string(ModeWord(gens)) + " ";
  return s + "x^" + std::to_string(b.exponent);
}

std::string to_string(const InducedVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [b, c] : v) {
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1) s += to_string(mag) + " * ";
    s += to_string(b);
    first = false;
  }
  return s;
}

AssociativityReport check_associativity(const InducedTruncation& m, int max_order) {
  AssociativityReport report;
  const std::vector<std::pair<std::string, FockVector>> fields = {
      {"a", alpha_state()}, {"a*", beta_state()}, {"J", heisenberg_j()}, {"omega", omega()}};
  auto exps = m.base_exponents();
  std::vector<int> samples;
  for (int k : exps) {
    if (std::abs(k) <= 1) samples.push_back(k);
  }
  for (const auto& [vname, v] : fields) {
    int K = 0;
    is_weight_homogeneous(v, &K);
    for (const auto& [wname, w] : fields) {
      int wt_w = 0;
      is_weight_homogeneous(w, &wt_w);
      for (int k : samples) {
        InducedVector u = induced_basis_vector(Bipartition{}, k);
        for (int alpha = -max_order; alpha <= max_order; ++alpha) {
          for (int beta = -max_order; beta <= max_order; ++beta) {
            InducedVector lhs;
            for (int j = 0;; ++j) {
              int p = K - 1 - j - alpha;
              int q = j - beta - 1;
              if (q > wt_w - 1) break;  // w_q u = 0 on level 0
              InducedVector wu = vertex_modes(m, w, q, u);
              if (wu.is_zero()) continue;
              lhs.add(vertex_modes(m, v, p, wu), Rational(binomial(j + alpha, j)));
            }
            InducedVector rhs;
            for (int i = 0; i <= K; ++i) {
              FockVector vw = vertex_modes(v, i - alpha - 1, w);
              if (vw.is_zero()) continue;
              rhs.add(vertex_modes(m, vw, K - i - beta - 1, u), Rational(binomial(K, i)));
            }
            ++report.checked;
            if (!(lhs == rhs)) {
              report.failures.push_back(vname + "," + wname + " on x^" + std::to_string(k) + " at (" +
                                        std::to_string(alpha) + "," + std::to_string(beta) + ")");
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace weylva
