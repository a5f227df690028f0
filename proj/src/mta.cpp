#include "weylva/mta.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylva {

ModeWord creator_word(const Bipartition& bp) {
  std::vector<Generator> gens;
  for (int m : bp.first) gens.push_back(Generator::a(-m));
  for (int n : bp.second) gens.push_back(Generator::a_star(-n));
  return ModeWord(std::move(gens));
}

ModeWord annihilator_word(const Bipartition& bp) {
  std::vector<Generator> gens;
  for (auto it = bp.first.rbegin(); it != bp.first.rend(); ++it) gens.push_back(Generator::a_star(*it));
  for (auto it = bp.second.rbegin(); it != bp.second.rend(); ++it) gens.push_back(Generator::a(*it));
  return ModeWord(std::move(gens));
}

WeylElement circledast(const ModeWord& beta, const ModeWord& alpha) {
  if (beta.degree() + alpha.degree() != 0) return WeylElement{};
  return weyl_project(normal_order(beta * alpha));
}

namespace {

std::mutex& constant_mutex() {
  static std::mutex m;
  return m;
}

std::map<Bipartition, Integer>& constant_cache() {
  static std::map<Bipartition, Integer> cache;
  return cache;
}

// pairing(q, q') = annihilator(q) ⊛ creator(q'), memoized
const WeylElement& pairing(const Bipartition& q, const Bipartition& qp) {
  static std::mutex mutex;
  static std::map<std::pair<Bipartition, Bipartition>, WeylElement> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(q, qp);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, circledast(annihilator_word(q), creator_word(qp))).first;
  return it->second;
}

}  // namespace

Integer contraction_constant(const Bipartition& bp) {
  {
    std::lock_guard lock(constant_mutex());
    auto it = constant_cache().find(bp);
    if (it != constant_cache().end()) return it->second;
  }
  WeylElement w = circledast(annihilator_word(bp), creator_word(bp));
  Rational c = w.coefficient(WeylMonomial{0, 0});
  if (w.is_zero() || c == 0) throw std::logic_error("contraction_constant: zero contraction for " + to_string(bp));
  if (w.size() != 1 || !is_integer(c))
    throw std::logic_error("contraction_constant: non-scalar contraction for " + to_string(bp) + ": " + to_string(w));
  std::lock_guard lock(constant_mutex());
  return constant_cache().emplace(bp, numerator(c)).first->second;
}

void MTAElement::add(const Bipartition& row, const Bipartition& col, const WeylElement& w) {
  if (row.total() != d1_ || col.total() != -d2_) {
    throw std::invalid_argument("MTAElement: entry " + to_string(row) + "," + to_string(col) +
                                " does not match bidegree (" + std::to_string(d1_) + "," + std::to_string(d2_) + ")");
  }
  if (w.is_zero()) return;
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, w);
    return;
  }
  it->second += w;
  if (it->second.is_zero()) entries_.erase(it);
}

WeylElement MTAElement::entry(const Bipartition& row, const Bipartition& col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? WeylElement{} : it->second;
}

MTAElement epsilon(const Bipartition& row, const Bipartition& col, const WeylElement& middle) {
  MTAElement x(row.total(), -col.total());
  x.add(row, col, middle);
  return x;
}

MTAElement star(const MTAElement& x, const MTAElement& y) {
  MTAElement out(x.d1(), y.d2());
  if (-x.d2() != y.d1()) return out;
  for (const auto& [xk, xw] : x.entries()) {
    for (const auto& [yk, yw] : y.entries()) {
      const WeylElement& middle = pairing(xk.second, yk.first);
      if (middle.is_zero()) continue;
      out.add(xk.first, yk.second, xw * middle * yw);
    }
  }
  return out;
}

MTAElement unity(int d) {
  if (d < 0) throw std::invalid_argument("unity: d must be non-negative");
  MTAElement u(d, -d);
  for (const auto& bp : enumerate_bipartitions(d)) {
    u.add(bp, bp, weyl_scalar(Rational(1) / Rational(contraction_constant(bp))));
  }
  return u;
}

StrongUnityReport verify_strong_unity(int n, int m) { return verify_strong_unity(n, m, unity); }

StrongUnityReport verify_strong_unity(int n, int m, const std::function<MTAElement(int)>& unity_for) {
  if (n < 0 || m < 0) throw std::invalid_argument("verify_strong_unity: n and m must be non-negative");
  StrongUnityReport report;
  report.n = n;
  report.m = m;
  MTAElement left = unity_for(n);
  MTAElement right = unity_for(m);
  const std::vector<std::pair<std::string, WeylElement>> middles = {
      {"1", weyl_scalar(1)}, {"a", weyl_a()}, {"a*", weyl_a_star()}};
  for (const auto& row : enumerate_bipartitions(n)) {
    for (const auto& col : enumerate_bipartitions(m)) {
      for (const auto& [name, w] : middles) {
        MTAElement x = epsilon(row, col, w);
        ++report.checked;
        if (!(star(left, x) == x)) {
          report.failures.push_back("I_" + std::to_string(n) + " * eps[" + to_string(row) + "," + to_string(col) +
                                    "; " + name + "] != eps");
        }
        if (!(star(x, right) == x)) {
          report.failures.push_back("eps[" + to_string(row) + "," + to_string(col) + "; " + name + "] * I_" +
                                    std::to_string(m) + " != eps");
        }
      }
    }
  }
  return report;
}

WeylMatrix WeylMatrix::identity(std::size_t n) {
  WeylMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = weyl_scalar(1);
  return m;
}

WeylMatrix operator*(const WeylMatrix& x, const WeylMatrix& y) {
  if (x.size != y.size) throw std::invalid_argument("WeylMatrix: size mismatch");
  WeylMatrix out(x.size);
  for (std::size_t i = 0; i < x.size; ++i) {
    for (std::size_t k = 0; k < x.size; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.size; ++j) {
        if (!y.at(k, j).is_zero()) out.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    }
  }
  return out;
}

namespace {

std::size_t index_of(const std::vector<Bipartition>& basis, const Bipartition& bp) {
  auto it = std::lower_bound(basis.begin(), basis.end(), bp);
  if (it == basis.end() || !(*it == bp)) throw std::invalid_argument("bipartition not in basis: " + to_string(bp));
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

WeylMatrix matrix_iso(const MTAElement& x) {
  if (x.d1() != -x.d2()) throw std::invalid_argument("matrix_iso: element must have bidegree (d, -d)");
  auto basis = enumerate_bipartitions(x.d1());
  WeylMatrix m(basis.size());
  for (const auto& [key, w] : x.entries()) {
    m.at(index_of(basis, key.first), index_of(basis, key.second)) +=
        w * weyl_scalar(Rational(contraction_constant(key.second)));
  }
  return m;
}

MTAElement matrix_iso_inverse(const WeylMatrix& m, int d) {
  auto basis = enumerate_bipartitions(d);
  if (m.size != basis.size()) throw std::invalid_argument("matrix_iso_inverse: matrix size does not match |P2(d)|");
  MTAElement x(d, -d);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      x.add(basis[r], basis[c], m.at(r, c) * weyl_scalar(Rational(1) / Rational(contraction_constant(basis[c]))));
    }
  }
  return x;
}

ZhuBlockDescriptor zhu_structure(int d) {
  if (d < 0) throw std::invalid_argument("zhu_structure: d must be non-negative");
  ZhuBlockDescriptor z;
  z.level = d;
  std::vector<MTAElement> unities;
  for (int j = 0; j <= d; ++j) {
    std::size_t n = bipartition_count(j);
    z.block_sizes.push_back(n);
    z.total += n * n;
    unities.push_back(unity(j));
    z.unity_idempotent.push_back(star(unities.back(), unities.back()) == unities.back());
  }
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k <= d; ++k) {
      if (j != k && !star(unities[static_cast<std::size_t>(j)], unities[static_cast<std::size_t>(k)]).is_zero())
        z.unities_orthogonal = false;
    }
  }
  return z;
}

ModeElement zhu_symbol(const FockVector& u) {
  if (!is_weight_homogeneous(u)) throw std::invalid_argument("zhu_symbol: u must be L0-homogeneous");
  ModeElement out;
  for (const auto& [m, c] : u) {
    bool killed = false;
    std::vector<Generator> gens;
    for (int n : m.astar_indices) {
      if (n != 0) {
        killed = true;
        break;
      }
      gens.push_back(Generator::a_star(0));
    }
    if (killed) continue;
    int sign_exponent = 0;
    for (int idx : m.a_indices) {
      sign_exponent += -idx - 1;
      gens.push_back(Generator::a(0));
    }
    out.add(ModeWord(std::move(gens)), sign_exponent % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

}  // namespace weylva
