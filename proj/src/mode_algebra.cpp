#include "weylva/mode_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylva {

int ModeWord::degree() const {
  int d = 0;
  for (const auto& g : gens_) d += g.degree();
  return d;
}

int ModeWord::charge() const {
  int q = 0;
  for (const auto& g : gens_) q += g.charge();
  return q;
}

bool ModeWord::is_normal_ordered() const { return std::is_sorted(gens_.begin(), gens_.end()); }

ModeWord operator*(const ModeWord& x, const ModeWord& y) {
  std::vector<Generator> gens = x.gens_;
  gens.insert(gens.end(), y.gens_.begin(), y.gens_.end());
  return ModeWord(std::move(gens));
}

ModeElement mode_scalar(const Rational& c) { return ModeElement(ModeWord{}, c); }

ModeElement mode_element(const ModeWord& w, const Rational& c) { return ModeElement(w, c); }

Rational contraction(const Generator& g1, const Generator& g2) {
  if (g1.kind == g2.kind || g1.index + g2.index != 0) return 0;
  return g1.is_a() ? 1 : -1;
}

ModeElement commutator(const Generator& g1, const Generator& g2) { return mode_scalar(contraction(g1, g2)); }

namespace {

// Appends g to a normal-ordered word and moves it left by adjacent transpositions.
void insert_right(const std::vector<Generator>& sorted, const Generator& g, const Rational& coefficient,
                  ModeElement& out) {
  std::size_t pos = sorted.size();
  while (pos > 0 && g < sorted[pos - 1]) {
    const Generator& passed = sorted[pos - 1];
    Rational c = contraction(passed, g);
    if (c != 0) {
      std::vector<Generator> rest;
      rest.reserve(sorted.size() - 1);
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i != pos - 1) rest.push_back(sorted[i]);
      }
      out.add(ModeWord(std::move(rest)), coefficient * c);
    }
    --pos;
  }
  std::vector<Generator> moved = sorted;
  moved.insert(moved.begin() + static_cast<long>(pos), g);
  out.add(ModeWord(std::move(moved)), coefficient);
}

}  // namespace

ModeElement normal_order(const ModeWord& w) {
  ModeElement current = mode_scalar(1);
  for (const auto& g : w.generators()) {
    ModeElement next;
    for (const auto& [word, c] : current) insert_right(word.generators(), g, c, next);
    current = std::move(next);
  }
  return current;
}

ModeElement normal_order(const ModeElement& e) {
  ModeElement out;
  for (const auto& [word, c] : e) {
    if (word.is_normal_ordered()) {
      out.add(word, c);
    } else {
      out.add(normal_order(word), c);
    }
  }
  return out;
}

ModeElement multiply(const ModeElement& e1, const ModeElement& e2) {
  ModeElement out;
  for (const auto& [w1, c1] : e1) {
    for (const auto& [w2, c2] : e2) out.add(normal_order(w1 * w2), c1 * c2);
  }
  return out;
}

ModeElement operator*(const ModeElement& e1, const ModeElement& e2) { return multiply(e1, e2); }

Generator spectral_flow(const Generator& g, int ell) {
  return g.is_a() ? Generator::a(g.index + ell) : Generator::a_star(g.index - ell);
}

ModeElement spectral_flow(const ModeElement& e, int ell) {
  ModeElement out;
  for (const auto& [word, c] : e) {
    std::vector<Generator> gens;
    gens.reserve(word.length());
    for (const auto& g : word.generators()) gens.push_back(spectral_flow(g, ell));
    out.add(normal_order(ModeWord(std::move(gens))), c);
  }
  return out;
}

std::map<std::pair<int, int>, ModeElement> bihomogeneous_components(const ModeElement& e) {
  std::map<std::pair<int, int>, ModeElement> parts;
  for (const auto& [word, c] : e) parts[{word.degree(), word.charge()}].add(word, c);
  return parts;
}

WeylElement weyl_scalar(const Rational& c) { return WeylElement(WeylMonomial{0, 0}, c); }
WeylElement weyl_a() { return WeylElement(WeylMonomial{0, 1}); }
WeylElement weyl_a_star() { return WeylElement(WeylMonomial{1, 0}); }

namespace {

// a^j a*^k = sum_r C(j,r) C(k,r) r! a*^(k-r) a^(j-r)
template <typename Emit>
void reorder(int j, int k, Emit&& emit) {
  for (int r = 0; r <= std::min(j, k); ++r) {
    Integer c = binomial(j, r) * binomial(k, r) * factorial(r);
    emit(k - r, j - r, Rational(c));
  }
}

}  // namespace

WeylElement operator*(const WeylElement& x, const WeylElement& y) {
  WeylElement out;
  for (const auto& [m1, c1] : x) {
    for (const auto& [m2, c2] : y) {
      Rational c = c1 * c2;
      reorder(m1.a_power, m2.astar_power, [&](int i, int j, const Rational& w) {
        out.add(WeylMonomial{m1.astar_power + i, j + m2.a_power}, c * w);
      });
    }
  }
  return out;
}

WeylElement weyl_power(const WeylElement& x, int n) {
  WeylElement r = weyl_scalar(1);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

WeylElement dixmier_phi(const WeylElement& w, const Rational& lambda) {
  if (lambda == 0) throw std::invalid_argument("dixmier_phi: lambda must be nonzero");
  WeylElement out;
  for (const auto& [m, c] : w) {
    // a*^i a^j -> (-1/lambda a)^i (lambda a*)^j
    Rational scale = c;
    int shift = m.a_power - m.astar_power;
    Rational lam_power = 1;
    for (int t = 0; t < std::abs(shift); ++t) lam_power *= lambda;
    if (shift < 0) lam_power = 1 / lam_power;
    scale *= lam_power;
    if (m.astar_power % 2 != 0) scale = -scale;
    reorder(m.astar_power, m.a_power, [&](int i, int j, const Rational& v) {
      out.add(WeylMonomial{i, j}, scale * v);
    });
  }
  return out;
}

WeylElement weyl_project(const ModeElement& e) {
  for (const auto& [word, c] : e) {
    if (word.degree() != 0)
      throw std::domain_error("weyl_project: input must be homogeneous of degree 0, found degree " +
                              std::to_string(word.degree()));
  }
  WeylElement out;
  for (const auto& [word, c] : normal_order(e)) {
    int i = 0;
    int j = 0;
    bool zero_mode = true;
    for (const auto& g : word.generators()) {
      if (g.index != 0) {
        zero_mode = false;
        break;
      }
      (g.is_a() ? j : i) += 1;
    }
    if (zero_mode) out.add(WeylMonomial{i, j}, c);
  }
  return out;
}

std::string to_string(const Generator& g) {
  return std::string(g.is_a() ? "a(" : "a*(") + std::to_string(g.index) + ")";
}

std::string to_string(const ModeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

namespace {

template <typename Key, typename Format>
std::string format_sum(const LinearCombination<Key>& e, Format&& format_key) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : e) {
    std::string body = format_key(key);
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (body.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << body;
    } else {
      out << to_string(mag) << " * " << body;
    }
    first = false;
  }
  return out.str();
}

}  // namespace

std::string to_string(const ModeElement& e) {
  return format_sum(e, [](const ModeWord& w) { return w.empty() ? std::string() : to_string(w); });
}

std::string to_string(const WeylElement& w) {
  return format_sum(w, [](const WeylMonomial& m) {
    std::string s;
    if (m.astar_power > 0) s += m.astar_power == 1 ? "a*" : "a*^" + std::to_string(m.astar_power);
    if (m.a_power > 0) {
      if (!s.empty()) s += ' ';
      s += m.a_power == 1 ? "a" : "a^" + std::to_string(m.a_power);
    }
    return s;
  });
}

}  // namespace weylva
