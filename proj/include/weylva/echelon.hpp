#pragma once

#include "weylva/linear_combination.hpp"

#include <map>
#include <optional>

namespace weylva {

// Exact row-echelon basis of a subspace; each row is normalized so its largest key has coefficient 1.
template <typename Key>
class EchelonSpan {
 public:
  using Vector = LinearCombination<Key>;

  Vector reduce(Vector v) const {
    std::optional<Key> bound;
    while (!v.is_zero()) {
      const Key* pivot = nullptr;
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        if (bound && !(it->first < *bound)) continue;
        if (rows_.count(it->first)) {
          pivot = &it->first;
          break;
        }
      }
      if (!pivot) break;
      Key p = *pivot;
      Rational c = v.coefficient(p);
      v.add(rows_.at(p), -c);
      bound = p;
    }
    return v;
  }

  // Returns the reduced vector that was added, or zero if v was already in the span.
  Vector insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.is_zero()) return r;
    Key p = r.terms().rbegin()->first;
    r *= Rational(1) / r.coefficient(p);
    rows_.emplace(p, r);
    return r;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  std::size_t dimension() const { return rows_.size(); }
  const std::map<Key, Vector>& rows() const { return rows_; }

 private:
  std::map<Key, Vector> rows_;
};

}  // namespace weylva
