#include "weylva/bipartition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace weylva {

int Bipartition::total() const {
  return std::accumulate(first.begin(), first.end(), 0) + std::accumulate(second.begin(), second.end(), 0);
}

namespace {

void extend(int n, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  Partition prefix;
  extend(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_bipartitions: d must be non-negative, got " + std::to_string(d));
  std::vector<Bipartition> out;
  for (int s = 0; s <= d; ++s) {
    auto lhs = enumerate_partitions(s);
    auto rhs = enumerate_partitions(d - s);
    for (const auto& l : lhs) {
      for (const auto& r : rhs) out.push_back({l, r});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bipartition_count(int d) {
  static std::mutex mutex;
  static std::map<int, std::size_t> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::size_t n = enumerate_bipartitions(d).size();
  cache.emplace(d, n);
  return n;
}

Integer graded_dimension(int d, int j) {
  if (d < 0) throw std::invalid_argument("graded_dimension: d must be non-negative");
  // a PBW monomial is (a-part, a*-part with negative modes, r copies of a*_0)
  Integer count = 0;
  for (const auto& bp : enumerate_bipartitions(d)) {
    long r = static_cast<long>(j) + static_cast<long>(bp.first.size()) - static_cast<long>(bp.second.size());
    if (r >= 0) ++count;
  }
  return count;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string to_string(const Bipartition& bp) { return "(" + to_string(bp.first) + "," + to_string(bp.second) + ")"; }

}  // namespace weylva
