#pragma once

#include "weylva/delta.hpp"
#include "weylva/echelon.hpp"
#include "weylva/induced_module.hpp"

#include <string>
#include <vector>

namespace weylva {

struct VertexInterlockReport {
  std::string module_name;
  int ell = 0;
  int depth = 0;
  int probe_depth = 0;
  std::vector<int> socle_level0;
  std::vector<int> radical_level0;
  bool matches_base = false;
  bool socle_multiplicities_ok = false;
  bool weakly_interlocked = false;
  std::string witness;
  BoundaryStatus status = BoundaryStatus::Clean;
  std::vector<std::string> notes;
};

// Socle/radical of M_0(Z) (or σ^ℓ M_0(Z)) by truncated graded-submodule generation from level 0.
VertexInterlockReport vertex_weakly_interlocked(const InducedTruncation& m, int probe_depth = 2);
VertexInterlockReport vertex_weakly_interlocked(const Flowed<InducedTruncation>& m, int probe_depth = 2);

struct SpectralFlowReport {
  std::string family;
  int ell = 0;
  int depth = 0;
  int window = 0;
  std::size_t commutator_checks = 0;
  std::size_t heisenberg_checks = 0;
  std::size_t virasoro_checks = 0;
  std::size_t delta_checks = 0;
  std::size_t escaping_images = 0;
  std::vector<std::string> failures;
  VertexInterlockReport interlock;
  bool passed() const { return failures.empty(); }
};

SpectralFlowReport verify_spectral_flow(const InducedTruncation& m, int ell, int probe_depth = 2);

// Generated submodule inside the truncation (levels <= max_level, exponents in the window).
template <ModeModule M>
EchelonSpan<InducedBasis> generate_submodule(const M& module, const InducedTruncation& underlying,
                                             const std::vector<InducedVector>& seeds,
                                             const std::vector<Generator>& labels, int max_level) {
  auto keep = [&](const InducedBasis& b) { return b.level() <= max_level && underlying.shape().in_window(b.exponent); };
  auto project = [&](const InducedVector& v) {
    InducedVector out;
    for (const auto& [b, c] : v) {
      if (keep(b)) out.add(b, c);
    }
    return out;
  };
  EchelonSpan<InducedBasis> span;
  std::vector<InducedVector> queue;
  for (const auto& s : seeds) {
    auto r = span.insert(project(s));
    if (!r.is_zero()) queue.push_back(r);
  }
  while (!queue.empty()) {
    InducedVector v = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : labels) {
      auto r = span.insert(project(module.act(g, v)));
      if (!r.is_zero()) queue.push_back(r);
    }
  }
  return span;
}

}  // namespace weylva
