#ifndef SCLAYOUT_KERNELS_HPP
#define SCLAYOUT_KERNELS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sclayout/digraph.hpp"

namespace sclayout {

struct OlaKernelOutput {
  bool reject = false;
  /// Non-trivial strong components kept, relabeled in ascending host order.
  InducedSubdigraph reduced;
};

/// Drops singleton strong components; rejects when more than 2k vertices remain.
[[nodiscard]] inline OlaKernelOutput ola_kernel(const Digraph& d, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("ola kernel needs k >= 0");
  std::vector<Vertex> keep;
  for (const auto& component : strongly_connected_components(d)) {
    if (component.size() > 1) keep.insert(keep.end(), component.begin(), component.end());
  }
  std::sort(keep.begin(), keep.end());
  OlaKernelOutput out;
  out.reject = static_cast<std::int64_t>(keep.size()) > 2 * k;
  out.reduced = induced_subdigraph(d, keep);
  return out;
}

/// Disjoint union with every arc from an earlier member to a later one; block-contiguous labels.
[[nodiscard]] inline Digraph and_compose(const std::vector<Digraph>& members) {
  if (members.empty()) throw std::invalid_argument("and_compose needs at least one digraph");
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (const Digraph& d : members) {
    if (!is_semicomplete(d)) throw std::invalid_argument("and_compose members must be semi-complete");
    offset.push_back(total);
    total += d.vertex_count();
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto base = static_cast<Vertex>(offset[i]);
    for (const Arc& a : members[i].arcs()) arcs.push_back({a.tail + base, a.head + base});
    const auto end = static_cast<Vertex>(offset[i] + members[i].vertex_count());
    for (Vertex u = base; u < end; ++u) {
      for (Vertex v = end; v < total; ++v) arcs.push_back({u, v});
    }
  }
  return Digraph(total, arcs);
}

}  // namespace sclayout

#endif  // SCLAYOUT_KERNELS_HPP
