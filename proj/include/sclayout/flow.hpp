#ifndef SCLAYOUT_FLOW_HPP
#define SCLAYOUT_FLOW_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "sclayout/digraph.hpp"

namespace sclayout {

/// Maximum family of arc-disjoint source-to-sink paths with a matching minimum cut.
struct FlowResult {
  std::int64_t value = 0;
  /// Side containing the sinks.
  std::vector<Vertex> sink_side;
  /// Side residual-reachable from the sources.
  std::vector<Vertex> source_side;
  /// Arc-disjoint paths, each listed as its vertex sequence.
  std::vector<std::vector<Vertex>> paths;
};

/**
 * Unit-capacity max flow from a set of sources to a set of sinks,
 * by BFS augmenting paths (Edmonds-Karp).
 */
[[nodiscard]] inline FlowResult max_arc_disjoint_paths(const Digraph& d, std::span<const Vertex> sources,
                                                       std::span<const Vertex> sinks) {
  const std::size_t n = d.vertex_count();
  std::vector<std::int8_t> role(n, 0);  // 1 source, 2 sink
  for (Vertex s : sources) {
    if (s >= n) throw std::invalid_argument("source vertex out of range");
    role[s] = 1;
  }
  for (Vertex t : sinks) {
    if (t >= n) throw std::invalid_argument("sink vertex out of range");
    if (role[t] == 1) throw std::invalid_argument("source and sink sets overlap");
    role[t] = 2;
  }

  // Residual network: arc edges 0..2m-1 in forward/backward pairs, super-source S=n, super-sink T=n+1.
  struct Edge {
    std::uint32_t to;
    std::int32_t cap;
  };
  const std::uint32_t super_source = static_cast<std::uint32_t>(n);
  const std::uint32_t super_sink = super_source + 1;
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint32_t>> adj(n + 2);
  auto add_edge = [&](std::uint32_t u, std::uint32_t v, std::int32_t cap) {
    adj[u].push_back(static_cast<std::uint32_t>(edges.size()));
    edges.push_back({v, cap});
    adj[v].push_back(static_cast<std::uint32_t>(edges.size()));
    edges.push_back({u, 0});
  };
  const auto arcs = d.arcs();
  for (const Arc& a : arcs) add_edge(a.tail, a.head, 1);
  const auto unbounded = static_cast<std::int32_t>(arcs.size() + 1);
  for (Vertex s : sources) add_edge(super_source, s, unbounded);
  for (Vertex t : sinks) add_edge(t, super_sink, unbounded);

  FlowResult result;
  std::vector<std::int64_t> via(n + 2);
  while (!sources.empty() && !sinks.empty()) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<std::uint32_t> frontier;
    frontier.push(super_source);
    via[super_source] = -2;
    while (!frontier.empty() && via[super_sink] == -1) {
      const std::uint32_t u = frontier.front();
      frontier.pop();
      for (std::uint32_t e : adj[u]) {
        if (edges[e].cap > 0 && via[edges[e].to] == -1) {
          via[edges[e].to] = e;
          frontier.push(edges[e].to);
        }
      }
    }
    if (via[super_sink] == -1) break;
    for (std::uint32_t v = super_sink; v != super_source;) {
      const auto e = static_cast<std::uint32_t>(via[v]);
      edges[e].cap -= 1;
      edges[e ^ 1].cap += 1;
      v = edges[e ^ 1].to;
    }
    ++result.value;
  }

  // Cut: residual reachability from the super-source.
  std::vector<bool> reach(n + 2, false);
  std::vector<std::uint32_t> stack{super_source};
  reach[super_source] = true;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t e : adj[u]) {
      if (edges[e].cap > 0 && !reach[edges[e].to]) {
        reach[edges[e].to] = true;
        stack.push_back(edges[e].to);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (reach[v] ? result.source_side : result.sink_side).push_back(v);

  // Path decomposition of the flow on the original arcs; cycles in a walk are cut out.
  std::vector<std::vector<std::uint32_t>> used(n);
  for (std::uint32_t e = 0; e < 2 * arcs.size(); e += 2) {
    if (edges[e].cap == 0) used[arcs[e / 2].tail].push_back(arcs[e / 2].head);
  }
  std::vector<std::int64_t> demand(n, 0), drain(n, 0);
  for (std::uint32_t e = static_cast<std::uint32_t>(2 * arcs.size()); e < edges.size(); e += 2) {
    const std::uint32_t from = edges[e ^ 1].to;
    if (from == super_source) demand[edges[e].to] += edges[e ^ 1].cap;
    if (edges[e].to == super_sink) drain[from] += edges[e ^ 1].cap;
  }
  for (Vertex s : sources) {
    while (demand[s] > 0) {
      --demand[s];
      std::vector<Vertex> walk{s};
      std::vector<std::int64_t> at(n, -1);
      at[s] = 0;
      Vertex v = s;
      // Conservation guarantees a unit of flow leaves every vertex the walk enters.
      while (drain[v] == 0) {
        if (used[v].empty()) throw std::logic_error("flow decomposition ran out of arcs");
        const Vertex w = used[v].back();
        used[v].pop_back();
        if (at[w] >= 0) {
          for (std::size_t i = static_cast<std::size_t>(at[w]) + 1; i < walk.size(); ++i) at[walk[i]] = -1;
          walk.resize(static_cast<std::size_t>(at[w]) + 1);
        } else {
          at[w] = static_cast<std::int64_t>(walk.size());
          walk.push_back(w);
        }
        v = w;
      }
      --drain[v];
      result.paths.push_back(std::move(walk));
    }
  }
  return result;
}

[[nodiscard]] inline FlowResult max_arc_disjoint_paths(const Digraph& d, const std::vector<Vertex>& sources,
                                                       const std::vector<Vertex>& sinks) {
  return max_arc_disjoint_paths(d, std::span<const Vertex>(sources), std::span<const Vertex>(sinks));
}

/// Number of arcs from `from` into `to`.
[[nodiscard]] inline std::int64_t arcs_between(const Digraph& d, std::span<const Vertex> from,
                                               std::span<const Vertex> to) {
  std::vector<bool> in_to(d.vertex_count(), false);
  for (Vertex v : to) in_to[v] = true;
  std::int64_t count = 0;
  for (Vertex u : from) {
    for (Vertex v : d.out_neighbors(u)) count += in_to[v] ? 1 : 0;
  }
  return count;
}

}  // namespace sclayout

#endif  // SCLAYOUT_FLOW_HPP
