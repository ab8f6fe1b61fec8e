#ifndef SCLAYOUT_DIGRAPH_HPP
#define SCLAYOUT_DIGRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sclayout {

/// Vertices are dense 0-based indices internally; files and reports use 1-based ids.
using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Raised when an instance exceeds a configured solver cap. Never a silent truncation.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Simple digraph: no self-loops, no parallel arcs.
 *
 * Immutable after construction. Arc membership is answered from a dense
 * adjacency matrix, neighbourhoods from sorted adjacency lists.
 */
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(std::size_t n) : n_(n), matrix_(n * n, 0), out_(n), in_(n) {}

  /// Throws std::invalid_argument on self-loops, duplicate arcs or out-of-range endpoints.
  Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) {
      if (a.tail >= n || a.head >= n) {
        throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(a.tail) +
                                    "," + std::to_string(a.head) + ")");
      }
      if (a.tail == a.head) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a.tail));
      }
      auto& cell = matrix_[a.tail * n_ + a.head];
      if (cell != 0) {
        throw std::invalid_argument("duplicate arc (" + std::to_string(a.tail) + "," +
                                    std::to_string(a.head) + ")");
      }
      cell = 1;
      out_[a.tail].push_back(a.head);
      in_[a.head].push_back(a.tail);
    }
    for (auto& list : out_) std::sort(list.begin(), list.end());
    for (auto& list : in_) std::sort(list.begin(), list.end());
    arc_count_ = arcs.size();
  }

  Digraph(std::size_t n, const std::vector<Arc>& arcs) : Digraph(n, std::span<const Arc>(arcs)) {}

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t arc_count() const noexcept { return arc_count_; }

  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  [[nodiscard]] std::span<const Vertex> out_neighbors(Vertex u) const { return out_[u]; }
  [[nodiscard]] std::span<const Vertex> in_neighbors(Vertex u) const { return in_[u]; }
  [[nodiscard]] std::size_t outdegree(Vertex u) const { return out_[u].size(); }
  [[nodiscard]] std::size_t indegree(Vertex u) const { return in_[u].size(); }

  /// All arcs, sorted lexicographically by (tail, head).
  [[nodiscard]] std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : out_[u]) result.push_back({u, v});
    }
    return result;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/**
 * A vertex ordering, stored as the sequence of vertices by position.
 * Position p (0-based) holds the vertex conventional 1-based notation puts at p+1.
 */
class Ordering {
 public:
  Ordering() = default;

  explicit Ordering(std::vector<Vertex> sequence) : seq_(std::move(sequence)), pos_(seq_.size()) {
    std::vector<bool> seen(seq_.size(), false);
    for (std::size_t p = 0; p < seq_.size(); ++p) {
      const Vertex v = seq_[p];
      if (v >= seq_.size() || seen[v]) {
        throw std::invalid_argument("ordering is not a permutation of 0.." +
                                    std::to_string(seq_.size()) + "-1");
      }
      seen[v] = true;
      pos_[v] = static_cast<std::uint32_t>(p);
    }
  }

  static Ordering identity(std::size_t n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    return Ordering(std::move(seq));
  }

  [[nodiscard]] std::size_t size() const noexcept { return seq_.size(); }
  [[nodiscard]] Vertex at(std::size_t position) const { return seq_[position]; }
  [[nodiscard]] std::size_t position_of(Vertex v) const { return pos_[v]; }
  [[nodiscard]] std::span<const Vertex> sequence() const noexcept { return seq_; }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Vertex> seq_;
  std::vector<std::uint32_t> pos_;
};

/// cuts[i] = number of arcs from the last n-i vertices into the first i. Length n+1.
struct CutVector {
  std::vector<std::int64_t> cuts;

  [[nodiscard]] std::int64_t width() const {
    return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
  }
  [[nodiscard]] std::int64_t cost() const {
    return std::accumulate(cuts.begin(), cuts.end(), std::int64_t{0});
  }
  [[nodiscard]] std::size_t size() const noexcept { return cuts.size(); }
  std::int64_t operator[](std::size_t i) const { return cuts[i]; }

  friend bool operator==(const CutVector&, const CutVector&) = default;
};

/// Entrywise (product order) comparison a ⪯ b.
template <typename A, typename B>
[[nodiscard]] bool dominated_by(const A& a, const B& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch in product order");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

enum class Objective { Cutwidth, Ola };

inline const char* to_string(Objective obj) { return obj == Objective::Cutwidth ? "ctw" : "ola"; }

[[nodiscard]] inline std::int64_t objective_value(const CutVector& cv, Objective obj) {
  return obj == Objective::Cutwidth ? cv.width() : cv.cost();
}

/// Optimal value together with an ordering attaining it.
struct ExactResult {
  Objective objective = Objective::Cutwidth;
  std::int64_t value = 0;
  Ordering ordering;
  std::string solver;
};

/// O(n + m): every feedback arc (u,v) contributes to cuts pos(v)+1 .. pos(u).
[[nodiscard]] inline CutVector cut_vector(const Digraph& d, const Ordering& pi) {
  const std::size_t n = d.vertex_count();
  if (pi.size() != n) {
    throw std::invalid_argument("ordering has " + std::to_string(pi.size()) +
                                " vertices, digraph has " + std::to_string(n));
  }
  std::vector<std::int64_t> diff(n + 2, 0);
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t pu = pi.position_of(u);
    for (Vertex v : d.out_neighbors(u)) {
      const std::size_t pv = pi.position_of(v);
      if (pu > pv) {
        diff[pv + 1] += 1;
        diff[pu + 1] -= 1;
      }
    }
  }
  CutVector cv;
  cv.cuts.resize(n + 1, 0);
  std::int64_t running = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    running += diff[i];
    cv.cuts[i] = running;
  }
  return cv;
}

struct Classification {
  bool is_basic = true;
  bool is_semicomplete = true;
  bool is_tournament = true;
  std::vector<Vertex> pure_vertices;
  std::vector<std::size_t> indegrees;
  std::vector<std::size_t> outdegrees;

  [[nodiscard]] std::size_t non_pure_count() const { return indegrees.size() - pure_vertices.size(); }
};

/// A vertex is pure when it shares exactly one arc with every other vertex.
[[nodiscard]] inline bool is_pure(const Digraph& d, Vertex u) {
  const std::size_t n = d.vertex_count();
  if (d.indegree(u) + d.outdegree(u) != n - 1) return false;
  for (Vertex v : d.out_neighbors(u)) {
    if (d.has_arc(v, u)) return false;
  }
  return true;
}

[[nodiscard]] inline Classification classify(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  Classification c;
  c.indegrees.resize(n);
  c.outdegrees.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    c.indegrees[u] = d.indegree(u);
    c.outdegrees[u] = d.outdegree(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const bool uv = d.has_arc(u, v);
      const bool vu = d.has_arc(v, u);
      if (uv && vu) c.is_basic = false;
      if (!uv && !vu) c.is_semicomplete = false;
    }
    if (is_pure(d, u)) c.pure_vertices.push_back(u);
  }
  c.is_tournament = c.is_basic && c.is_semicomplete;
  return c;
}

[[nodiscard]] inline bool is_semicomplete(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (d.indegree(u) + d.outdegree(u) < n - 1) return false;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
    }
  }
  return true;
}

[[nodiscard]] inline bool is_tournament(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (d.arc_count() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  return is_semicomplete(d);
}

[[nodiscard]] inline Digraph complement(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve(n * (n - (n > 0 ? 1 : 0)) - d.arc_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

/// Induced subdigraph plus the map from new labels back to host vertices.
struct InducedSubdigraph {
  Digraph digraph;
  std::vector<Vertex> to_host;
};

/// New vertex i corresponds to vertices[i]; order of `vertices` is preserved.
[[nodiscard]] inline InducedSubdigraph induced_subdigraph(const Digraph& d,
                                                          std::span<const Vertex> vertices) {
  const std::size_t n = d.vertex_count();
  std::vector<std::int64_t> local(n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v >= n) throw std::invalid_argument("unknown vertex id " + std::to_string(v + 1));
    if (local[v] >= 0) throw std::invalid_argument("repeated vertex id " + std::to_string(v + 1));
    local[v] = static_cast<std::int64_t>(i);
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : d.out_neighbors(vertices[i])) {
      if (local[w] >= 0) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(local[w])});
    }
  }
  return {Digraph(vertices.size(), arcs), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

[[nodiscard]] inline InducedSubdigraph induced_subdigraph(const Digraph& d,
                                                          const std::vector<Vertex>& vertices) {
  return induced_subdigraph(d, std::span<const Vertex>(vertices));
}

/// D - Z, keeping the remaining vertices in ascending order.
[[nodiscard]] inline InducedSubdigraph delete_vertices(const Digraph& d, std::span<const Vertex> removed) {
  std::vector<bool> gone(d.vertex_count(), false);
  for (Vertex z : removed) {
    if (z >= d.vertex_count()) throw std::invalid_argument("unknown vertex id " + std::to_string(z + 1));
    gone[z] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subdigraph(d, keep);
}

/**
 * Strongly connected components in topological order: for i < j there is
 * no arc from a vertex of components[j] to a vertex of components[i].
 * Vertices inside a component are ascending. Iterative Tarjan.
 */
[[nodiscard]] inline std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next out-neighbour slot
  std::vector<std::vector<Vertex>> components;
  std::uint32_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      const auto outs = d.out_neighbors(v);
      if (slot < outs.size()) {
        const Vertex w = outs[slot++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  // Tarjan emits sink components first.
  std::reverse(components.begin(), components.end());
  return components;
}

}  // namespace sclayout

#endif  // SCLAYOUT_DIGRAPH_HPP
