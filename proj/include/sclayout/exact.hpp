#ifndef SCLAYOUT_EXACT_HPP
#define SCLAYOUT_EXACT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/tournament.hpp"

namespace sclayout {

/// Hard limits for the exponential solvers. Exceeding any of them raises CapacityError.
struct SolverCaps {
  std::size_t brute_n = 10;
  std::size_t subset_n = 24;
  std::size_t pure_k = 24;
  /// Upper bound on 2^k * (|P|+1) table entries for the pure-vertex DP.
  std::uint64_t pure_states = std::uint64_t{1} << 24;
};

namespace detail {

// Hard ceiling imposed by 32-bit subset masks.
inline constexpr std::size_t kMaskLimit = 30;

struct MaskGraph {
  std::vector<std::uint32_t> in;
  std::vector<std::uint32_t> out;
  std::vector<std::int64_t> indeg;
};

inline MaskGraph mask_graph(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  MaskGraph g{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0),
              std::vector<std::int64_t>(n, 0)};
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : d.in_neighbors(v)) g.in[v] |= std::uint32_t{1} << u;
    for (Vertex u : d.out_neighbors(v)) g.out[v] |= std::uint32_t{1} << u;
    g.indeg[v] = static_cast<std::int64_t>(d.indegree(v));
  }
  return g;
}

/// Change of |E(V\S, S)| when v joins S.
inline std::int64_t cut_delta(const MaskGraph& g, Vertex v, std::uint32_t s) {
  return g.indeg[v] - std::popcount(g.in[v] & s) - std::popcount(g.out[v] & s);
}

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap || n > kMaskLimit) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min(cap, kMaskLimit)));
  }
}

inline std::int64_t combine(Objective obj, std::int64_t acc, std::int64_t cut) {
  return obj == Objective::Cutwidth ? std::max(acc, cut) : acc + cut;
}

struct BruteSearch {
  const MaskGraph& g;
  Objective obj;
  std::size_t n;
  std::vector<Vertex> current;
  std::vector<Vertex> best_seq;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  void run(std::uint32_t placed, std::int64_t cut, std::int64_t acc) {
    if (current.size() == n) {
      if (acc < best) {
        best = acc;
        best_seq = current;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (placed & (std::uint32_t{1} << v)) continue;
      const std::int64_t next_cut = cut + cut_delta(g, v, placed);
      const std::int64_t next_acc = combine(obj, acc, next_cut);
      // Partial values never decrease, and only strict improvements replace the incumbent.
      if (next_acc >= best) continue;
      current.push_back(v);
      run(placed | (std::uint32_t{1} << v), next_cut, next_acc);
      current.pop_back();
    }
  }
};

}  // namespace detail

/// Exhaustive search over all orderings; returns the lexicographically least optimum.
[[nodiscard]] inline ExactResult brute_force_optimum(const Digraph& d, Objective obj,
                                                     const SolverCaps& caps = {}) {
  const std::size_t n = d.vertex_count();
  detail::require_cap(n, caps.brute_n, "brute force");
  const auto g = detail::mask_graph(d);
  detail::BruteSearch search{g, obj, n, {}, {}};
  search.current.reserve(n);
  search.run(0, 0, 0);
  return {obj, search.best, Ordering(std::move(search.best_seq)), "brute"};
}

/// Dynamic programming over vertex subsets, O(2^n * n).
[[nodiscard]] inline ExactResult subset_dp(const Digraph& d, Objective obj, const SolverCaps& caps = {}) {
  const std::size_t n = d.vertex_count();
  detail::require_cap(n, caps.subset_n, "subset dp");
  if (n == 0) return {obj, 0, Ordering{}, "subset-dp"};
  const auto g = detail::mask_graph(d);
  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  const std::size_t states = std::size_t{full} + 1;
  std::vector<std::uint16_t> cut(states, 0);
  std::vector<std::uint32_t> best(states, 0);
  std::vector<std::uint8_t> back(states, 0);

  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    const Vertex low = static_cast<Vertex>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    cut[s] = static_cast<std::uint16_t>(cut[rest] + detail::cut_delta(g, low, rest));
    std::uint32_t choice_value = std::numeric_limits<std::uint32_t>::max();
    std::uint8_t choice = 0;
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<std::uint8_t>(std::countr_zero(bits));
      const std::uint32_t candidate = best[s ^ (std::uint32_t{1} << v)];
      if (candidate < choice_value) {
        choice_value = candidate;
        choice = v;
      }
    }
    best[s] = obj == Objective::Cutwidth ? std::max<std::uint32_t>(choice_value, cut[s])
                                         : choice_value + cut[s];
    back[s] = choice;
    if (s == full) break;
  }

  std::vector<Vertex> seq(n);
  std::uint32_t s = full;
  for (std::size_t pos = n; pos-- > 0;) {
    seq[pos] = back[s];
    s ^= std::uint32_t{1} << back[s];
  }
  return {obj, static_cast<std::int64_t>(best[full]), Ordering(std::move(seq)), "subset-dp"};
}

/// Pure vertices sorted by indegree, ties by id.
[[nodiscard]] inline std::vector<Vertex> sorted_pure_vertices(const Digraph& d) {
  std::vector<Vertex> pure;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (is_pure(d, v)) pure.push_back(v);
  }
  std::stable_sort(pure.begin(), pure.end(),
                   [&](Vertex a, Vertex b) { return d.indegree(a) < d.indegree(b); });
  return pure;
}

/**
 * Exact solver in time 2^k * poly(n), k the number of non-pure vertices.
 *
 * Prefixes are X plus the first i pure vertices in sorted order, X ranging
 * over subsets of the non-pure vertices.
 */
[[nodiscard]] inline ExactResult pure_vertex_dp(const Digraph& d, Objective obj, const SolverCaps& caps = {}) {
  const std::size_t n = d.vertex_count();
  const std::vector<Vertex> pure = sorted_pure_vertices(d);
  std::vector<bool> is_pure_vertex(n, false);
  for (Vertex v : pure) is_pure_vertex[v] = true;
  std::vector<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_pure_vertex[v]) q.push_back(v);
  }
  const std::size_t k = q.size();
  const std::size_t p = pure.size();
  if (k > caps.pure_k || k > detail::kMaskLimit) {
    throw CapacityError("pure-vertex dp: " + std::to_string(k) + " non-pure vertices exceed cap " +
                        std::to_string(std::min(caps.pure_k, detail::kMaskLimit)));
  }
  const std::uint64_t subsets = std::uint64_t{1} << k;
  const std::uint64_t states = subsets * (p + 1);
  if (states > caps.pure_states) {
    throw CapacityError("pure-vertex dp: " + std::to_string(states) + " states exceed cap " +
                        std::to_string(caps.pure_states));
  }

  // Non-pure adjacency restricted to Q, in Q-index masks.
  std::vector<std::uint32_t> qin(k, 0), qout(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (d.has_arc(q[b], q[a])) qin[a] |= std::uint32_t{1} << b;
      if (d.has_arc(q[a], q[b])) qout[a] |= std::uint32_t{1} << b;
    }
  }
  std::vector<std::int64_t> deg_sum(subsets, 0), inner(subsets, 0);
  for (std::uint64_t x = 1; x < subsets; ++x) {
    const auto low = static_cast<std::size_t>(std::countr_zero(x));
    const auto rest = static_cast<std::uint32_t>(x & (x - 1));
    deg_sum[x] = deg_sum[rest] + static_cast<std::int64_t>(d.indegree(q[low]));
    inner[x] = inner[rest] + std::popcount(qin[low] & rest) + std::popcount(qout[low] & rest);
  }
  std::vector<std::int64_t> pure_deg_prefix(p + 1, 0);
  for (std::size_t i = 0; i < p; ++i) {
    pure_deg_prefix[i + 1] = pure_deg_prefix[i] + static_cast<std::int64_t>(d.indegree(pure[i]));
  }

  // Costs stay below n^3/4, so 32-bit entries suffice up to this size.
  if (n > 1600) throw CapacityError("pure-vertex dp: n=" + std::to_string(n) + " exceeds 1600");
  constexpr std::uint8_t kPureStep = 0xFF;
  const std::size_t width = p + 1;
  std::vector<std::uint32_t> value(states, 0);
  std::vector<std::uint8_t> back(states, 0);
  for (std::uint64_t x = 0; x < subsets; ++x) {
    const auto xs = static_cast<std::int64_t>(std::popcount(x));
    for (std::size_t i = 0; i <= p; ++i) {
      if (x == 0 && i == 0) continue;
      const auto ii = static_cast<std::int64_t>(i);
      const std::int64_t cut =
          deg_sum[x] + pure_deg_prefix[i] - (inner[x] + xs * ii + ii * (ii - 1) / 2);
      std::int64_t choice_value = std::numeric_limits<std::int64_t>::max();
      Vertex choice_vertex = std::numeric_limits<Vertex>::max();
      std::uint8_t choice = 0;
      if (i > 0) {
        choice_value = value[x * width + (i - 1)];
        choice_vertex = pure[i - 1];
        choice = kPureStep;
      }
      for (std::uint64_t bits = x; bits != 0; bits &= bits - 1) {
        const auto a = static_cast<std::size_t>(std::countr_zero(bits));
        const std::int64_t candidate = value[(x ^ (std::uint64_t{1} << a)) * width + i];
        if (candidate < choice_value || (candidate == choice_value && q[a] < choice_vertex)) {
          choice_value = candidate;
          choice_vertex = q[a];
          choice = static_cast<std::uint8_t>(a);
        }
      }
      value[x * width + i] = static_cast<std::uint32_t>(detail::combine(obj, choice_value, cut));
      back[x * width + i] = choice;
    }
  }

  std::vector<Vertex> seq(n);
  std::uint64_t x = subsets - 1;
  std::size_t i = p;
  for (std::size_t pos = n; pos-- > 0;) {
    const std::uint8_t step = back[x * width + i];
    if (step == kPureStep) {
      seq[pos] = pure[--i];
    } else {
      seq[pos] = q[step];
      x ^= std::uint64_t{1} << step;
    }
  }
  return {obj, static_cast<std::int64_t>(value[(subsets - 1) * width + p]), Ordering(std::move(seq)),
          "pure-dp"};
}

/// Per-size extremes of |E(V\A, A)| over all vertex subsets A.
struct PrefixCutProfile {
  std::vector<std::int64_t> max_at_size;
  std::vector<std::int64_t> min_at_size;
};

[[nodiscard]] inline PrefixCutProfile prefix_cut_profile(const Digraph& d, const SolverCaps& caps = {}) {
  const std::size_t n = d.vertex_count();
  detail::require_cap(n, caps.subset_n, "prefix cut profile");
  PrefixCutProfile profile{std::vector<std::int64_t>(n + 1, 0),
                           std::vector<std::int64_t>(n + 1, std::numeric_limits<std::int64_t>::max())};
  profile.min_at_size[0] = 0;
  const auto g = detail::mask_graph(d);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint16_t> cut(subsets, 0);
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const auto low = static_cast<Vertex>(std::countr_zero(s));
    const auto rest = static_cast<std::uint32_t>(s & (s - 1));
    cut[s] = static_cast<std::uint16_t>(cut[rest] + detail::cut_delta(g, low, rest));
    const auto size = static_cast<std::size_t>(std::popcount(s));
    profile.max_at_size[size] = std::max<std::int64_t>(profile.max_at_size[size], cut[s]);
    profile.min_at_size[size] = std::min<std::int64_t>(profile.min_at_size[size], cut[s]);
  }
  return profile;
}

enum class SolverChoice { Auto, Brute, SubsetDp, PureDp };

/// Auto dispatch: tournament sort, then pure-vertex DP, then subset DP.
[[nodiscard]] inline ExactResult solve_exact(const Digraph& d, Objective obj, const SolverCaps& caps = {},
                                             SolverChoice choice = SolverChoice::Auto) {
  switch (choice) {
    case SolverChoice::Brute:
      return brute_force_optimum(d, obj, caps);
    case SolverChoice::SubsetDp:
      return subset_dp(d, obj, caps);
    case SolverChoice::PureDp:
      return pure_vertex_dp(d, obj, caps);
    case SolverChoice::Auto:
      break;
  }
  if (is_tournament(d)) {
    auto both = tournament_exact(d);
    return obj == Objective::Cutwidth ? both.first : both.second;
  }
  const std::size_t n = d.vertex_count();
  std::size_t pure_count = 0;
  for (Vertex v = 0; v < n; ++v) pure_count += is_pure(d, v) ? 1 : 0;
  const std::size_t k = n - pure_count;
  if (k <= std::min(caps.pure_k, detail::kMaskLimit) &&
      (std::uint64_t{1} << k) * (pure_count + 1) <= caps.pure_states) {
    return pure_vertex_dp(d, obj, caps);
  }
  if (n <= caps.subset_n && n <= detail::kMaskLimit) return subset_dp(d, obj, caps);
  throw CapacityError("no exact solver applies: n=" + std::to_string(n) + ", non-pure=" + std::to_string(k));
}

struct CutwidthDecision {
  bool within = false;
  std::int64_t cutwidth = 0;
  /// Present when within is true.
  std::optional<Ordering> witness;
  std::string solver;
};

/// Is ctw(D) <= c? Witness ordering of width <= c when yes.
[[nodiscard]] inline CutwidthDecision decide_cutwidth(const Digraph& d, std::int64_t c,
                                                      const SolverCaps& caps = {}) {
  ExactResult r = solve_exact(d, Objective::Cutwidth, caps);
  CutwidthDecision out;
  out.cutwidth = r.value;
  out.within = r.value <= c;
  out.solver = r.solver;
  if (out.within) out.witness = std::move(r.ordering);
  return out;
}

}  // namespace sclayout

#endif  // SCLAYOUT_EXACT_HPP
