#ifndef SCLAYOUT_LEAN_HPP
#define SCLAYOUT_LEAN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/flow.hpp"
#include "sclayout/tournament.hpp"

namespace sclayout {

struct LeanViolation {
  std::size_t a = 0;
  std::size_t b = 0;
  /// min of cuts[a..b]
  std::int64_t min_cut = 0;
  FlowResult flow;
};

struct LeanCheck {
  bool lean = true;
  std::optional<LeanViolation> violation;
};

/// Flow from the suffix after position b into the prefix up to position a.
[[nodiscard]] inline FlowResult suffix_to_prefix_flow(const Digraph& d, const Ordering& pi, std::size_t a,
                                                      std::size_t b) {
  const auto seq = pi.sequence();
  return max_arc_disjoint_paths(d, seq.subspan(b), seq.subspan(0, a));
}

/**
 * Checks every pair 0 <= a <= b <= n. The first violation in (a, b)
 * lexicographic order is reported.
 */
[[nodiscard]] inline LeanCheck is_lean(const Digraph& d, const Ordering& pi) {
  const CutVector cv = cut_vector(d, pi);
  const std::size_t n = d.vertex_count();
  for (std::size_t a = 1; a < n; ++a) {
    std::int64_t running_min = cv[a];
    for (std::size_t b = a; b < n; ++b) {
      running_min = std::min(running_min, cv[b]);
      if (running_min == 0) break;
      FlowResult flow = suffix_to_prefix_flow(d, pi, a, b);
      if (flow.value < running_min) {
        return {false, LeanViolation{a, b, running_min, std::move(flow)}};
      }
    }
  }
  return {true, std::nullopt};
}

struct RefineStep {
  std::size_t a = 0;
  std::size_t b = 0;
  std::int64_t flow = 0;
  std::int64_t min_cut = 0;
  std::int64_t width_before = 0;
  std::int64_t width_after = 0;
  std::int64_t cost_before = 0;
  std::int64_t cost_after = 0;
};

struct LeanRefinement {
  Ordering ordering;
  std::vector<RefineStep> steps;
};

/// Repeatedly splits along a minimum cut of a violating pair until the ordering is lean.
[[nodiscard]] inline LeanRefinement lean_refine(const Digraph& d, const Ordering& start) {
  LeanRefinement out{start, {}};
  CutVector cv = cut_vector(d, out.ordering);
  while (true) {
    LeanCheck check = is_lean(d, out.ordering);
    if (check.lean) break;
    const LeanViolation& bad = *check.violation;
    std::vector<bool> source_side(d.vertex_count(), false);
    for (Vertex v : bad.flow.source_side) source_side[v] = true;
    std::vector<Vertex> front, back;
    for (Vertex v : out.ordering.sequence()) (source_side[v] ? back : front).push_back(v);
    front.insert(front.end(), back.begin(), back.end());
    Ordering next(std::move(front));
    CutVector next_cv = cut_vector(d, next);
    out.steps.push_back({bad.a, bad.b, bad.flow.value, bad.min_cut, cv.width(), next_cv.width(), cv.cost(),
                         next_cv.cost()});
    if (next_cv.cost() >= cv.cost()) {
      throw std::logic_error("lean refinement failed to decrease the arrangement cost");
    }
    out.ordering = std::move(next);
    cv = std::move(next_cv);
  }
  return out;
}

/// cuts[m] <= cuts[i] for every i within distance span of m (window clipped to [0,n]).
[[nodiscard]] inline bool is_milestone(const CutVector& cuts, std::size_t m, std::size_t span) {
  const std::size_t n = cuts.size() - 1;
  const std::size_t lo = m >= span ? m - span : 0;
  const std::size_t hi = std::min(n, m + span);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (cuts[i] < cuts[m]) return false;
  }
  return true;
}

/// Strict descent from p: jump to the smallest index in the window with a smaller cut.
[[nodiscard]] inline std::size_t find_milestone(const CutVector& cuts, std::size_t p, std::size_t span) {
  const std::size_t n = cuts.size() - 1;
  if (p > n) throw std::invalid_argument("position out of range");
  std::size_t m = p;
  while (true) {
    const std::size_t lo = m >= span ? m - span : 0;
    const std::size_t hi = std::min(n, m + span);
    std::optional<std::size_t> lower;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (cuts[i] < cuts[m]) {
        lower = i;
        break;
      }
    }
    if (!lower) return m;
    m = *lower;
  }
}

/// Greedy ascending scan for span-6c milestones pairwise more than 12c apart, always containing 0 and n.
[[nodiscard]] inline std::vector<std::size_t> dispersed_milestones(const CutVector& cuts, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("dispersed milestones need c >= 1");
  const std::size_t n = cuts.size() - 1;
  const auto uc = static_cast<std::size_t>(c);
  if (n <= 12 * uc) throw std::invalid_argument("dispersed milestones need n > 12c");
  if (cuts.width() > 2 * c) throw std::invalid_argument("dispersed milestones need width <= 2c");
  std::vector<std::size_t> chosen{0, n};
  for (std::size_t pos = 1; pos < n; ++pos) {
    if (!is_milestone(cuts, pos, 6 * uc)) continue;
    const bool far = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t m) {
      return (pos > m ? pos - m : m - pos) > 12 * uc;
    });
    if (far) chosen.push_back(pos);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

[[nodiscard]] constexpr std::int64_t turing_piece_bound(std::int64_t c) { return 24 * c * c + 40 * c + 1; }

struct KernelPiece {
  /// Host vertices of the piece in ordering order.
  std::vector<Vertex> vertices;
  Digraph digraph;
};

struct KernelOutput {
  bool reject = false;
  /// Ordering the pieces were cut from (the approximation when rejecting).
  Ordering ordering;
  CutVector cuts;
  std::vector<std::size_t> milestones;
  std::vector<KernelPiece> pieces;
};

/**
 * Splits a semi-complete digraph into pieces of at most 24c^2+40c+1 vertices
 * such that ctw(D) <= c iff every piece has cutwidth at most c.
 */
[[nodiscard]] inline KernelOutput turing_kernel(const Digraph& d, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("turing kernel needs c >= 1");
  if (!is_semicomplete(d)) throw std::invalid_argument("turing kernel requires a semi-complete digraph");
  const std::size_t n = d.vertex_count();
  const auto uc = static_cast<std::size_t>(c);
  KernelOutput out;
  ApproxResult approx = approximate_semicomplete(d);
  if (approx.width > 2 * c) {
    out.reject = true;
    out.ordering = std::move(approx.ordering);
    out.cuts = std::move(approx.cuts);
    return out;
  }
  if (n <= 12 * uc) {
    out.ordering = approx.ordering;
    out.cuts = approx.cuts;
    out.milestones = {0, n};
    out.pieces.push_back({std::vector<Vertex>(approx.ordering.sequence().begin(), approx.ordering.sequence().end()), d});
    return out;
  }
  out.ordering = lean_refine(d, approx.ordering).ordering;
  out.cuts = cut_vector(d, out.ordering);
  out.milestones = dispersed_milestones(out.cuts, c);

  const auto& pi = out.ordering;
  const auto pad = static_cast<std::int64_t>(6 * uc);
  for (std::size_t j = 1; j < out.milestones.size(); ++j) {
    const auto left = static_cast<std::int64_t>(out.milestones[j - 1]);
    const auto right = static_cast<std::int64_t>(out.milestones[j]);
    std::vector<bool> take(n, false);
    // Positions are 1-based here: block plus 6c positions on either side.
    const std::int64_t first = std::max<std::int64_t>(1, left - pad + 1);
    const std::int64_t last = std::min<std::int64_t>(static_cast<std::int64_t>(n), right + pad);
    for (std::int64_t p = first; p <= last; ++p) take[pi.at(static_cast<std::size_t>(p - 1))] = true;
    // Heads of arcs crossing the cut at left-6c, tails of those crossing at right+6c.
    const std::int64_t head_cut = left - pad;
    if (head_cut >= 1) {
      for (std::size_t p = static_cast<std::size_t>(head_cut); p < n; ++p) {
        for (Vertex w : d.out_neighbors(pi.at(p))) {
          if (pi.position_of(w) < static_cast<std::size_t>(head_cut)) take[w] = true;
        }
      }
    }
    const std::int64_t tail_cut = right + pad;
    if (tail_cut < static_cast<std::int64_t>(n)) {
      for (std::size_t p = static_cast<std::size_t>(tail_cut); p < n; ++p) {
        const Vertex u = pi.at(p);
        for (Vertex w : d.out_neighbors(u)) {
          if (pi.position_of(w) < static_cast<std::size_t>(tail_cut)) {
            take[u] = true;
            break;
          }
        }
      }
    }
    std::vector<Vertex> vertices;
    for (Vertex v : pi.sequence()) {
      if (take[v]) vertices.push_back(v);
    }
    Digraph piece = induced_subdigraph(d, vertices).digraph;
    out.pieces.push_back({std::move(vertices), std::move(piece)});
  }
  return out;
}

/// Conjunction of the oracle over all pieces; false on REJECT.
[[nodiscard]] inline bool evaluate_kernel(const KernelOutput& kernel,
                                          const std::function<bool(const Digraph&)>& within,
                                          bool parallel = false) {
  if (kernel.reject) return false;
  if (!parallel) {
    return std::all_of(kernel.pieces.begin(), kernel.pieces.end(),
                       [&](const KernelPiece& piece) { return within(piece.digraph); });
  }
  std::vector<std::future<bool>> answers;
  answers.reserve(kernel.pieces.size());
  for (const KernelPiece& piece : kernel.pieces) {
    answers.push_back(std::async(std::launch::async, [&within, &piece] { return within(piece.digraph); }));
  }
  bool all = true;
  for (auto& answer : answers) all = answer.get() && all;
  return all;
}

}  // namespace sclayout

#endif  // SCLAYOUT_LEAN_HPP
