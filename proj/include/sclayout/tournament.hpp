#ifndef SCLAYOUT_TOURNAMENT_HPP
#define SCLAYOUT_TOURNAMENT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "sclayout/digraph.hpp"

namespace sclayout {

using Rational = boost::rational<std::int64_t>;

/// Cut vector with exact rational entries.
struct RationalCutVector {
  std::vector<Rational> cuts;

  [[nodiscard]] Rational width() const {
    Rational best{0};
    for (const auto& c : cuts) best = std::max(best, c);
    return best;
  }
  [[nodiscard]] Rational cost() const {
    return std::accumulate(cuts.begin(), cuts.end(), Rational{0});
  }
  [[nodiscard]] std::size_t size() const noexcept { return cuts.size(); }
  const Rational& operator[](std::size_t i) const { return cuts[i]; }
};

namespace detail {

/// Entry i sums weight(u,v) over u after position i and v at or before it.
template <typename WeightFn>
RationalCutVector rational_cut_vector(std::size_t n, const Ordering& pi, WeightFn&& weight) {
  if (pi.size() != n) throw std::invalid_argument("ordering size does not match vertex count");
  std::vector<Rational> diff(n + 2, Rational{0});
  for (std::size_t pv = 0; pv < n; ++pv) {
    for (std::size_t pu = pv + 1; pu < n; ++pu) {
      const Rational w = weight(pi.at(pu), pi.at(pv));
      if (w != Rational{0}) {
        diff[pv + 1] += w;
        diff[pu + 1] -= w;
      }
    }
  }
  RationalCutVector cv;
  cv.cuts.resize(n + 1);
  Rational running{0};
  for (std::size_t i = 0; i <= n; ++i) {
    running += diff[i];
    cv.cuts[i] = running;
  }
  return cv;
}

inline Ordering sort_by_key(const std::vector<Rational>& key) {
  std::vector<Vertex> seq(key.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
  return Ordering(std::move(seq));
}

inline Ordering sort_by_key(const std::vector<std::int64_t>& key) {
  std::vector<Vertex> seq(key.size());
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
  return Ordering(std::move(seq));
}

}  // namespace detail

/**
 * Weight function with w(u,v) + w(v,u) = 1 for all u != v.
 */
class FractionalTournament {
 public:
  FractionalTournament() = default;

  /// `weights` is row-major n*n; throws std::invalid_argument on invariant violations.
  FractionalTournament(std::size_t n, std::vector<Rational> weights) : n_(n), w_(std::move(weights)) {
    if (w_.size() != n * n) throw std::invalid_argument("weight matrix must have n*n entries");
    for (std::size_t u = 0; u < n; ++u) {
      if (w_[u * n + u] != Rational{0}) throw std::invalid_argument("nonzero diagonal weight");
      for (std::size_t v = u + 1; v < n; ++v) {
        const Rational a = w_[u * n + v];
        const Rational b = w_[v * n + u];
        if (a < Rational{0} || b < Rational{0}) throw std::invalid_argument("negative weight");
        if (a + b != Rational{1}) throw std::invalid_argument("pair weights do not sum to 1");
      }
    }
    in_.assign(n, Rational{0});
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) in_[v] += w_[u * n + v];
    }
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] const Rational& weight(Vertex u, Vertex v) const { return w_[u * n_ + v]; }
  [[nodiscard]] const Rational& in_weight(Vertex v) const { return in_[v]; }
  [[nodiscard]] Rational out_weight(Vertex v) const {
    return Rational(static_cast<std::int64_t>(n_ - 1)) - in_[v];
  }
  [[nodiscard]] const std::vector<Rational>& in_weights() const noexcept { return in_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> w_;
  std::vector<Rational> in_;
};

[[nodiscard]] inline RationalCutVector cut_vector(const FractionalTournament& t, const Ordering& pi) {
  return detail::rational_cut_vector(t.vertex_count(), pi,
                                     [&](Vertex u, Vertex v) { return t.weight(u, v); });
}

/// Single arc -> weight 1/0, symmetric pair -> 1/2 each.
[[nodiscard]] inline FractionalTournament relaxation(const Digraph& d) {
  if (!is_semicomplete(d)) throw std::invalid_argument("relaxation requires a semi-complete digraph");
  const std::size_t n = d.vertex_count();
  std::vector<Rational> w(n * n, Rational{0});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !d.has_arc(u, v)) continue;
      w[u * n + v] = d.has_arc(v, u) ? Rational(1, 2) : Rational(1);
    }
  }
  return FractionalTournament(n, std::move(w));
}

/// Non-decreasing fractional indegree, ties by vertex id.
[[nodiscard]] inline Ordering sorted_ordering(const FractionalTournament& t) {
  return detail::sort_by_key(t.in_weights());
}

[[nodiscard]] inline bool is_sorted_ordering(const FractionalTournament& t, const Ordering& pi) {
  for (std::size_t p = 1; p < pi.size(); ++p) {
    if (t.in_weight(pi.at(p - 1)) > t.in_weight(pi.at(p))) return false;
  }
  return true;
}

/// Twice the relaxed indegree, in integers: 2 per single in-arc, 1 per symmetric pair.
[[nodiscard]] inline std::vector<std::int64_t> doubled_relaxed_indegrees(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::int64_t> key(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : d.in_neighbors(v)) key[v] += d.has_arc(v, u) ? 1 : 2;
  }
  return key;
}

/// Sorted ordering of the relaxation without building rational weights.
[[nodiscard]] inline Ordering relaxation_sorted_ordering(const Digraph& d) {
  if (!is_semicomplete(d)) throw std::invalid_argument("expected a semi-complete digraph");
  return detail::sort_by_key(doubled_relaxed_indegrees(d));
}

/// Both optima of a tournament, realized by its sorted ordering.
[[nodiscard]] inline std::pair<ExactResult, ExactResult> tournament_exact(const Digraph& d) {
  if (!is_tournament(d)) throw std::invalid_argument("tournament_exact requires a tournament");
  std::vector<std::int64_t> indeg(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) indeg[v] = static_cast<std::int64_t>(d.indegree(v));
  Ordering pi = detail::sort_by_key(indeg);
  const CutVector cv = cut_vector(d, pi);
  ExactResult ctw{Objective::Cutwidth, cv.width(), pi, "tournament-sorted"};
  ExactResult ola{Objective::Ola, cv.cost(), pi, "tournament-sorted"};
  return {std::move(ctw), std::move(ola)};
}

struct ApproxResult {
  Ordering ordering;
  CutVector cuts;
  std::int64_t width = 0;
  std::int64_t cost = 0;
};

/// Sorted ordering of the relaxation; width and cost are within twice the optima.
[[nodiscard]] inline ApproxResult approximate_semicomplete(const Digraph& d) {
  Ordering pi = relaxation_sorted_ordering(d);
  CutVector cv = cut_vector(d, pi);
  const auto w = cv.width();
  const auto c = cv.cost();
  return {std::move(pi), std::move(cv), w, c};
}

/// Exact lower bound ceil(ctw of the relaxation) on the cutwidth of a semi-complete digraph.
[[nodiscard]] inline std::int64_t relaxation_cutwidth_lower_bound(const Digraph& d) {
  const Ordering pi = relaxation_sorted_ordering(d);
  const std::size_t n = d.vertex_count();
  // Doubled relaxed cut at i: sum of doubled indegrees over the prefix minus 2*C(i,2).
  const auto key = doubled_relaxed_indegrees(d);
  std::int64_t prefix = 0;
  std::int64_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    prefix += key[pi.at(i - 1)];
    const auto doubled = prefix - static_cast<std::int64_t>(i * (i - 1));
    best = std::max(best, doubled);
  }
  return (best + 1) / 2;
}

/**
 * Non-negative weights with a positive sum on every pair.
 */
class WeightedSemicomplete {
 public:
  WeightedSemicomplete() = default;

  WeightedSemicomplete(std::size_t n, std::vector<Rational> weights) : n_(n), w_(std::move(weights)) {
    if (w_.size() != n * n) throw std::invalid_argument("weight matrix must have n*n entries");
    for (std::size_t u = 0; u < n; ++u) {
      if (w_[u * n + u] != Rational{0}) throw std::invalid_argument("nonzero diagonal weight");
      for (std::size_t v = u + 1; v < n; ++v) {
        const Rational a = w_[u * n + v];
        const Rational b = w_[v * n + u];
        if (a < Rational{0} || b < Rational{0}) throw std::invalid_argument("negative weight");
        if (a + b == Rational{0}) {
          throw std::invalid_argument("pair (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                      ") has zero total weight");
        }
      }
    }
  }

  /// Unit weight per arc of a semi-complete digraph.
  static WeightedSemicomplete from_digraph(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<Rational> w(n * n, Rational{0});
    for (const Arc& a : d.arcs()) w[a.tail * n + a.head] = 1;
    return WeightedSemicomplete(n, std::move(w));
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] const Rational& weight(Vertex u, Vertex v) const { return w_[u * n_ + v]; }
  [[nodiscard]] Rational pair_sum(Vertex u, Vertex v) const { return weight(u, v) + weight(v, u); }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> w_;
};

[[nodiscard]] inline RationalCutVector cut_vector(const WeightedSemicomplete& w, const Ordering& pi) {
  return detail::rational_cut_vector(w.vertex_count(), pi,
                                     [&](Vertex u, Vertex v) { return w.weight(u, v); });
}

/// w'(u,v) = w(u,v) / (w(u,v) + w(v,u)).
[[nodiscard]] inline FractionalTournament normalize(const WeightedSemicomplete& w) {
  const std::size_t n = w.vertex_count();
  std::vector<Rational> out(n * n, Rational{0});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) out[u * n + v] = w.weight(u, v) / w.pair_sum(u, v);
    }
  }
  return FractionalTournament(n, std::move(out));
}

struct WeightedApprox {
  Ordering ordering;
  Rational factor{1};
  Rational max_pair_sum{0};
  Rational min_pair_sum{0};
};

/// Sorted ordering of the normalized weights; factor = max pair sum / min pair sum.
[[nodiscard]] inline WeightedApprox weighted_approx(const WeightedSemicomplete& w) {
  const std::size_t n = w.vertex_count();
  WeightedApprox result;
  result.ordering = sorted_ordering(normalize(w));
  bool first = true;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Rational s = w.pair_sum(u, v);
      if (first) {
        result.max_pair_sum = result.min_pair_sum = s;
        first = false;
      } else {
        result.max_pair_sum = std::max(result.max_pair_sum, s);
        result.min_pair_sum = std::min(result.min_pair_sum, s);
      }
    }
  }
  result.factor = first ? Rational{1} : result.max_pair_sum / result.min_pair_sum;
  return result;
}

}  // namespace sclayout

#endif  // SCLAYOUT_TOURNAMENT_HPP
