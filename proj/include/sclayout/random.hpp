#ifndef SCLAYOUT_RANDOM_HPP
#define SCLAYOUT_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/tournament.hpp"

namespace sclayout {

/**
 * Seeded generator. Only raw 64-bit engine output is consumed, so sequences
 * are identical across standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// True with probability p, resolved to 2^-32.
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const auto threshold = static_cast<std::uint64_t>(p * 4294967296.0);
    return (next() >> 32) < threshold;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  /// Independent stream derived from this one.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

/// Each pair: symmetric with probability p_sym, otherwise one uniformly oriented arc.
[[nodiscard]] inline Digraph random_semicomplete(std::size_t n, double p_sym, std::uint64_t seed) {
  if (p_sym < 0.0 || p_sym > 1.0) throw std::invalid_argument("p_sym must lie in [0,1]");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p_sym)) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
      } else if (rng.below(2) == 0) {
        arcs.push_back({u, v});
      } else {
        arcs.push_back({v, u});
      }
    }
  }
  return Digraph(n, arcs);
}

[[nodiscard]] inline Digraph random_tournament(std::size_t n, std::uint64_t seed) {
  return random_semicomplete(n, 0.0, seed);
}

/// Each ordered pair independently present with probability p_arc.
[[nodiscard]] inline Digraph random_digraph(std::size_t n, double p_arc, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.chance(p_arc)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

/**
 * Semi-complete digraph close to transitive: pairs farther apart than
 * `band` in a hidden order point forward; nearer pairs are reversed with
 * probability p_back or made symmetric with probability p_sym. Labels are
 * shuffled afterwards.
 */
[[nodiscard]] inline Digraph random_local_semicomplete(std::size_t n, std::size_t band, double p_back,
                                                       double p_sym, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  rng.shuffle(label);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vertex a = label[i], b = label[j];
      if (j - i <= band) {
        if (rng.chance(p_sym)) {
          arcs.push_back({a, b});
          arcs.push_back({b, a});
          continue;
        }
        if (rng.chance(p_back)) {
          arcs.push_back({b, a});
          continue;
        }
      }
      arcs.push_back({a, b});
    }
  }
  return Digraph(n, arcs);
}

/**
 * Semi-complete digraph with exactly k non-pure vertices (k != 1, k <= n).
 * The non-pure vertices are paired up by symmetric arcs in a cycle, with
 * extra symmetric pairs among them at rate p_sym.
 */
[[nodiscard]] inline Digraph random_semicomplete_with_nonpure(std::size_t n, std::size_t k, double p_sym,
                                                              std::uint64_t seed) {
  if (k == 1 || k > n) throw std::invalid_argument("non-pure count must be 0 or in [2, n]");
  Rng rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  rng.shuffle(label);
  std::vector<bool> symmetric(n * n, false);
  auto make_symmetric = [&](Vertex a, Vertex b) { symmetric[a * n + b] = symmetric[b * n + a] = true; };
  for (std::size_t i = 0; i < k; ++i) make_symmetric(label[i], label[(i + 1) % k]);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (rng.chance(p_sym)) make_symmetric(label[i], label[j]);
    }
  }
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (symmetric[u * n + v]) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
      } else if (rng.below(2) == 0) {
        arcs.push_back({u, v});
      } else {
        arcs.push_back({v, u});
      }
    }
  }
  return Digraph(n, arcs);
}

/// Weights a/den with a uniform in [0, den].
[[nodiscard]] inline FractionalTournament random_fractional_tournament(std::size_t n, std::int64_t den,
                                                                       std::uint64_t seed) {
  if (den < 1) throw std::invalid_argument("denominator must be positive");
  Rng rng(seed);
  std::vector<Rational> w(n * n, Rational{0});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den) + 1));
      w[u * n + v] = Rational(a, den);
      w[v * n + u] = Rational(den - a, den);
    }
  }
  return FractionalTournament(n, std::move(w));
}

/// Weights with pair sums drawn from `sums`, split at a random fraction with denominator den.
[[nodiscard]] inline WeightedSemicomplete random_weighted_semicomplete(std::size_t n,
                                                                       const std::vector<Rational>& sums,
                                                                       std::int64_t den, std::uint64_t seed) {
  if (sums.empty()) throw std::invalid_argument("need at least one pair sum");
  Rng rng(seed);
  std::vector<Rational> w(n * n, Rational{0});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Rational total = sums[rng.below(sums.size())];
      const Rational share(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den) + 1)), den);
      w[u * n + v] = total * share;
      w[v * n + u] = total - total * share;
    }
  }
  return WeightedSemicomplete(n, std::move(w));
}

}  // namespace sclayout

#endif  // SCLAYOUT_RANDOM_HPP
