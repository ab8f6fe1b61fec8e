#ifndef SCLAYOUT_OBSTRUCTIONS_HPP
#define SCLAYOUT_OBSTRUCTIONS_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/exact.hpp"
#include "sclayout/tournament.hpp"

namespace sclayout {

// ---------------------------------------------------------------------------
// Degree tangles

struct TangleCertificate {
  std::vector<Vertex> vertices;
  std::int64_t k = 0;
  std::int64_t alpha = 0;
  Rational bound{0};
};

[[nodiscard]] inline Rational tangle_bound(std::int64_t k, std::int64_t alpha) {
  return Rational(k * (k + 1 - alpha), 2);
}

/// Largest window of the sorted indegree sequence with spread <= alpha, if it has >= 3 vertices.
[[nodiscard]] inline std::optional<TangleCertificate> find_degree_tangle(const FractionalTournament& t,
                                                                         std::int64_t alpha) {
  if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  const Ordering sorted = sorted_ordering(t);
  const std::size_t n = t.vertex_count();
  std::size_t best_lo = 0, best_len = 0;
  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < n; ++hi) {
    while (t.in_weight(sorted.at(hi)) - t.in_weight(sorted.at(lo)) > alpha) ++lo;
    if (hi - lo + 1 > best_len) {
      best_len = hi - lo + 1;
      best_lo = lo;
    }
  }
  if (best_len < 3) return std::nullopt;
  TangleCertificate cert;
  for (std::size_t i = best_lo; i < best_lo + best_len; ++i) cert.vertices.push_back(sorted.at(i));
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.k = static_cast<std::int64_t>((best_len - 1) / 2);
  cert.alpha = alpha;
  cert.bound = tangle_bound(cert.k, alpha);
  return cert;
}

/// Best certificate over all spreads 0..n-1.
[[nodiscard]] inline std::optional<TangleCertificate> best_degree_tangle(const FractionalTournament& t) {
  std::optional<TangleCertificate> best;
  for (std::int64_t alpha = 0; alpha < static_cast<std::int64_t>(t.vertex_count()); ++alpha) {
    auto cert = find_degree_tangle(t, alpha);
    if (cert && (!best || cert->bound > best->bound)) best = std::move(cert);
  }
  return best;
}

/// Re-checks size, spread and the stated bound.
[[nodiscard]] inline bool verify_tangle(const FractionalTournament& t, const TangleCertificate& cert) {
  if (cert.k < 0 || cert.alpha < 0) return false;
  if (static_cast<std::int64_t>(cert.vertices.size()) < 2 * cert.k + 1) return false;
  std::vector<bool> seen(t.vertex_count(), false);
  for (Vertex v : cert.vertices) {
    if (v >= t.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  if (cert.vertices.empty()) return false;
  Rational lo = t.in_weight(cert.vertices.front()), hi = lo;
  for (Vertex v : cert.vertices) {
    lo = std::min(lo, t.in_weight(v));
    hi = std::max(hi, t.in_weight(v));
  }
  return hi - lo <= cert.alpha && cert.bound == tangle_bound(cert.k, cert.alpha);
}

// ---------------------------------------------------------------------------
// Cutwidth oracle with memo

/**
 * Exact cutwidth queries with a memo keyed by the labeled adjacency matrix.
 * Readers share the memo, writers are serialized.
 */
class CutwidthOracle {
 public:
  explicit CutwidthOracle(SolverCaps caps = {}, bool memoize = true) : caps_(caps), memoize_(memoize) {}

  CutwidthOracle(const CutwidthOracle&) = delete;
  CutwidthOracle& operator=(const CutwidthOracle&) = delete;

  [[nodiscard]] std::int64_t cutwidth(const Digraph& d) {
    if (d.vertex_count() <= 1) return 0;
    std::string key;
    if (memoize_) {
      key = encode(d);
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }
    ++solves_;
    const std::int64_t value = solve_exact(d, Objective::Cutwidth, caps_).value;
    if (memoize_) {
      std::unique_lock lock(mutex_);
      memo_.emplace(std::move(key), value);
    }
    return value;
  }

  /// ctw(D) <= c, short-circuiting through the relaxation bounds on semi-complete inputs.
  [[nodiscard]] bool within(const Digraph& d, std::int64_t c) {
    if (d.vertex_count() <= 1) return c >= 0;
    if (is_semicomplete(d)) {
      if (relaxation_cutwidth_lower_bound(d) > c) return false;
      if (approximate_semicomplete(d).width <= c) return true;
    }
    return cutwidth(d) <= c;
  }

  [[nodiscard]] bool within(const Digraph& d, std::span<const Vertex> subset, std::int64_t c) {
    return within(induced_subdigraph(d, subset).digraph, c);
  }

  [[nodiscard]] const SolverCaps& caps() const noexcept { return caps_; }
  [[nodiscard]] std::uint64_t solves() const noexcept { return solves_; }
  [[nodiscard]] std::uint64_t hits() const noexcept { return hits_; }

 private:
  static std::string encode(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::string key(sizeof(std::uint32_t) + (n * n + 7) / 8, '\0');
    const auto n32 = static_cast<std::uint32_t>(n);
    std::copy_n(reinterpret_cast<const char*>(&n32), sizeof n32, key.begin());
    for (const Arc& a : d.arcs()) {
      const std::size_t bit = a.tail * n + a.head;
      key[sizeof n32 + bit / 8] = static_cast<char>(key[sizeof n32 + bit / 8] | (1 << (bit % 8)));
    }
    return key;
  }

  SolverCaps caps_;
  bool memoize_;
  std::shared_mutex mutex_;
  std::unordered_map<std::string, std::int64_t> memo_;
  std::atomic<std::uint64_t> solves_{0};
  std::atomic<std::uint64_t> hits_{0};
};

// ---------------------------------------------------------------------------
// Minimal obstructions

[[nodiscard]] inline std::int64_t ceil_sqrt(std::int64_t x) {
  std::int64_t r = 0;
  while (r * r < x) ++r;
  return r;
}

/// Vertex bound for c-cutwidth-minimal tournaments.
[[nodiscard]] inline std::int64_t tournament_obstruction_bound(std::int64_t c) {
  return 2 * c + 2 * ceil_sqrt(2 * c) + 1;
}

/// Vertex bound for c-cutwidth-minimal semi-complete digraphs.
[[nodiscard]] inline std::int64_t semicomplete_obstruction_bound(std::int64_t c) { return 24 * c * c + 1; }

struct ObstructionReport {
  /// Host vertex ids, ascending.
  std::vector<Vertex> vertices;
  /// ctw(D[X]) >= threshold while every single-vertex deletion drops below it.
  std::int64_t threshold = 0;
};

/**
 * None if ctw(D) <= c. Otherwise deletes vertices in ascending id order while
 * the cutwidth stays above c; what remains is (c+1)-cutwidth-minimal.
 */
[[nodiscard]] inline std::optional<ObstructionReport> find_cutwidth_minimal(const Digraph& d, std::int64_t c,
                                                                           CutwidthOracle& oracle) {
  if (oracle.within(d, c)) return std::nullopt;
  std::vector<Vertex> alive(d.vertex_count());
  std::iota(alive.begin(), alive.end(), Vertex{0});
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    std::vector<Vertex> trial;
    trial.reserve(alive.size());
    for (Vertex v : alive) {
      if (v != u) trial.push_back(v);
    }
    if (!oracle.within(d, trial, c)) alive = std::move(trial);
  }
  return ObstructionReport{std::move(alive), c + 1};
}

/// Minimality re-check of a reported obstruction.
[[nodiscard]] inline bool verify_obstruction(const Digraph& d, const ObstructionReport& report,
                                             CutwidthOracle& oracle) {
  const std::int64_t below = report.threshold - 1;
  if (oracle.within(d, report.vertices, below)) return false;
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    std::vector<Vertex> rest = report.vertices;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!oracle.within(d, rest, below)) return false;
  }
  return true;
}

/// Minimum row-major adjacency encoding over relabelings that keep (indegree, outdegree) non-decreasing.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;
  /// canonical label i is host vertex relabel[i]
  std::vector<Vertex> relabel;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.code == b.code;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n != b.n ? a.n < b.n : a.code < b.code;
  }
};

inline constexpr std::size_t kCanonicalLimit = 8;

[[nodiscard]] inline CanonicalForm canonical_form(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n > kCanonicalLimit) {
    throw CapacityError("canonical form supports at most " + std::to_string(kCanonicalLimit) + " vertices");
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto key = [&](Vertex v) { return std::pair{d.indegree(v), d.outdegree(v)}; };
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key(a) < key(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  auto encode = [&](const std::vector<Vertex>& sigma) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        code = (code << 1) | (d.has_arc(sigma[i], sigma[j]) ? 1u : 0u);
      }
    }
    return code;
  };
  CanonicalForm best{n, encode(order), order};
  // Odometer over permutations inside each block.
  std::vector<Vertex> sigma = order;
  while (true) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = sigma.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = sigma.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    const std::uint64_t code = encode(sigma);
    if (code < best.code) {
      best.code = code;
      best.relabel = sigma;
    }
  }
  return best;
}

[[nodiscard]] inline Digraph decode_canonical(std::size_t n, std::uint64_t code) {
  std::vector<Arc> arcs;
  std::size_t bit = n * n - n;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      --bit;
      if ((code >> bit) & 1u) arcs.push_back({i, j});
    }
  }
  return Digraph(n, arcs);
}

enum class Family { Tournament, Semicomplete };

namespace detail {

/// Exact cutwidth of a small digraph given by in/out neighbour masks.
inline std::int64_t small_cutwidth(const std::uint32_t* in, const std::uint32_t* out, std::size_t n,
                                   std::uint32_t alive) {
  // Relabel alive vertices densely.
  std::uint32_t idx[32];
  std::size_t m = 0;
  for (std::uint32_t bits = alive; bits; bits &= bits - 1) idx[m++] = static_cast<std::uint32_t>(std::countr_zero(bits));
  (void)n;
  std::int64_t best[1 << kCanonicalLimit];
  std::int64_t cut[1 << kCanonicalLimit];
  best[0] = 0;
  cut[0] = 0;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    std::uint32_t host_rest = 0;
    for (std::uint32_t bits = rest; bits; bits &= bits - 1) host_rest |= 1u << idx[std::countr_zero(bits)];
    const std::uint32_t v = idx[low];
    cut[s] = cut[rest] + std::popcount(in[v] & alive) - std::popcount(in[v] & host_rest) -
             std::popcount(out[v] & host_rest);
    std::int64_t choice = INT64_MAX;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      choice = std::min(choice, best[s ^ (1u << std::countr_zero(bits))]);
    }
    best[s] = std::max(choice, cut[s]);
  }
  return best[(1u << m) - 1];
}

/// Tournament cutwidth from indegrees: max prefix of sorted degrees minus C(i,2).
inline std::int64_t tournament_cutwidth(std::int64_t* deg, std::size_t m) {
  std::sort(deg, deg + m);
  std::int64_t prefix = 0, width = 0;
  for (std::size_t i = 0; i < m; ++i) {
    prefix += deg[i];
    const auto size = static_cast<std::int64_t>(i + 1);
    width = std::max(width, prefix - size * (size - 1) / 2);
  }
  return width;
}

}  // namespace detail

/**
 * Non-isomorphic c-cutwidth-minimal members of the family with at most n_max
 * vertices, by labeled enumeration and canonical-form deduplication.
 */
[[nodiscard]] inline std::vector<Digraph> enumerate_minimal_obstructions(std::int64_t c, std::size_t n_max,
                                                                         Family family) {
  if (c < 1) throw std::invalid_argument("obstruction enumeration needs c >= 1");
  const std::size_t cap = family == Family::Tournament ? 7 : 5;
  if (n_max > cap) {
    throw CapacityError("enumeration cap is n_max <= " + std::to_string(cap) + " for this family");
  }
  std::map<CanonicalForm, Digraph> catalog;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    const std::uint64_t radix = family == Family::Tournament ? 2 : 3;
    std::uint64_t total = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) total *= radix;
    std::uint32_t in[8], out[8];
    std::int64_t deg[8], scratch[8];
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::fill(in, in + n, 0u);
      std::fill(out, out + n, 0u);
      std::uint64_t rest = code;
      for (const auto& [i, j] : pairs) {
        const std::uint64_t digit = rest % radix;
        rest /= radix;
        if (digit != 1) {  // 0: i->j, 1: j->i, 2: both
          out[i] |= 1u << j;
          in[j] |= 1u << i;
        }
        if (digit != 0) {
          out[j] |= 1u << i;
          in[i] |= 1u << j;
        }
      }
      bool minimal = true;
      if (family == Family::Tournament) {
        for (std::size_t v = 0; v < n; ++v) deg[v] = std::popcount(in[v]);
        std::copy_n(deg, n, scratch);
        if (detail::tournament_cutwidth(scratch, n) < c) continue;
        for (std::size_t del = 0; del < n && minimal; ++del) {
          std::size_t m = 0;
          for (std::size_t v = 0; v < n; ++v) {
            if (v != del) scratch[m++] = deg[v] - ((out[del] >> v) & 1u);
          }
          if (detail::tournament_cutwidth(scratch, m) >= c) minimal = false;
        }
      } else {
        if (detail::small_cutwidth(in, out, n, all) < c) continue;
        for (std::size_t del = 0; del < n && minimal; ++del) {
          if (detail::small_cutwidth(in, out, n, all & ~(1u << del)) >= c) minimal = false;
        }
      }
      if (!minimal) continue;
      std::vector<Arc> arcs;
      for (Vertex u = 0; u < n; ++u) {
        for (std::uint32_t bits = out[u]; bits; bits &= bits - 1) {
          arcs.push_back({u, static_cast<Vertex>(std::countr_zero(bits))});
        }
      }
      const Digraph labeled(n, arcs);
      CanonicalForm form = canonical_form(labeled);
      if (!catalog.contains(form)) catalog.emplace(form, decode_canonical(form.n, form.code));
    }
  }
  std::vector<Digraph> result;
  for (auto& [form, digraph] : catalog) result.push_back(std::move(digraph));
  return result;
}

// ---------------------------------------------------------------------------
// Cutwidth vertex deletion

struct DeletionSet {
  std::vector<Vertex> vertices;
  std::int64_t c = 0;
  bool certified = false;
};

namespace detail {

inline std::optional<std::vector<Vertex>> cvd_branch(const Digraph& d, const std::vector<Vertex>& alive,
                                                     std::int64_t c, std::int64_t budget,
                                                     CutwidthOracle& oracle) {
  const auto sub = induced_subdigraph(d, alive);
  const auto obstruction = find_cutwidth_minimal(sub.digraph, c, oracle);
  if (!obstruction) return std::vector<Vertex>{};
  if (budget == 0) return std::nullopt;
  for (Vertex local : obstruction->vertices) {
    const Vertex host = sub.to_host[local];
    std::vector<Vertex> next;
    next.reserve(alive.size() - 1);
    for (Vertex v : alive) {
      if (v != host) next.push_back(v);
    }
    if (auto rest = cvd_branch(d, next, c, budget - 1, oracle)) {
      rest->push_back(host);
      return rest;
    }
  }
  return std::nullopt;
}

inline bool certify_deletion(const Digraph& d, const std::vector<Vertex>& removed, std::int64_t c,
                             CutwidthOracle& oracle) {
  return oracle.within(delete_vertices(d, removed).digraph, c);
}

}  // namespace detail

/// Bounded search tree: branch on the vertices of a (c+1)-cutwidth-minimal subdigraph.
[[nodiscard]] inline std::optional<DeletionSet> cvd_branching(const Digraph& d, std::int64_t c, std::int64_t k,
                                                              CutwidthOracle& oracle) {
  if (c < 0 || k < 0) throw std::invalid_argument("cvd needs c >= 0 and k >= 0");
  std::vector<Vertex> alive(d.vertex_count());
  std::iota(alive.begin(), alive.end(), Vertex{0});
  auto found = detail::cvd_branch(d, alive, c, k, oracle);
  if (!found) return std::nullopt;
  std::sort(found->begin(), found->end());
  DeletionSet out{std::move(*found), c, false};
  out.certified = detail::certify_deletion(d, out.vertices, c, oracle);
  return out;
}

struct CvdApprox {
  DeletionSet deletion;
  /// Obstructions removed, in host ids.
  std::vector<std::vector<Vertex>> obstructions;
};

/// Deletes whole (c+1)-cutwidth-minimal subdigraphs until the cutwidth is at most c.
[[nodiscard]] inline CvdApprox cvd_approx(const Digraph& d, std::int64_t c, CutwidthOracle& oracle) {
  if (c < 0) throw std::invalid_argument("cvd needs c >= 0");
  CvdApprox out;
  out.deletion.c = c;
  std::vector<Vertex> alive(d.vertex_count());
  std::iota(alive.begin(), alive.end(), Vertex{0});
  while (true) {
    const auto sub = induced_subdigraph(d, alive);
    const auto obstruction = find_cutwidth_minimal(sub.digraph, c, oracle);
    if (!obstruction) break;
    std::vector<Vertex> hosts;
    std::vector<bool> drop(d.vertex_count(), false);
    for (Vertex local : obstruction->vertices) {
      hosts.push_back(sub.to_host[local]);
      drop[sub.to_host[local]] = true;
    }
    out.deletion.vertices.insert(out.deletion.vertices.end(), hosts.begin(), hosts.end());
    out.obstructions.push_back(std::move(hosts));
    std::erase_if(alive, [&](Vertex v) { return drop[v]; });
  }
  std::sort(out.deletion.vertices.begin(), out.deletion.vertices.end());
  out.deletion.certified = detail::certify_deletion(d, out.deletion.vertices, c, oracle);
  return out;
}

/// All vertex sets of (c+1)-cutwidth-minimal induced subdigraphs, by size then mask.
[[nodiscard]] inline std::vector<std::uint32_t> minimal_bad_sets(const Digraph& d, std::int64_t c,
                                                                 CutwidthOracle& oracle, std::size_t cap_n = 16) {
  const std::size_t n = d.vertex_count();
  if (n > cap_n || n > 20) {
    throw CapacityError("minimal bad set enumeration: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(std::min<std::size_t>(cap_n, 20)));
  }
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) by_size[std::popcount(s)].push_back(s);
  std::vector<std::uint32_t> family;
  std::vector<Vertex> members;
  for (std::size_t size = 1; size <= n; ++size) {
    for (std::uint32_t s : by_size[size]) {
      const bool covers = std::any_of(family.begin(), family.end(), [&](std::uint32_t f) { return (f & s) == f; });
      if (covers) continue;
      members.clear();
      for (std::uint32_t bits = s; bits; bits &= bits - 1) members.push_back(static_cast<Vertex>(std::countr_zero(bits)));
      if (!oracle.within(d, members, c)) family.push_back(s);
    }
  }
  return family;
}

namespace detail {

/// Indices of p members forming a sunflower, searched by greedy core growing.
inline std::optional<std::vector<std::size_t>> find_sunflower(const std::vector<std::uint32_t>& sets,
                                                              const std::vector<std::size_t>& index,
                                                              std::size_t petals) {
  if (index.size() < petals) return std::nullopt;
  std::vector<std::size_t> disjoint;
  std::uint32_t used = 0;
  for (std::size_t i : index) {
    if ((sets[i] & used) == 0) {
      disjoint.push_back(i);
      used |= sets[i];
      if (disjoint.size() == petals) return disjoint;
    }
  }
  // Some element of the union lies in many sets; grow the core by it.
  std::vector<std::pair<std::size_t, std::uint32_t>> frequency;
  for (std::uint32_t bits = used; bits; bits &= bits - 1) {
    const auto x = static_cast<std::uint32_t>(std::countr_zero(bits));
    std::size_t count = 0;
    for (std::size_t i : index) count += (sets[i] >> x) & 1u;
    frequency.push_back({count, x});
  }
  std::sort(frequency.begin(), frequency.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  for (const auto& [count, x] : frequency) {
    if (count < petals) break;
    std::vector<std::uint32_t> shrunk(sets);
    std::vector<std::size_t> with_x;
    for (std::size_t i : index) {
      if ((sets[i] >> x) & 1u) {
        shrunk[i] &= ~(1u << x);
        with_x.push_back(i);
      }
    }
    if (auto found = find_sunflower(shrunk, with_x, petals)) return found;
  }
  return std::nullopt;
}

inline std::uint64_t sunflower_threshold(std::size_t s, std::int64_t k) {
  // s! (k+1)^s, saturating.
  long double value = 1;
  for (std::size_t i = 2; i <= s; ++i) value *= static_cast<long double>(i);
  for (std::size_t i = 0; i < s; ++i) value *= static_cast<long double>(k + 1);
  return value >= 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(value);
}

}  // namespace detail

struct CvdKernel {
  InducedSubdigraph reduced;
  std::vector<std::vector<Vertex>> family;
  std::vector<std::vector<Vertex>> kept_family;
  std::size_t max_set_size = 0;
  std::size_t discarded = 0;
};

/**
 * Restricts D to the union of its minimal bad sets after the sunflower rule:
 * while a size class s holds more than s!(k+1)^s sets, a sunflower with k+2
 * petals exists and one petal can be dropped without changing which sets of
 * size <= k hit the family.
 */
[[nodiscard]] inline CvdKernel cvd_kernel(const Digraph& d, std::int64_t c, std::int64_t k, CutwidthOracle& oracle,
                                          std::size_t cap_n = 16) {
  if (c < 0 || k < 0) throw std::invalid_argument("cvd needs c >= 0 and k >= 0");
  const auto family = minimal_bad_sets(d, c, oracle, cap_n);
  auto to_list = [](std::uint32_t s) {
    std::vector<Vertex> out;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) out.push_back(static_cast<Vertex>(std::countr_zero(bits)));
    return out;
  };
  CvdKernel out;
  for (std::uint32_t s : family) {
    out.family.push_back(to_list(s));
    out.max_set_size = std::max<std::size_t>(out.max_set_size, std::popcount(s));
  }
  std::vector<std::uint32_t> kept;
  for (std::size_t size = 1; size <= out.max_set_size; ++size) {
    std::vector<std::uint32_t> cls;
    for (std::uint32_t s : family) {
      if (static_cast<std::size_t>(std::popcount(s)) == size) cls.push_back(s);
    }
    const std::uint64_t threshold = detail::sunflower_threshold(size, k);
    while (cls.size() > threshold) {
      std::vector<std::size_t> index(cls.size());
      std::iota(index.begin(), index.end(), std::size_t{0});
      const auto petals = detail::find_sunflower(cls, index, static_cast<std::size_t>(k + 2));
      if (!petals) throw std::logic_error("sunflower search failed above the Erdos-Rado threshold");
      const std::size_t drop = *std::max_element(petals->begin(), petals->end());
      cls.erase(cls.begin() + static_cast<std::ptrdiff_t>(drop));
      ++out.discarded;
    }
    kept.insert(kept.end(), cls.begin(), cls.end());
  }
  std::uint32_t keep_mask = 0;
  for (std::uint32_t s : kept) {
    keep_mask |= s;
    out.kept_family.push_back(to_list(s));
  }
  out.reduced = induced_subdigraph(d, to_list(keep_mask));
  return out;
}

}  // namespace sclayout

#endif  // SCLAYOUT_OBSTRUCTIONS_HPP
