#ifndef SCLAYOUT_GENERATORS_HPP
#define SCLAYOUT_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/random.hpp"

namespace sclayout {

// ---------------------------------------------------------------------------
// Formulas

/// Nonzero signed 1-based variable index.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// Pads 1 or 2 literals to three by repeating the last one.
[[nodiscard]] inline Clause make_clause(const std::vector<Literal>& literals) {
  if (literals.empty() || literals.size() > 3) throw std::invalid_argument("clauses hold 1 to 3 literals");
  Clause c{};
  for (std::size_t i = 0; i < 3; ++i) c[i] = literals[std::min(i, literals.size() - 1)];
  return c;
}

inline void validate(const CnfFormula& f) {
  if (f.num_vars < 0) throw std::invalid_argument("negative variable count");
  for (const Clause& c : f.clauses) {
    for (Literal l : c) {
      if (l == 0 || std::abs(l) > f.num_vars) throw std::invalid_argument("literal out of range");
    }
  }
}

/// Assignment indexed by variable 1..num_vars (slot 0 unused).
using Assignment = std::vector<bool>;

[[nodiscard]] inline bool literal_true(Literal l, const Assignment& a) {
  return l > 0 ? a[static_cast<std::size_t>(l)] : !a[static_cast<std::size_t>(-l)];
}

[[nodiscard]] inline bool nae_satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.num_vars) + 1) throw std::invalid_argument("assignment size mismatch");
  for (const Clause& c : f.clauses) {
    int satisfied = 0;
    for (Literal l : c) satisfied += literal_true(l, a) ? 1 : 0;
    if (satisfied == 0 || satisfied == 3) return false;
  }
  return true;
}

/// Exhaustive NAE check; returns a satisfying assignment if any.
[[nodiscard]] inline std::optional<Assignment> nae_brute_check(const CnfFormula& f, int cap_vars = 24) {
  validate(f);
  if (f.num_vars > cap_vars) {
    throw CapacityError("NAE brute force: " + std::to_string(f.num_vars) + " variables exceed cap " +
                        std::to_string(cap_vars));
  }
  Assignment a(static_cast<std::size_t>(f.num_vars) + 1, false);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int v = 1; v <= f.num_vars; ++v) a[static_cast<std::size_t>(v)] = (bits >> (v - 1)) & 1u;
    if (nae_satisfies(f, a)) return a;
  }
  return std::nullopt;
}

struct PreprocessedFormula {
  /// Surviving clauses over the original variable numbering.
  CnfFormula formula;
  std::vector<std::size_t> kept_clauses;
  std::vector<int> eliminated_variables;
};

/// Repeatedly drops a variable occurring exactly once together with its clause.
[[nodiscard]] inline PreprocessedFormula preprocess(const CnfFormula& f) {
  validate(f);
  std::vector<bool> alive(f.clauses.size(), true);
  PreprocessedFormula out;
  while (true) {
    std::vector<int> count(static_cast<std::size_t>(f.num_vars) + 1, 0);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      if (!alive[i]) continue;
      for (Literal l : f.clauses[i]) ++count[static_cast<std::size_t>(std::abs(l))];
    }
    int single = 0;
    for (int v = 1; v <= f.num_vars && single == 0; ++v) {
      if (count[static_cast<std::size_t>(v)] == 1) single = v;
    }
    if (single == 0) break;
    out.eliminated_variables.push_back(single);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      if (!alive[i]) continue;
      for (Literal l : f.clauses[i]) {
        if (std::abs(l) == single) alive[i] = false;
      }
    }
  }
  out.formula.num_vars = f.num_vars;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (alive[i]) {
      out.formula.clauses.push_back(f.clauses[i]);
      out.kept_clauses.push_back(i);
    }
  }
  return out;
}

[[nodiscard]] inline CnfFormula random_cnf(int num_vars, std::size_t num_clauses, std::uint64_t seed) {
  if (num_vars < 1) throw std::invalid_argument("need at least one variable");
  Rng rng(seed);
  CnfFormula f{num_vars, {}};
  for (std::size_t i = 0; i < num_clauses; ++i) {
    Clause c{};
    for (Literal& l : c) {
      l = static_cast<Literal>(rng.below(static_cast<std::uint64_t>(num_vars)) + 1);
      if (rng.below(2) == 1) l = -l;
    }
    f.clauses.push_back(c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Reduction profiles

struct LambdaProfile {
  std::int64_t m = 0;
  std::vector<std::int64_t> lambda;
  std::vector<std::int64_t> lambda_bar;
};

[[nodiscard]] inline LambdaProfile lambda_profile(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("lambda profile needs m >= 1");
  LambdaProfile p;
  p.m = m;
  const std::int64_t n = 14 * m;
  for (std::int64_t i = 0; i <= n; ++i) {
    std::int64_t value = 0;
    if (i <= 5 * m) {
      value = 2 * i;
    } else if (i <= 6 * m) {
      value = 5 * m + i;
    } else if (i <= 7 * m) {
      value = 11 * m;
    } else if (i <= 12 * m) {
      value = 18 * m - i;
    } else {
      value = 42 * m - 3 * i;
    }
    p.lambda.push_back(value);
    p.lambda_bar.push_back(i * (n - i) - value);
  }
  return p;
}

class TriviallySatisfiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClauseGadget {
  Vertex top_center = 0;
  std::array<Vertex, 3> top{};
  Vertex bottom_center = 0;
  std::array<Vertex, 3> bottom{};
  /// Occurrence index (0-based) of each literal within its variable.
  std::array<std::size_t, 3> occurrence{};
};

struct VariableGadget {
  int variable = 0;
  std::vector<Vertex> bottom;
  std::vector<Vertex> top;
};

struct NaeInstance {
  Digraph digraph;
  PreprocessedFormula preprocessed;
  std::int64_t m = 0;
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
  /// variables[variable_slot[x]] is the gadget of x, or -1 if x does not occur.
  std::vector<int> variable_slot;
};

/**
 * Basic digraph with 14m vertices and 24m arcs for the preprocessed formula.
 * Layout: variable cycles by ascending variable (bottom_i, top_i interleaved),
 * then per clause the top center, its three literal vertices, the bottom
 * center and its three literal vertices.
 */
[[nodiscard]] inline NaeInstance nae_instance(const CnfFormula& f) {
  NaeInstance inst;
  inst.preprocessed = preprocess(f);
  const CnfFormula& g = inst.preprocessed.formula;
  if (g.clauses.empty()) throw TriviallySatisfiable("formula is empty after preprocessing");
  inst.m = static_cast<std::int64_t>(g.clauses.size());

  std::vector<std::size_t> occurrences(static_cast<std::size_t>(g.num_vars) + 1, 0);
  for (const Clause& c : g.clauses) {
    for (Literal l : c) ++occurrences[static_cast<std::size_t>(std::abs(l))];
  }
  inst.variable_slot.assign(static_cast<std::size_t>(g.num_vars) + 1, -1);
  Vertex next = 0;
  for (int x = 1; x <= g.num_vars; ++x) {
    const std::size_t p = occurrences[static_cast<std::size_t>(x)];
    if (p == 0) continue;
    VariableGadget gadget{x, {}, {}};
    for (std::size_t i = 0; i < p; ++i) {
      gadget.bottom.push_back(next++);
      gadget.top.push_back(next++);
    }
    inst.variable_slot[static_cast<std::size_t>(x)] = static_cast<int>(inst.variables.size());
    inst.variables.push_back(std::move(gadget));
  }
  std::vector<std::size_t> seen(static_cast<std::size_t>(g.num_vars) + 1, 0);
  for (const Clause& c : g.clauses) {
    ClauseGadget gadget;
    gadget.top_center = next++;
    for (auto& v : gadget.top) v = next++;
    gadget.bottom_center = next++;
    for (auto& v : gadget.bottom) v = next++;
    for (std::size_t pos = 0; pos < 3; ++pos) gadget.occurrence[pos] = seen[static_cast<std::size_t>(std::abs(c[pos]))]++;
    inst.clauses.push_back(gadget);
  }

  std::vector<Arc> arcs;
  for (const VariableGadget& v : inst.variables) {
    const std::size_t p = v.bottom.size();
    for (std::size_t i = 0; i < p; ++i) {
      arcs.push_back({v.bottom[i], v.top[i]});
      arcs.push_back({v.top[i], v.bottom[(i + 1) % p]});
    }
  }
  for (std::size_t j = 0; j < g.clauses.size(); ++j) {
    const ClauseGadget& cg = inst.clauses[j];
    for (const auto& [center, lits] : {std::pair{cg.top_center, cg.top}, std::pair{cg.bottom_center, cg.bottom}}) {
      for (std::size_t pos = 0; pos < 3; ++pos) {
        arcs.push_back({center, lits[pos]});
        arcs.push_back({lits[pos], lits[(pos + 1) % 3]});
      }
    }
    for (std::size_t pos = 0; pos < 3; ++pos) {
      const Literal l = g.clauses[j][pos];
      const VariableGadget& v = inst.variables[static_cast<std::size_t>(
          inst.variable_slot[static_cast<std::size_t>(std::abs(l))])];
      const std::size_t i = cg.occurrence[pos];
      if (l > 0) {
        arcs.push_back({cg.top[pos], v.bottom[i]});
        arcs.push_back({cg.bottom[pos], v.top[i]});
      } else {
        arcs.push_back({cg.top[pos], v.top[i]});
        arcs.push_back({cg.bottom[pos], v.bottom[i]});
      }
    }
  }
  inst.digraph = Digraph(next, arcs);
  return inst;
}

/**
 * Ordering of D(phi) whose cut vector equals lambda_m, built phase by phase
 * from an NAE-satisfying assignment.
 */
[[nodiscard]] inline Ordering witness_ordering(const NaeInstance& inst, const Assignment& alpha) {
  const CnfFormula& g = inst.preprocessed.formula;
  if (!nae_satisfies(g, alpha)) throw std::invalid_argument("assignment does not NAE-satisfy the formula");
  std::vector<Vertex> seq;
  seq.reserve(inst.digraph.vertex_count());
  auto value = [&](int x) { return static_cast<bool>(alpha[static_cast<std::size_t>(x)]); };
  // False side of every variable cycle first.
  for (const VariableGadget& v : inst.variables) {
    const auto& side = value(v.variable) ? v.bottom : v.top;
    seq.insert(seq.end(), side.begin(), side.end());
  }
  struct Pick {
    std::size_t unsat, sat, rest;
    bool rest_sat;
  };
  std::vector<Pick> picks;
  for (const Clause& c : g.clauses) {
    std::array<bool, 3> sat{};
    for (std::size_t pos = 0; pos < 3; ++pos) sat[pos] = literal_true(c[pos], alpha);
    Pick p{3, 3, 3, false};
    for (std::size_t pos = 0; pos < 3; ++pos) {
      if (!sat[pos] && p.unsat == 3) p.unsat = pos;
      if (sat[pos] && p.sat == 3) p.sat = pos;
    }
    p.rest = 3 - p.unsat - p.sat;
    p.rest_sat = sat[p.rest];
    picks.push_back(p);
  }
  for (std::size_t j = 0; j < picks.size(); ++j) {
    seq.push_back(inst.clauses[j].top[picks[j].unsat]);
    seq.push_back(inst.clauses[j].bottom[picks[j].sat]);
  }
  for (std::size_t j = 0; j < picks.size(); ++j) {
    const auto& cg = inst.clauses[j];
    seq.push_back(picks[j].rest_sat ? cg.bottom[picks[j].rest] : cg.top[picks[j].rest]);
  }
  for (std::size_t j = 0; j < picks.size(); ++j) {
    const auto& cg = inst.clauses[j];
    seq.push_back(picks[j].rest_sat ? cg.top[picks[j].rest] : cg.bottom[picks[j].rest]);
  }
  for (std::size_t j = 0; j < picks.size(); ++j) {
    seq.push_back(inst.clauses[j].bottom[picks[j].unsat]);
    seq.push_back(inst.clauses[j].top[picks[j].sat]);
  }
  for (const VariableGadget& v : inst.variables) {
    const auto& side = value(v.variable) ? v.top : v.bottom;
    seq.insert(seq.end(), side.begin(), side.end());
  }
  for (const ClauseGadget& cg : inst.clauses) {
    seq.push_back(cg.top_center);
    seq.push_back(cg.bottom_center);
  }
  return Ordering(std::move(seq));
}

[[nodiscard]] inline Ordering witness_ordering(const CnfFormula& f, const Assignment& alpha) {
  return witness_ordering(nae_instance(f), alpha);
}

struct HardnessInstance {
  Digraph digraph;
  NaeInstance base;
  std::int64_t ctw_target = 0;
  std::int64_t ola_target = 0;
};

/// Complement of D(phi): semi-complete, with thresholds 49m^2-11m (cutwidth) and sum of lambda-bar (OLA).
[[nodiscard]] inline HardnessInstance hardness_instance(const CnfFormula& f) {
  HardnessInstance h;
  h.base = nae_instance(f);
  h.digraph = complement(h.base.digraph);
  const LambdaProfile p = lambda_profile(h.base.m);
  h.ctw_target = 49 * h.base.m * h.base.m - 11 * h.base.m;
  h.ola_target = std::accumulate(p.lambda_bar.begin(), p.lambda_bar.end(), std::int64_t{0});
  return h;
}

// ---------------------------------------------------------------------------
// Tournament families

/**
 * Circular tournament on 2t+1 vertices with cutwidth t(t+1)/2 - x.
 * x = t is accepted; callers may flag it via circular_is_boundary.
 */
[[nodiscard]] inline Digraph circular_tournament(std::int64_t t, std::int64_t x) {
  if (t < 1) throw std::invalid_argument("circular tournament needs t >= 1");
  if (x < 0 || x > t) throw std::invalid_argument("circular tournament needs 0 <= x <= t");
  const auto n = static_cast<std::size_t>(2 * t + 1);
  std::vector<Arc> arcs;
  for (std::int64_t i = 1; i <= 2 * t + 1; ++i) {
    for (std::int64_t j = i + 1; j <= 2 * t + 1; ++j) {
      const bool forward = j <= 2 * t ? (j - i <= t) : (i <= x || j - i <= t);
      const auto a = static_cast<Vertex>(i - 1), b = static_cast<Vertex>(j - 1);
      arcs.push_back(forward ? Arc{a, b} : Arc{b, a});
    }
  }
  return Digraph(n, arcs);
}

[[nodiscard]] inline bool circular_is_boundary(std::int64_t t, std::int64_t x) { return x == t; }

/// Position pair (tail, head), 1-based, of a backward arc.
using BackwardPair = std::pair<std::size_t, std::size_t>;

/**
 * 2c+1 positions with every arc forward except c backward arcs forming a
 * perfect matching from positions [c+2, 2c+1] to [1, c]. Default matching
 * pairs c+1+i with c+1-i.
 */
[[nodiscard]] inline Digraph minimal_tournament(std::int64_t c, std::optional<std::vector<BackwardPair>> matching = {}) {
  if (c < 1) throw std::invalid_argument("minimal tournament needs c >= 1");
  const auto uc = static_cast<std::size_t>(c);
  const std::size_t n = 2 * uc + 1;
  std::vector<BackwardPair> pairs;
  if (matching) {
    pairs = *matching;
  } else {
    for (std::size_t i = 1; i <= uc; ++i) pairs.push_back({uc + 1 + i, uc + 1 - i});
  }
  if (pairs.size() != uc) throw std::invalid_argument("matching must have exactly c pairs");
  std::vector<bool> tail_used(n + 1, false), head_used(n + 1, false);
  std::vector<bool> reversed(n * n, false);
  for (const auto& [tail, head] : pairs) {
    if (tail < uc + 2 || tail > n || head < 1 || head > uc) {
      throw std::invalid_argument("matching pair outside the allowed position ranges");
    }
    if (tail_used[tail] || head_used[head]) throw std::invalid_argument("matching pairs must be disjoint");
    tail_used[tail] = head_used[head] = true;
    reversed[(head - 1) * n + (tail - 1)] = true;
  }
  std::vector<Arc> arcs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) arcs.push_back(reversed[a * n + b] ? Arc{b, a} : Arc{a, b});
  }
  return Digraph(n, arcs);
}

struct UndirectedGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

struct VcReduction {
  Digraph tournament;
  std::int64_t t = 0;
  std::int64_t x = 0;
  /// apex[i] is the dominating vertex of block i; the circular copy follows it.
  std::vector<Vertex> apex;
};

/**
 * Tournament T(G) with one block per vertex of G (an apex dominating a copy
 * of the circular tournament of cutwidth c), blocks pointing forward, and
 * the apex-apex arc reversed exactly on the edges of G.
 */
[[nodiscard]] inline VcReduction vc_reduction(const UndirectedGraph& g, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("vertex cover reduction needs c >= 1");
  VcReduction out;
  while (out.t * (out.t + 1) / 2 < c) ++out.t;
  out.x = out.t * (out.t + 1) / 2 - c;
  const Digraph gadget = circular_tournament(out.t, out.x);
  const std::size_t block = gadget.vertex_count() + 1;
  const std::size_t n = g.n * block;
  std::vector<bool> edge(g.n * g.n, false);
  for (const auto& [a, b] : g.edges) {
    if (a >= g.n || b >= g.n || a == b) throw std::invalid_argument("invalid undirected edge");
    edge[a * g.n + b] = edge[b * g.n + a] = true;
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.n; ++i) {
    const auto base = static_cast<Vertex>(i * block);
    out.apex.push_back(base);
    for (Vertex u = 1; u < block; ++u) arcs.push_back({base, base + u});
    for (const Arc& a : gadget.arcs()) arcs.push_back({base + 1 + a.tail, base + 1 + a.head});
  }
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      const auto bi = static_cast<Vertex>(i * block), bj = static_cast<Vertex>(j * block);
      for (Vertex uj = 1; uj < block; ++uj) arcs.push_back({bi, bj + uj});
      for (Vertex ui = 1; ui < block; ++ui) {
        for (Vertex uj = 1; uj < block; ++uj) arcs.push_back({bi + ui, bj + uj});
        arcs.push_back({bi + ui, bj});
      }
      arcs.push_back(edge[i * g.n + j] ? Arc{bj, bi} : Arc{bi, bj});
    }
  }
  out.tournament = Digraph(n, arcs);
  return out;
}

/// Five-vertex semi-complete digraph without a minimum ordering: one pure vertex, four mutually symmetric.
[[nodiscard]] inline Digraph no_minimum_fixture() {
  std::vector<Arc> arcs;
  for (Vertex a = 1; a <= 4; ++a) {
    for (Vertex b = 1; b <= 4; ++b) {
      if (a != b) arcs.push_back({a, b});
    }
  }
  arcs.push_back({0, 3});
  arcs.push_back({0, 1});
  arcs.push_back({4, 0});
  arcs.push_back({2, 0});
  return Digraph(5, arcs);
}

}  // namespace sclayout

#endif  // SCLAYOUT_GENERATORS_HPP
