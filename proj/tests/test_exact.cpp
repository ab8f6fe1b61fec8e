#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sclayout/exact.hpp"
#include "sclayout/generators.hpp"
#include "sclayout/random.hpp"

using namespace sclayout;

namespace {

Digraph triangle() { return Digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }

Digraph bidirected(std::size_t n) { return complement(Digraph(n)); }

Digraph transitive(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
  }
  return Digraph(n, arcs);
}

void expect_witness(const Digraph& d, const ExactResult& r) {
  const auto cv = cut_vector(d, r.ordering);
  EXPECT_EQ(objective_value(cv, r.objective), r.value);
}

}  // namespace

TEST(BruteForce, Triangle) {
  EXPECT_EQ(brute_force_optimum(triangle(), Objective::Cutwidth).value, 1);
  EXPECT_EQ(brute_force_optimum(triangle(), Objective::Ola).value, 2);
}

TEST(BruteForce, TransitiveIsZero) {
  EXPECT_EQ(brute_force_optimum(transitive(4), Objective::Cutwidth).value, 0);
  EXPECT_EQ(brute_force_optimum(transitive(4), Objective::Ola).value, 0);
}

TEST(BruteForce, CapIsEnforced) {
  EXPECT_THROW((void)brute_force_optimum(transitive(11), Objective::Cutwidth), CapacityError);
  SolverCaps caps;
  caps.brute_n = 3;
  EXPECT_THROW((void)brute_force_optimum(transitive(4), Objective::Cutwidth, caps), CapacityError);
}

TEST(BruteForce, ReturnsLexicographicallyLeastOptimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph d = random_digraph(6, 0.4, seed);
    for (Objective obj : {Objective::Cutwidth, Objective::Ola}) {
      const auto r = brute_force_optimum(d, obj);
      std::vector<Vertex> seq(6);
      std::iota(seq.begin(), seq.end(), Vertex{0});
      std::vector<Vertex> first;
      do {
        const auto cuts = oracle::cut_vector(d, seq);
        const auto v = obj == Objective::Cutwidth ? oracle::width(cuts) : oracle::cost(cuts);
        if (v == r.value) {
          first = seq;
          break;
        }
      } while (std::next_permutation(seq.begin(), seq.end()));
      EXPECT_EQ(std::vector<Vertex>(r.ordering.sequence().begin(), r.ordering.sequence().end()), first);
    }
  }
}

TEST(BruteForce, MatchesNaivePermutationScan) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph d = random_digraph(6, 0.35, seed);
    const auto best = oracle::optimum(d);
    EXPECT_EQ(brute_force_optimum(d, Objective::Cutwidth).value, best.ctw);
    EXPECT_EQ(brute_force_optimum(d, Objective::Ola).value, best.ola);
  }
}

TEST(SubsetDp, BidirectedTriangleAndPair) {
  EXPECT_EQ(subset_dp(bidirected(3), Objective::Cutwidth).value, 2);
  EXPECT_EQ(subset_dp(bidirected(2), Objective::Ola).value, 1);
}

TEST(SubsetDp, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    const std::size_t n = rng.below(9);
    const Digraph d = rng.below(2) ? random_digraph(n, 0.35, seed) : random_semicomplete(n, 0.3, seed);
    for (Objective obj : {Objective::Cutwidth, Objective::Ola}) {
      const auto dp = subset_dp(d, obj);
      EXPECT_EQ(dp.value, brute_force_optimum(d, obj).value) << "seed " << seed;
      expect_witness(d, dp);
    }
  }
}

TEST(SubsetDp, CapIsEnforced) {
  SolverCaps caps;
  caps.subset_n = 5;
  EXPECT_THROW((void)subset_dp(transitive(6), Objective::Cutwidth, caps), CapacityError);
}

TEST(SubsetDp, CutwidthMonotoneUnderInducedSubdigraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = random_semicomplete(10, 0.25, seed);
    const auto whole = subset_dp(d, Objective::Cutwidth).value;
    Rng rng(seed);
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < 10; ++v) {
      if (rng.below(3) != 0) pick.push_back(v);
    }
    EXPECT_LE(subset_dp(induced_subdigraph(d, pick).digraph, Objective::Cutwidth).value, whole);
  }
}

TEST(PureVertexDp, TournamentMatchesSortedOrdering) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Digraph t = random_tournament(12, seed);
    const auto sorted = tournament_exact(t);
    EXPECT_EQ(pure_vertex_dp(t, Objective::Cutwidth).value, sorted.first.value);
    EXPECT_EQ(pure_vertex_dp(t, Objective::Ola).value, sorted.second.value);
  }
}

TEST(PureVertexDp, NoMinimumFixture) {
  const Digraph d = no_minimum_fixture();
  EXPECT_EQ(classify(d).non_pure_count(), 4u);
  for (Objective obj : {Objective::Cutwidth, Objective::Ola}) {
    const auto r = pure_vertex_dp(d, obj);
    EXPECT_EQ(r.value, subset_dp(d, obj).value);
    expect_witness(d, r);
  }
}

TEST(PureVertexDp, AgreesWithSubsetDp) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const std::size_t n = 4 + rng.below(10);
    std::size_t k = rng.below(std::min<std::size_t>(n, 6) + 1);
    if (k == 1) k = 2;
    const Digraph d = random_semicomplete_with_nonpure(n, k, 0.3, seed);
    EXPECT_EQ(classify(d).non_pure_count(), k);
    for (Objective obj : {Objective::Cutwidth, Objective::Ola}) {
      const auto r = pure_vertex_dp(d, obj);
      EXPECT_EQ(r.value, subset_dp(d, obj).value) << "seed " << seed;
      expect_witness(d, r);
    }
  }
}

TEST(PureVertexDp, GeneralDigraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph d = random_digraph(8, 0.5, seed);
    for (Objective obj : {Objective::Cutwidth, Objective::Ola}) {
      EXPECT_EQ(pure_vertex_dp(d, obj).value, subset_dp(d, obj).value) << "seed " << seed;
    }
  }
}

TEST(PureVertexDp, CapsAreEnforced) {
  SolverCaps caps;
  caps.pure_k = 3;
  EXPECT_THROW((void)pure_vertex_dp(no_minimum_fixture(), Objective::Cutwidth, caps), CapacityError);
  SolverCaps states;
  states.pure_states = 10;
  EXPECT_THROW((void)pure_vertex_dp(no_minimum_fixture(), Objective::Cutwidth, states), CapacityError);
}

TEST(PrefixCutProfile, TransitiveAndTriangle) {
  EXPECT_EQ(prefix_cut_profile(transitive(3)).min_at_size, (std::vector<std::int64_t>{0, 0, 0, 0}));
  EXPECT_EQ(prefix_cut_profile(triangle()).max_at_size, (std::vector<std::int64_t>{0, 1, 1, 0}));
}

TEST(PrefixCutProfile, BracketsEveryOrdering) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph d = random_digraph(7, 0.4, seed);
    const auto profile = prefix_cut_profile(d);
    EXPECT_EQ(profile.max_at_size.front(), 0);
    EXPECT_EQ(profile.max_at_size.back(), 0);
    std::vector<Vertex> seq(7);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    std::vector<std::int64_t> lo(8, INT64_MAX), hi(8, 0);
    do {
      const auto cuts = oracle::cut_vector(d, seq);
      for (std::size_t i = 0; i <= 7; ++i) {
        lo[i] = std::min(lo[i], cuts[i]);
        hi[i] = std::max(hi[i], cuts[i]);
      }
    } while (std::next_permutation(seq.begin(), seq.end()));
    EXPECT_EQ(profile.min_at_size, lo);
    EXPECT_EQ(profile.max_at_size, hi);
  }
}

TEST(DecideCutwidth, Triangle) {
  EXPECT_FALSE(decide_cutwidth(triangle(), 0).within);
  const auto yes = decide_cutwidth(triangle(), 1);
  ASSERT_TRUE(yes.within);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_EQ(cut_vector(triangle(), *yes.witness).width(), 1);
}

TEST(DecideCutwidth, LargeTournamentUsesSortedOrdering) {
  const Digraph t = random_tournament(1000, 7);
  const auto r = decide_cutwidth(t, 1000000);
  EXPECT_TRUE(r.within);
  EXPECT_EQ(r.solver, "tournament-sorted");
  EXPECT_EQ(cut_vector(t, *r.witness).width(), r.cutwidth);
}

TEST(DecideCutwidth, CapabilityErrorBeyondAllCaps) {
  const Digraph d = random_semicomplete(40, 0.5, 3);
  EXPECT_THROW((void)decide_cutwidth(d, 5), CapacityError);
}

TEST(SolveExact, DispatchPrefersPureDpForFewNonPure) {
  const Digraph d = random_semicomplete_with_nonpure(30, 4, 0.2, 11);
  const auto r = solve_exact(d, Objective::Ola);
  EXPECT_EQ(r.solver, "pure-dp");
  expect_witness(d, r);
}
