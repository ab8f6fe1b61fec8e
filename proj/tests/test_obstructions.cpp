#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sclayout/exact.hpp"
#include "sclayout/generators.hpp"
#include "sclayout/kernels.hpp"
#include "sclayout/obstructions.hpp"
#include "sclayout/random.hpp"

using namespace sclayout;

namespace {

Digraph triangle() { return Digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}); }

Digraph transitive(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
  }
  return Digraph(n, arcs);
}

Digraph regular5() {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 5; ++i) {
    arcs.push_back({i, (i + 1) % 5});
    arcs.push_back({i, (i + 2) % 5});
  }
  return Digraph(5, arcs);
}

std::int64_t ctw(const Digraph& d) { return subset_dp(d, Objective::Cutwidth).value; }

std::int64_t brute_cvd(const Digraph& d, std::int64_t c, std::int64_t max_k) {
  return oracle::min_deletion(d, max_k, [&](const std::vector<Vertex>& rest) {
    return decide_cutwidth(induced_subdigraph(d, rest).digraph, c).within;
  });
}

}  // namespace

TEST(DegreeTangle, RegularFiveTournament) {
  const auto t = relaxation(regular5());
  const auto cert = find_degree_tangle(t, 0);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->vertices.size(), 5u);
  EXPECT_EQ(cert->k, 2);
  EXPECT_EQ(cert->bound, Rational(3));
  EXPECT_TRUE(verify_tangle(t, *cert));
  EXPECT_EQ(ctw(regular5()), 3);
}

TEST(DegreeTangle, TransitiveHasNoZeroSpreadTangle) {
  EXPECT_FALSE(find_degree_tangle(relaxation(transitive(6)), 0).has_value());
}

TEST(DegreeTangle, BoundNeverExceedsCutwidth) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Digraph d = seed % 2 ? random_tournament(9, seed) : random_semicomplete(9, 0.3, seed);
    const auto t = relaxation(d);
    const auto exact = ctw(d);
    for (std::int64_t alpha = 0; alpha < 4; ++alpha) {
      if (auto cert = find_degree_tangle(t, alpha)) {
        EXPECT_TRUE(verify_tangle(t, *cert));
        EXPECT_LE(cert->bound, Rational(exact)) << "seed " << seed;
      }
    }
  }
}

TEST(DegreeTangle, VerifyRejectsTamperedCertificate) {
  const auto t = relaxation(regular5());
  auto cert = *find_degree_tangle(t, 0);
  cert.bound = Rational(4);
  EXPECT_FALSE(verify_tangle(t, cert));
}

TEST(CutwidthOracle, MemoizesRepeatedQueries) {
  CutwidthOracle oracle;
  const Digraph d = random_digraph(8, 0.4, 3);
  const auto first = oracle.cutwidth(d);
  EXPECT_EQ(oracle.cutwidth(d), first);
  EXPECT_EQ(oracle.solves(), 1u);
  EXPECT_EQ(oracle.hits(), 1u);
  EXPECT_EQ(first, ctw(d));
}

TEST(CutwidthOracle, WithinMatchesExact) {
  CutwidthOracle oracle;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = random_semicomplete(8, 0.3, seed);
    const auto exact = ctw(d);
    for (std::int64_t c = 0; c <= 8; ++c) EXPECT_EQ(oracle.within(d, c), exact <= c);
  }
}

TEST(FindCutwidthMinimal, TriangleWithSource) {
  // triangle {0,1,2} plus vertex 3 beating all of it
  const Digraph d(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
  CutwidthOracle oracle;
  const auto report = find_cutwidth_minimal(d, 0, oracle);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(report->threshold, 1);
  EXPECT_TRUE(verify_obstruction(d, *report, oracle));
}

TEST(FindCutwidthMinimal, TransitiveIsWithin) {
  CutwidthOracle oracle;
  EXPECT_FALSE(find_cutwidth_minimal(transitive(6), 0, oracle).has_value());
}

TEST(FindCutwidthMinimal, ReportsAlwaysVerify) {
  CutwidthOracle oracle;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = random_semicomplete(9, 0.2, seed);
    const std::int64_t c = static_cast<std::int64_t>(seed % 3);
    const auto report = find_cutwidth_minimal(d, c, oracle);
    if (!report) {
      EXPECT_LE(ctw(d), c);
      continue;
    }
    EXPECT_TRUE(verify_obstruction(d, *report, oracle));
    EXPECT_GE(ctw(induced_subdigraph(d, report->vertices).digraph), c + 1);
  }
}

TEST(CanonicalForm, InvariantUnderRelabelingAndDecodes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(7);
    const Digraph d = random_digraph(n, 0.4, seed);
    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    rng.shuffle(relabel);
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) arcs.push_back({relabel[a.tail], relabel[a.head]});
    const Digraph e(n, arcs);
    const auto f = canonical_form(d);
    EXPECT_EQ(f, canonical_form(e));
    EXPECT_TRUE(oracle::isomorphic(d, decode_canonical(f.n, f.code)));
  }
}

TEST(CanonicalForm, DistinguishesNonIsomorphic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph a = random_digraph(5, 0.4, seed);
    const Digraph b = random_digraph(5, 0.4, seed + 1000);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::isomorphic(a, b));
  }
}

TEST(Enumerate, CatalogsForOne) {
  const auto tour = enumerate_minimal_obstructions(1, 4, Family::Tournament);
  ASSERT_EQ(tour.size(), 1u);
  EXPECT_TRUE(oracle::isomorphic(tour[0], triangle()));
  const auto semi = enumerate_minimal_obstructions(1, 3, Family::Semicomplete);
  ASSERT_EQ(semi.size(), 2u);
  const Digraph pair(2, std::vector<Arc>{{0, 1}, {1, 0}});
  EXPECT_TRUE(oracle::isomorphic(semi[0], pair) || oracle::isomorphic(semi[1], pair));
  EXPECT_TRUE(oracle::isomorphic(semi[0], triangle()) || oracle::isomorphic(semi[1], triangle()));
}

TEST(Enumerate, CapsAndArguments) {
  EXPECT_THROW((void)enumerate_minimal_obstructions(0, 3, Family::Tournament), std::invalid_argument);
  EXPECT_THROW((void)enumerate_minimal_obstructions(1, 8, Family::Tournament), CapacityError);
  EXPECT_THROW((void)enumerate_minimal_obstructions(1, 6, Family::Semicomplete), CapacityError);
}

TEST(Enumerate, TwoTournamentsContainMinimalConstruction) {
  const auto catalog = enumerate_minimal_obstructions(2, 6, Family::Tournament);
  const Digraph m2 = minimal_tournament(2);
  bool found = false;
  for (const Digraph& d : catalog) {
    EXPECT_LE(static_cast<std::int64_t>(d.vertex_count()), tournament_obstruction_bound(2));
    EXPECT_TRUE(is_tournament(d));
    EXPECT_GE(ctw(d), 2);
    for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_LT(ctw(delete_vertices(d, std::vector<Vertex>{v}).digraph), 2);
    found = found || oracle::isomorphic(d, m2);
  }
  EXPECT_TRUE(found);
}

TEST(Enumerate, SemicompleteMembersAreMinimal) {
  const auto catalog = enumerate_minimal_obstructions(2, 4, Family::Semicomplete);
  EXPECT_FALSE(catalog.empty());
  for (const Digraph& d : catalog) {
    EXPECT_TRUE(is_semicomplete(d));
    EXPECT_GE(ctw(d), 2);
    for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_LT(ctw(delete_vertices(d, std::vector<Vertex>{v}).digraph), 2);
  }
}

TEST(CvdBranching, Triangle) {
  CutwidthOracle oracle;
  const auto one = cvd_branching(triangle(), 0, 1, oracle);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->vertices.size(), 1u);
  EXPECT_TRUE(one->certified);
  EXPECT_FALSE(cvd_branching(triangle(), 0, 0, oracle).has_value());
}

TEST(CvdBranching, AgreesWithBruteForce) {
  CutwidthOracle oracle;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + rng.below(6);
    const std::int64_t c = static_cast<std::int64_t>(seed % 2);
    const Digraph d = random_semicomplete(n, 0.2, seed);
    const auto best = brute_cvd(d, c, 3);
    for (std::int64_t k = 0; k <= 3; ++k) {
      const auto found = cvd_branching(d, c, k, oracle);
      EXPECT_EQ(found.has_value(), best >= 0 && best <= k) << "seed " << seed << " k " << k;
      if (found) {
        EXPECT_TRUE(found->certified);
        EXPECT_LE(static_cast<std::int64_t>(found->vertices.size()), k);
      }
    }
  }
}

TEST(CvdApprox, TriangleTakesWholeObstruction) {
  CutwidthOracle oracle;
  const auto r = cvd_approx(triangle(), 0, oracle);
  EXPECT_EQ(r.deletion.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(r.deletion.certified);
  EXPECT_TRUE(cvd_approx(transitive(5), 0, oracle).deletion.vertices.empty());
}

TEST(CvdApprox, RatioWithinObstructionSize) {
  CutwidthOracle oracle;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::int64_t c = static_cast<std::int64_t>(seed % 2);
    const Digraph d = random_semicomplete(8, 0.15, seed);
    const auto r = cvd_approx(d, c, oracle);
    EXPECT_TRUE(r.deletion.certified);
    const auto opt = brute_cvd(d, c, 8);
    std::size_t largest = 0;
    for (const auto& o : r.obstructions) largest = std::max(largest, o.size());
    EXPECT_LE(static_cast<std::int64_t>(r.deletion.vertices.size()),
              opt * static_cast<std::int64_t>(std::max<std::size_t>(largest, 1)));
    EXPECT_LE(static_cast<std::int64_t>(largest), semicomplete_obstruction_bound(c + 1));
  }
}

TEST(MinimalBadSets, TriangleIsItsOwnFamily) {
  CutwidthOracle oracle;
  EXPECT_EQ(minimal_bad_sets(triangle(), 0, oracle), (std::vector<std::uint32_t>{0b111}));
  EXPECT_THROW((void)minimal_bad_sets(transitive(17), 0, oracle), CapacityError);
}

TEST(Sunflower, ThresholdAndSearch) {
  EXPECT_EQ(detail::sunflower_threshold(2, 1), 8u);
  EXPECT_EQ(detail::sunflower_threshold(3, 0), 6u);
  // {0,1},{0,2},{0,3} share exactly the core {0}
  const std::vector<std::uint32_t> sets{0b0011, 0b0101, 0b1001};
  const auto petals = detail::find_sunflower(sets, {0, 1, 2}, 3);
  ASSERT_TRUE(petals.has_value());
  EXPECT_EQ(petals->size(), 3u);
}

TEST(CvdKernel, TriangleUnchanged) {
  CutwidthOracle oracle;
  const auto k = cvd_kernel(triangle(), 0, 1, oracle);
  EXPECT_EQ(k.family, (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_EQ(k.reduced.digraph, triangle());
}

TEST(CvdKernel, TwoComposedTriangles) {
  CutwidthOracle oracle;
  const Digraph d = and_compose({triangle(), triangle()});
  const auto k = cvd_kernel(d, 0, 1, oracle);
  EXPECT_EQ(k.reduced.digraph.vertex_count(), 6u);
  EXPECT_FALSE(cvd_branching(d, 0, 1, oracle).has_value());
  EXPECT_FALSE(cvd_branching(k.reduced.digraph, 0, 1, oracle).has_value());
}

TEST(CvdKernel, EquiFeasible) {
  CutwidthOracle oracle;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const std::size_t n = 4 + rng.below(7);
    const std::int64_t c = static_cast<std::int64_t>(seed % 2);
    const std::int64_t k = static_cast<std::int64_t>(rng.below(4));
    const Digraph d = random_semicomplete(n, 0.15, seed);
    const auto kern = cvd_kernel(d, c, k, oracle);
    const auto a = brute_cvd(d, c, k);
    const auto b = brute_cvd(kern.reduced.digraph, c, k);
    EXPECT_EQ(a >= 0, b >= 0) << "seed " << seed;
  }
}

TEST(VcReduction, SingleEdge) {
  const UndirectedGraph g{2, {{0, 1}}};
  const auto r = vc_reduction(g, 1);
  EXPECT_EQ(r.t, 1);
  EXPECT_EQ(r.x, 0);
  EXPECT_EQ(r.tournament.vertex_count(), 8u);
  EXPECT_TRUE(is_tournament(r.tournament));
  EXPECT_EQ(brute_cvd(r.tournament, 1, 2), 1);
}

TEST(VcReduction, EdgelessNeedsNoDeletion) {
  const auto r = vc_reduction(UndirectedGraph{3, {}}, 2);
  EXPECT_EQ(r.tournament.vertex_count(), 3u * 6u);
  EXPECT_LE(tournament_exact(r.tournament).first.value, 2);
}

TEST(VcReduction, RejectsBadParameter) { EXPECT_THROW((void)vc_reduction(UndirectedGraph{1, {}}, 0), std::invalid_argument); }

TEST(Bounds, Formulas) {
  EXPECT_EQ(ceil_sqrt(2), 2);
  EXPECT_EQ(ceil_sqrt(4), 2);
  EXPECT_EQ(tournament_obstruction_bound(1), 2 + 4 + 1);
  EXPECT_EQ(tournament_obstruction_bound(2), 4 + 4 + 1);
  EXPECT_EQ(semicomplete_obstruction_bound(2), 97);
}
