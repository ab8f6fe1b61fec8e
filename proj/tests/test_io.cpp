#include <gtest/gtest.h>

#include "sclayout/io.hpp"
#include "sclayout/random.hpp"

using namespace sclayout;

namespace {

ParseErrorKind kind_of(std::string_view text) {
  try {
    (void)parse_digraph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseErrorKind::MalformedLine;
}

}  // namespace

TEST(DigraphFormat, Triangle) {
  const Digraph d = parse_digraph("c a comment\np digraph 3 3\na 1 2\na 2 3\na 3 1\n");
  EXPECT_EQ(d, Digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(DigraphFormat, CanonicalWriteSortsArcs) {
  const Digraph d = parse_digraph("p digraph 3 2\na 3 1\na 1 2");
  EXPECT_EQ(write_digraph(d), "p digraph 3 2\na 1 2\na 3 1\n");
  EXPECT_EQ(write_digraph(d, {"seed 7"}), "c seed 7\np digraph 3 2\na 1 2\na 3 1\n");
}

TEST(DigraphFormat, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph d = random_digraph(seed % 12, 0.3, seed);
    const std::string text = write_digraph(d);
    EXPECT_EQ(parse_digraph(text), d);
    EXPECT_EQ(write_digraph(parse_digraph(text)), text);
  }
}

TEST(DigraphFormat, SelfLoopReportsLine) {
  try {
    (void)parse_digraph("p digraph 2 1\n\na 1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::SelfLoop);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(DigraphFormat, DistinctDiagnostics) {
  EXPECT_EQ(kind_of("a 1 2\n"), ParseErrorKind::MissingHeader);
  EXPECT_EQ(kind_of(""), ParseErrorKind::MissingHeader);
  EXPECT_EQ(kind_of("p digraph x 1\n"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of("p graph 2 1\n"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of("p digraph 2 1\na 1 3\n"), ParseErrorKind::IdOutOfRange);
  EXPECT_EQ(kind_of("p digraph 2 1\na 0 1\n"), ParseErrorKind::IdOutOfRange);
  EXPECT_EQ(kind_of("p digraph 2 2\na 1 2\na 1 2\n"), ParseErrorKind::DuplicateArc);
  EXPECT_EQ(kind_of("p digraph 2 1\na 1\n"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(kind_of("p digraph 2 2\na 1 2\n"), ParseErrorKind::CountMismatch);
}

TEST(CnfFormat, Basic) {
  const CnfFormula f = parse_cnf("c x\np cnf 3 1\n1 2 3 0\n");
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0], (Clause{1, 2, 3}));
  EXPECT_EQ(f.num_vars, 3);
}

TEST(CnfFormat, PadsShortClauses) {
  const CnfFormula f = parse_cnf("p cnf 2 2\n1 0\n-1 2 0\n");
  EXPECT_EQ(f.clauses[0], (Clause{1, 1, 1}));
  EXPECT_EQ(f.clauses[1], (Clause{-1, 2, 2}));
}

TEST(CnfFormat, ClausesMaySpanLines) {
  const CnfFormula f = parse_cnf("p cnf 3 2\n1 2\n3 0 -1\n-2 0\n");
  EXPECT_EQ(f.clauses[0], (Clause{1, 2, 3}));
  EXPECT_EQ(f.clauses[1], (Clause{-1, -2, -2}));
}

TEST(CnfFormat, Errors) {
  auto kind = [](std::string_view text) {
    try {
      (void)parse_cnf(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return ParseErrorKind::MissingHeader;
  };
  EXPECT_EQ(kind("p cnf 4 1\n1 2 3 4 0\n"), ParseErrorKind::ClauseTooLong);
  EXPECT_EQ(kind("p cnf 2 1\n1 3 0\n"), ParseErrorKind::IdOutOfRange);
  EXPECT_EQ(kind("p cnf 2\n"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(kind("p cnf 2 1\n0\n"), ParseErrorKind::EmptyClause);
  EXPECT_EQ(kind("p cnf 2 2\n1 2 0\n"), ParseErrorKind::CountMismatch);
  EXPECT_EQ(kind("p cnf 2 1\n1 z 0\n"), ParseErrorKind::MalformedLine);
}

TEST(CnfFormat, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const CnfFormula f = random_cnf(5, seed % 7, seed);
    const CnfFormula g = parse_cnf(write_cnf(f));
    EXPECT_EQ(g.num_vars, f.num_vars);
    EXPECT_EQ(g.clauses, f.clauses);
  }
}

TEST(GraphFormat, RoundTripAndErrors) {
  const UndirectedGraph g = parse_graph("p edge 3 2\ne 1 2\ne 3 2\n");
  EXPECT_EQ(g.n, 3u);
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(write_graph(g), "p edge 3 2\ne 1 2\ne 3 2\n");
  EXPECT_THROW((void)parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
  EXPECT_THROW((void)parse_graph("p edge 3 1\ne 1 1\n"), ParseError);
}
