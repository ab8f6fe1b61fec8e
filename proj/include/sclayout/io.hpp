#ifndef SCLAYOUT_IO_HPP
#define SCLAYOUT_IO_HPP

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/generators.hpp"

namespace sclayout {

enum class ParseErrorKind {
  MissingHeader,
  MalformedHeader,
  MalformedLine,
  IdOutOfRange,
  DuplicateArc,
  SelfLoop,
  CountMismatch,
  ClauseTooLong,
  EmptyClause,
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MissingHeader: return "missing header";
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::IdOutOfRange: return "id out of range";
    case ParseErrorKind::DuplicateArc: return "duplicate arc";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::CountMismatch: return "count mismatch";
    case ParseErrorKind::ClauseTooLong: return "clause longer than 3 literals";
    case ParseErrorKind::EmptyClause: return "empty clause";
  }
  return "parse error";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        line_(line) {}

  [[nodiscard]] ParseErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool parse_int(const std::string& s, std::int64_t& value) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  value = v;
  return true;
}

/// Splits into lines, tracking 1-based line numbers; skips blank and `c` comment lines.
template <typename Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = tokens(line);
    if (!toks.empty() && toks[0] != "c" && toks[0][0] != '%') fn(line_no, toks);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace detail

/// `p digraph <n> <m>` followed by m lines `a <u> <v>` (1-based ids).
[[nodiscard]] inline Digraph parse_digraph(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0, m = 0;
  std::size_t last_line = 0;
  std::vector<Arc> arcs;
  std::vector<std::uint8_t> present;
  detail::for_each_content_line(text, [&](std::size_t line, const std::vector<std::string>& toks) {
    last_line = line;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(ParseErrorKind::MalformedHeader, line, "second header");
      if (toks.size() != 4 || toks[1] != "digraph" || !detail::parse_int(toks[2], n) ||
          !detail::parse_int(toks[3], m) || n < 0 || m < 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, line, "expected 'p digraph <n> <m>'");
      }
      if (n > 10000) throw ParseError(ParseErrorKind::MalformedHeader, line, "vertex count above 10000");
      have_header = true;
      present.assign(static_cast<std::size_t>(n * n), 0);
      return;
    }
    if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, line, "arc before header");
    std::int64_t u = 0, v = 0;
    if (toks[0] != "a" || toks.size() != 3 || !detail::parse_int(toks[1], u) || !detail::parse_int(toks[2], v)) {
      throw ParseError(ParseErrorKind::MalformedLine, line, "expected 'a <u> <v>'");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(ParseErrorKind::IdOutOfRange, line, "vertex ids must lie in [1," + std::to_string(n) + "]");
    }
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line, "at vertex " + std::to_string(u));
    auto& cell = present[static_cast<std::size_t>((u - 1) * n + (v - 1))];
    if (cell) {
      throw ParseError(ParseErrorKind::DuplicateArc, line, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    cell = 1;
    arcs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  });
  if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, last_line + 1, "no 'p digraph' line");
  if (static_cast<std::int64_t>(arcs.size()) != m) {
    throw ParseError(ParseErrorKind::CountMismatch, last_line,
                     "header declares " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
  }
  return Digraph(static_cast<std::size_t>(n), arcs);
}

/// Canonical text: header, then arcs sorted lexicographically.
[[nodiscard]] inline std::string write_digraph(const Digraph& d, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& line : comments) out << "c " << line << '\n';
  out << "p digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
  return out.str();
}

/// DIMACS CNF; clauses with fewer than 3 literals are padded by repetition.
[[nodiscard]] inline CnfFormula parse_cnf(std::string_view text) {
  bool have_header = false;
  std::int64_t vars = 0, declared = 0;
  std::size_t last_line = 0, clause_line = 0;
  CnfFormula f;
  std::vector<Literal> pending;
  detail::for_each_content_line(text, [&](std::size_t line, const std::vector<std::string>& toks) {
    last_line = line;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(ParseErrorKind::MalformedHeader, line, "second header");
      if (toks.size() != 4 || toks[1] != "cnf" || !detail::parse_int(toks[2], vars) ||
          !detail::parse_int(toks[3], declared) || vars < 0 || declared < 0 || vars > 1000000) {
        throw ParseError(ParseErrorKind::MalformedHeader, line, "expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      f.num_vars = static_cast<int>(vars);
      return;
    }
    if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, line, "clause before header");
    for (const auto& tok : toks) {
      std::int64_t lit = 0;
      if (!detail::parse_int(tok, lit)) throw ParseError(ParseErrorKind::MalformedLine, line, "bad literal '" + tok + "'");
      if (pending.empty()) clause_line = line;
      if (lit == 0) {
        if (pending.empty()) throw ParseError(ParseErrorKind::EmptyClause, line, "");
        f.clauses.push_back(make_clause(pending));
        pending.clear();
        continue;
      }
      if (std::llabs(lit) > vars) {
        throw ParseError(ParseErrorKind::IdOutOfRange, line, "literal " + tok + " exceeds " + std::to_string(vars));
      }
      if (pending.size() == 3) throw ParseError(ParseErrorKind::ClauseTooLong, line, "");
      pending.push_back(static_cast<Literal>(lit));
    }
  });
  if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, last_line + 1, "no 'p cnf' line");
  if (!pending.empty()) throw ParseError(ParseErrorKind::MalformedLine, clause_line, "clause not terminated by 0");
  if (static_cast<std::int64_t>(f.clauses.size()) != declared) {
    throw ParseError(ParseErrorKind::CountMismatch, last_line,
                     "header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(f.clauses.size()));
  }
  return f;
}

[[nodiscard]] inline std::string write_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

/// `p edge <n> <m>` followed by m lines `e <u> <v>`.
[[nodiscard]] inline UndirectedGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0, m = 0;
  std::size_t last_line = 0;
  UndirectedGraph g;
  std::vector<std::uint8_t> present;
  detail::for_each_content_line(text, [&](std::size_t line, const std::vector<std::string>& toks) {
    last_line = line;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(ParseErrorKind::MalformedHeader, line, "second header");
      if (toks.size() != 4 || toks[1] != "edge" || !detail::parse_int(toks[2], n) || !detail::parse_int(toks[3], m) ||
          n < 0 || m < 0 || n > 10000) {
        throw ParseError(ParseErrorKind::MalformedHeader, line, "expected 'p edge <n> <m>'");
      }
      have_header = true;
      g.n = static_cast<std::size_t>(n);
      present.assign(static_cast<std::size_t>(n * n), 0);
      return;
    }
    if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, line, "edge before header");
    std::int64_t u = 0, v = 0;
    if (toks[0] != "e" || toks.size() != 3 || !detail::parse_int(toks[1], u) || !detail::parse_int(toks[2], v)) {
      throw ParseError(ParseErrorKind::MalformedLine, line, "expected 'e <u> <v>'");
    }
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(ParseErrorKind::IdOutOfRange, line, "");
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line, "");
    auto& cell = present[static_cast<std::size_t>((std::min(u, v) - 1) * n + (std::max(u, v) - 1))];
    if (cell) throw ParseError(ParseErrorKind::DuplicateArc, line, "duplicate edge");
    cell = 1;
    g.edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  });
  if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, last_line + 1, "no 'p edge' line");
  if (static_cast<std::int64_t>(g.edges.size()) != m) {
    throw ParseError(ParseErrorKind::CountMismatch, last_line, "edge count differs from header");
  }
  return g;
}

[[nodiscard]] inline std::string write_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace sclayout

#endif  // SCLAYOUT_IO_HPP
