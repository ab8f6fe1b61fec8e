// Command-line front end: exact and approximate layouts, kernels, obstructions,
// vertex deletion, instance generators and report verification.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sclayout/digraph.hpp"
#include "sclayout/exact.hpp"
#include "sclayout/generators.hpp"
#include "sclayout/io.hpp"
#include "sclayout/kernels.hpp"
#include "sclayout/lean.hpp"
#include "sclayout/obstructions.hpp"
#include "sclayout/random.hpp"
#include "sclayout/tournament.hpp"

namespace {

using namespace sclayout;
using json = nlohmann::ordered_json;

constexpr int kAnswered = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  bool json = false;
  std::size_t cap_n = 24;
  std::size_t cap_k = 24;
  bool parallel = false;
  bool timing = false;
};

SolverCaps caps_of(const Globals& g) {
  SolverCaps caps;
  caps.subset_n = g.cap_n;
  caps.brute_n = std::min<std::size_t>(g.cap_n, 10);
  caps.pure_k = g.cap_k;
  return caps;
}

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

json one_based(std::span<const Vertex> vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

json one_based(const std::vector<Vertex>& vs) { return one_based(std::span<const Vertex>(vs)); }

std::vector<Vertex> zero_based(const json& arr, std::size_t n) {
  std::vector<Vertex> out;
  for (const auto& x : arr) {
    const auto v = x.get<std::int64_t>();
    if (v < 1 || v > static_cast<std::int64_t>(n)) throw std::invalid_argument("vertex id out of range");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

json arcs_json(const Digraph& d) {
  json out = json::array();
  for (const Arc& a : d.arcs()) out.push_back({a.tail + 1, a.head + 1});
  return out;
}

Digraph digraph_from_arcs(std::size_t n, const json& arcs) {
  std::vector<Arc> list;
  for (const auto& a : arcs) {
    list.push_back({static_cast<Vertex>(a.at(0).get<std::int64_t>() - 1),
                    static_cast<Vertex>(a.at(1).get<std::int64_t>() - 1)});
  }
  return Digraph(n, list);
}

json tangle_json(const TangleCertificate& t) {
  return {{"vertices", one_based(t.vertices)},
          {"k", t.k},
          {"alpha", t.alpha},
          {"bound", {{"num", t.bound.numerator()}, {"den", t.bound.denominator()}}}};
}

// ---------------------------------------------------------------------------
// Output

void print_text(const json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "input") continue;
    std::cout << key << ':';
    if (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& x) { return x.is_number(); })) {
      for (const auto& x : value) std::cout << ' ' << x.dump();
    } else if (value.is_string()) {
      std::cout << ' ' << value.get<std::string>();
    } else {
      std::cout << ' ' << value.dump();
    }
    std::cout << '\n';
  }
}

struct Run {
  const Globals& g;
  json report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Run(const Globals& globals, const std::string& command) : g(globals) {
    report["command"] = command;
  }

  Digraph load(const std::string& path) {
    const std::string text = read_text(path);
    report["input"] = {{"sha256", sha256_hex(text)}, {"text", text}};
    return parse_digraph(text);
  }

  int finish(int code) {
    report["seed"] = g.seed;
    if (g.timing) {
      report["wall_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (g.json) {
      std::cout << report.dump(2) << '\n';
    } else {
      print_text(report);
    }
    return code;
  }
};

void put_ordering(json& report, const Digraph& d, const Ordering& pi) {
  report["witness"] = one_based(pi.sequence());
  report["cuts"] = cut_vector(d, pi).cuts;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_exact(const Globals& g, Objective obj, const std::string& path, const std::string& solver) {
  Run run(g, obj == Objective::Cutwidth ? "ctw" : "ola");
  const Digraph d = run.load(path);
  SolverChoice choice = SolverChoice::Auto;
  if (solver == "brute") choice = SolverChoice::Brute;
  if (solver == "dp") choice = SolverChoice::SubsetDp;
  if (solver == "pure-dp") choice = SolverChoice::PureDp;
  const ExactResult r = solve_exact(d, obj, caps_of(g), choice);
  run.report["verdict"] = "ANSWERED";
  run.report["objective"] = to_string(obj);
  run.report["value"] = r.value;
  put_ordering(run.report, d, r.ordering);
  run.report["solver"] = r.solver;
  return run.finish(kAnswered);
}

int cmd_approx(const Globals& g, const std::string& path) {
  Run run(g, "approx");
  const Digraph d = run.load(path);
  if (!is_semicomplete(d)) throw UsageError("approx requires a semi-complete digraph");
  const ApproxResult a = approximate_semicomplete(d);
  run.report["verdict"] = "ANSWERED";
  run.report["width"] = a.width;
  run.report["cost"] = a.cost;
  put_ordering(run.report, d, a.ordering);
  run.report["ctw_lower_bound"] = relaxation_cutwidth_lower_bound(d);
  if (auto t = best_degree_tangle(relaxation(d))) run.report["tangle"] = tangle_json(*t);
  run.report["solver"] = "relaxation-sorted";
  return run.finish(kAnswered);
}

int cmd_tournament(const Globals& g, const std::string& path) {
  Run run(g, "tournament");
  const Digraph d = run.load(path);
  if (!is_tournament(d)) throw UsageError("tournament requires a tournament");
  const auto [ctw, ola] = tournament_exact(d);
  run.report["verdict"] = "ANSWERED";
  run.report["ctw"] = ctw.value;
  run.report["ola"] = ola.value;
  put_ordering(run.report, d, ctw.ordering);
  run.report["solver"] = ctw.solver;
  return run.finish(kAnswered);
}

int cmd_lean(const Globals& g, const std::string& path) {
  Run run(g, "lean");
  const Digraph d = run.load(path);
  const Ordering start =
      is_semicomplete(d) ? approximate_semicomplete(d).ordering : Ordering::identity(d.vertex_count());
  const LeanRefinement r = lean_refine(d, start);
  run.report["verdict"] = "ANSWERED";
  run.report["start"] = one_based(start.sequence());
  put_ordering(run.report, d, r.ordering);
  json steps = json::array();
  for (const RefineStep& s : r.steps) {
    steps.push_back({{"a", s.a},
                     {"b", s.b},
                     {"flow", s.flow},
                     {"min_cut", s.min_cut},
                     {"width", {s.width_before, s.width_after}},
                     {"cost", {s.cost_before, s.cost_after}}});
  }
  run.report["steps"] = steps;
  return run.finish(kAnswered);
}

/// Per-piece cutwidth answers; throws CapacityError when a piece is out of reach.
std::vector<bool> piece_answers(const KernelOutput& k, std::int64_t c, const SolverCaps& caps, bool parallel) {
  CutwidthOracle oracle(caps);
  std::vector<bool> answers(k.pieces.size(), false);
  if (!parallel) {
    for (std::size_t i = 0; i < k.pieces.size(); ++i) answers[i] = oracle.within(k.pieces[i].digraph, c);
    return answers;
  }
  std::vector<std::future<bool>> futures;
  for (const KernelPiece& p : k.pieces) {
    futures.push_back(std::async(std::launch::async, [&oracle, &p, c] { return oracle.within(p.digraph, c); }));
  }
  for (std::size_t i = 0; i < futures.size(); ++i) answers[i] = futures[i].get();
  return answers;
}

int cmd_turing(const Globals& g, const std::string& path, std::int64_t c, bool evaluate) {
  Run run(g, "turing-kernel");
  const Digraph d = run.load(path);
  if (!is_semicomplete(d)) throw UsageError("turing-kernel requires a semi-complete digraph");
  if (c < 1) throw UsageError("turing-kernel needs --c >= 1");
  const KernelOutput k = turing_kernel(d, c);
  run.report["c"] = c;
  if (k.reject) {
    run.report["verdict"] = "REJECT";
    put_ordering(run.report, d, k.ordering);
    return run.finish(kNegative);
  }
  put_ordering(run.report, d, k.ordering);
  run.report["milestones"] = k.milestones;
  run.report["piece_bound"] = turing_piece_bound(c);
  json pieces = json::array();
  for (const KernelPiece& p : k.pieces) pieces.push_back({{"vertices", one_based(p.vertices)}});
  if (evaluate) {
    const auto answers = piece_answers(k, c, caps_of(g), g.parallel);
    bool all = true;
    for (std::size_t i = 0; i < answers.size(); ++i) {
      pieces[i]["within"] = static_cast<bool>(answers[i]);
      all = all && answers[i];
    }
    run.report["pieces"] = pieces;
    run.report["verdict"] = all ? "YES" : "NO";
    return run.finish(all ? kAnswered : kNegative);
  }
  run.report["pieces"] = pieces;
  run.report["verdict"] = "PIECES";
  return run.finish(kAnswered);
}

int cmd_ola_kernel(const Globals& g, const std::string& path, std::int64_t k) {
  Run run(g, "ola-kernel");
  const Digraph d = run.load(path);
  if (k < 0) throw UsageError("ola-kernel needs --k >= 0");
  const OlaKernelOutput out = ola_kernel(d, k);
  run.report["k"] = k;
  run.report["verdict"] = out.reject ? "REJECT" : "REDUCED";
  run.report["kept"] = one_based(out.reduced.to_host);
  if (!out.reject) run.report["reduced"] = write_digraph(out.reduced.digraph);
  return run.finish(out.reject ? kNegative : kAnswered);
}

int cmd_obstruction(const Globals& g, const std::string& path, std::int64_t c) {
  Run run(g, "obstruction");
  const Digraph d = run.load(path);
  if (c < 0) throw UsageError("obstruction needs --c >= 0");
  CutwidthOracle oracle(caps_of(g));
  run.report["c"] = c;
  if (is_semicomplete(d)) {
    if (auto t = best_degree_tangle(relaxation(d))) run.report["tangle"] = tangle_json(*t);
  }
  const auto found = find_cutwidth_minimal(d, c, oracle);
  if (!found) {
    const CutwidthDecision dec = decide_cutwidth(d, c, caps_of(g));
    run.report["verdict"] = "WITHIN";
    put_ordering(run.report, d, *dec.witness);
    return run.finish(kNegative);
  }
  run.report["verdict"] = "OBSTRUCTION";
  run.report["obstruction"] = {{"vertices", one_based(found->vertices)}, {"threshold", found->threshold}};
  return run.finish(kAnswered);
}

Family family_of(const std::string& s) {
  if (s == "t") return Family::Tournament;
  if (s == "sc") return Family::Semicomplete;
  throw UsageError("family must be t or sc");
}

int cmd_enumerate(const Globals& g, std::int64_t c, std::size_t n_max, const std::string& family) {
  Run run(g, "enumerate");
  const Family fam = family_of(family);
  const auto catalog = enumerate_minimal_obstructions(c, n_max, fam);
  run.report["c"] = c;
  run.report["nmax"] = n_max;
  run.report["family"] = family;
  run.report["bound"] = fam == Family::Tournament ? tournament_obstruction_bound(c) : semicomplete_obstruction_bound(c);
  json members = json::array();
  for (const Digraph& d : catalog) members.push_back({{"n", d.vertex_count()}, {"arcs", arcs_json(d)}});
  run.report["verdict"] = "ANSWERED";
  run.report["count"] = catalog.size();
  run.report["catalog"] = members;
  return run.finish(kAnswered);
}

int cmd_cvd(const Globals& g, const std::string& mode, const std::string& path, std::int64_t c, std::int64_t k) {
  Run run(g, "cvd " + mode);
  const Digraph d = run.load(path);
  if (c < 0) throw UsageError("cvd needs --c >= 0");
  CutwidthOracle oracle(caps_of(g));
  run.report["c"] = c;
  if (mode == "branch") {
    if (k < 0) throw UsageError("cvd branch needs --k >= 0");
    run.report["k"] = k;
    const auto found = cvd_branching(d, c, k, oracle);
    if (!found) {
      run.report["verdict"] = "NO_SOLUTION";
      return run.finish(kNegative);
    }
    run.report["verdict"] = "SOLUTION";
    run.report["deletion"] = one_based(found->vertices);
    run.report["certified"] = found->certified;
    return run.finish(kAnswered);
  }
  if (mode == "approx") {
    const CvdApprox r = cvd_approx(d, c, oracle);
    run.report["verdict"] = "SOLUTION";
    run.report["deletion"] = one_based(r.deletion.vertices);
    json obs = json::array();
    for (const auto& o : r.obstructions) obs.push_back(one_based(o));
    run.report["obstructions"] = obs;
    run.report["certified"] = r.deletion.certified;
    return run.finish(kAnswered);
  }
  if (k < 0) throw UsageError("cvd kernel needs --k >= 0");
  run.report["k"] = k;
  const CvdKernel r = cvd_kernel(d, c, k, oracle, g.cap_n);
  run.report["verdict"] = "REDUCED";
  run.report["kept"] = one_based(r.reduced.to_host);
  run.report["family_size"] = r.family.size();
  run.report["kept_family_size"] = r.kept_family.size();
  run.report["max_set_size"] = r.max_set_size;
  run.report["discarded"] = r.discarded;
  run.report["reduced"] = write_digraph(r.reduced.digraph);
  return run.finish(kAnswered);
}

// ---------------------------------------------------------------------------
// Generators

struct GenParams {
  std::string kind;
  std::string file;
  std::int64_t t = 1, x = 0, c = 1, n = 5;
  double p_sym = 0.0;
  std::string family = "sc";
};

json gen_params_json(const GenParams& p, const std::string& input_text) {
  json out = {{"kind", p.kind}};
  if (p.kind == "nae" || p.kind == "complement-nae" || p.kind == "vc") out["input"] = input_text;
  if (p.kind == "circular") out["t"] = p.t, out["x"] = p.x;
  if (p.kind == "minimal" || p.kind == "vc") out["c"] = p.c;
  if (p.kind == "random") out["n"] = p.n, out["p_sym"] = p.p_sym, out["family"] = p.family;
  return out;
}

/// Digraph plus comment lines for the generator named by `kind`.
std::pair<Digraph, std::vector<std::string>> generate(const json& params, std::uint64_t seed) {
  const std::string kind = params.at("kind").get<std::string>();
  std::vector<std::string> notes{"generator " + kind};
  if (kind == "nae" || kind == "complement-nae") {
    const CnfFormula f = parse_cnf(params.at("input").get<std::string>());
    if (kind == "nae") {
      const NaeInstance inst = nae_instance(f);
      notes.push_back("m " + std::to_string(inst.m));
      return {inst.digraph, notes};
    }
    const HardnessInstance h = hardness_instance(f);
    notes.push_back("m " + std::to_string(h.base.m));
    notes.push_back("ctw_target " + std::to_string(h.ctw_target));
    notes.push_back("ola_target " + std::to_string(h.ola_target));
    return {h.digraph, notes};
  }
  if (kind == "circular") {
    const auto t = params.at("t").get<std::int64_t>(), x = params.at("x").get<std::int64_t>();
    notes.push_back("t " + std::to_string(t) + " x " + std::to_string(x) + " ctw " + std::to_string(t * (t + 1) / 2 - x));
    if (circular_is_boundary(t, x)) notes.push_back("boundary case x = t");
    return {circular_tournament(t, x), notes};
  }
  if (kind == "minimal") {
    const auto c = params.at("c").get<std::int64_t>();
    notes.push_back("c " + std::to_string(c));
    return {minimal_tournament(c), notes};
  }
  if (kind == "vc") {
    const UndirectedGraph graph = parse_graph(params.at("input").get<std::string>());
    const auto c = params.at("c").get<std::int64_t>();
    const VcReduction r = vc_reduction(graph, c);
    notes.push_back("c " + std::to_string(c) + " t " + std::to_string(r.t) + " x " + std::to_string(r.x));
    return {r.tournament, notes};
  }
  if (kind == "random") {
    const auto n = params.at("n").get<std::int64_t>();
    const auto p = params.at("p_sym").get<double>();
    const auto family = params.at("family").get<std::string>();
    if (n < 0) throw UsageError("random needs --n >= 0");
    notes.push_back("seed " + std::to_string(seed));
    const auto un = static_cast<std::size_t>(n);
    if (family == "t") return {random_tournament(un, seed), notes};
    if (family == "sc") return {random_semicomplete(un, p, seed), notes};
    if (family == "digraph") return {random_digraph(un, p, seed), notes};
    throw UsageError("random family must be t, sc or digraph");
  }
  throw UsageError("unknown generator '" + kind + "'");
}

int cmd_gen(const Globals& g, const GenParams& p) {
  std::string input_text;
  if (p.kind == "nae" || p.kind == "complement-nae" || p.kind == "vc") input_text = read_text(p.file);
  const json params = gen_params_json(p, input_text);
  auto [d, notes] = generate(params, g.seed);
  const std::string text = write_digraph(d, notes);
  if (!g.json) {
    std::cout << text;
    return kAnswered;
  }
  Run run(g, "gen");
  run.report["verdict"] = "ANSWERED";
  run.report["params"] = params;
  run.report["output"] = {{"sha256", sha256_hex(text)}, {"text", text}};
  return run.finish(kAnswered);
}

// ---------------------------------------------------------------------------
// Verification: everything is recomputed from the report's input and witnesses.

struct Checks {
  std::vector<std::pair<std::string, std::string>> failures;
  std::vector<std::string> passes;
  std::vector<std::string> skips;

  void expect(bool ok, const std::string& what, const std::string& why = "") {
    if (ok) {
      passes.push_back(what);
    } else {
      failures.push_back({what, why});
    }
  }
};

Ordering witness_of(const json& r, const Digraph& d) { return Ordering(zero_based(r.at("witness"), d.vertex_count())); }

void check_witness(Checks& ck, const json& r, const Digraph& d) {
  const Ordering pi = witness_of(r, d);
  ck.expect(pi.size() == d.vertex_count(), "witness is a permutation");
  ck.expect(json(cut_vector(d, pi).cuts) == r.at("cuts"), "cut vector re-evaluates");
}

void verify_report(Checks& ck, const json& r, const Globals& g) {
  const std::string command = r.at("command").get<std::string>();
  const SolverCaps caps = caps_of(g);
  if (command == "gen") {
    const json& out = r.at("output");
    ck.expect(sha256_hex(out.at("text").get<std::string>()) == out.at("sha256"), "output digest");
    auto [d, notes] = generate(r.at("params"), r.at("seed").get<std::uint64_t>());
    ck.expect(write_digraph(d, notes) == out.at("text"), "generator reproduces output");
    return;
  }
  if (command == "enumerate") {
    const auto c = r.at("c").get<std::int64_t>();
    const Family fam = family_of(r.at("family").get<std::string>());
    CutwidthOracle oracle(caps);
    std::set<CanonicalForm> forms;
    for (const auto& m : r.at("catalog")) {
      const Digraph d = digraph_from_arcs(m.at("n").get<std::size_t>(), m.at("arcs"));
      const std::string tag = "member on " + std::to_string(d.vertex_count()) + " vertices";
      ck.expect(fam == Family::Tournament ? is_tournament(d) : is_semicomplete(d), tag + " in family");
      ck.expect(static_cast<std::int64_t>(d.vertex_count()) <= r.at("bound").get<std::int64_t>(), tag + " within bound");
      std::vector<Vertex> all(d.vertex_count());
      std::iota(all.begin(), all.end(), Vertex{0});
      ck.expect(verify_obstruction(d, ObstructionReport{all, c}, oracle), tag + " is minimal");
      ck.expect(forms.insert(canonical_form(d)).second, tag + " not isomorphic to an earlier member");
    }
    ck.expect(forms.size() == r.at("count").get<std::size_t>(), "count matches catalog");
    return;
  }

  const json& input = r.at("input");
  const std::string text = input.at("text").get<std::string>();
  ck.expect(sha256_hex(text) == input.at("sha256"), "input digest");
  const Digraph d = parse_digraph(text);

  if (command == "ctw" || command == "ola") {
    const Objective obj = command == "ctw" ? Objective::Cutwidth : Objective::Ola;
    check_witness(ck, r, d);
    const CutVector cv = cut_vector(d, witness_of(r, d));
    ck.expect(objective_value(cv, obj) == r.at("value"), "value equals witness " + command);
    try {
      ck.expect(solve_exact(d, obj, caps).value == r.at("value"), "value is optimal (re-solved)");
    } catch (const CapacityError& e) {
      ck.skips.push_back(std::string("optimality: ") + e.what());
    }
  } else if (command == "tournament") {
    check_witness(ck, r, d);
    const Ordering pi = witness_of(r, d);
    const CutVector cv = cut_vector(d, pi);
    ck.expect(is_tournament(d), "input is a tournament");
    ck.expect(is_sorted_ordering(relaxation(d), pi), "witness is sorted by indegree, hence minimum");
    ck.expect(cv.width() == r.at("ctw") && cv.cost() == r.at("ola"), "values equal witness width and cost");
  } else if (command == "approx") {
    check_witness(ck, r, d);
    const CutVector cv = cut_vector(d, witness_of(r, d));
    ck.expect(witness_of(r, d) == relaxation_sorted_ordering(d), "witness is the relaxation-sorted ordering");
    ck.expect(cv.width() == r.at("width") && cv.cost() == r.at("cost"), "width and cost equal witness");
    ck.expect(relaxation_cutwidth_lower_bound(d) == r.at("ctw_lower_bound"), "lower bound recomputed");
  } else if (command == "lean") {
    check_witness(ck, r, d);
    ck.expect(is_lean(d, witness_of(r, d)).lean, "witness passes the full leanness audit");
    const Ordering start(zero_based(r.at("start"), d.vertex_count()));
    ck.expect(cut_vector(d, witness_of(r, d)).width() <= cut_vector(d, start).width(), "width did not increase");
  } else if (command == "turing-kernel") {
    const auto c = r.at("c").get<std::int64_t>();
    check_witness(ck, r, d);
    const CutVector cv = cut_vector(d, witness_of(r, d));
    if (r.at("verdict") == "REJECT") {
      ck.expect(witness_of(r, d) == relaxation_sorted_ordering(d), "witness is the 2-approximation ordering");
      ck.expect(cv.width() > 2 * c, "approximation width exceeds 2c, so ctw > c");
    } else {
      const KernelOutput k = turing_kernel(d, c);
      ck.expect(!k.reject && k.pieces.size() == r.at("pieces").size(), "kernel recomputes to the same piece count");
      const auto& pieces = r.at("pieces");
      std::vector<bool> covered(d.vertex_count(), false);
      bool all = true, evaluated = false;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto vs = zero_based(pieces[i].at("vertices"), d.vertex_count());
        for (Vertex v : vs) covered[v] = true;
        ck.expect(static_cast<std::int64_t>(vs.size()) <= turing_piece_bound(c),
                  "piece " + std::to_string(i + 1) + " within size bound");
        if (i < k.pieces.size()) ck.expect(vs == k.pieces[i].vertices, "piece " + std::to_string(i + 1) + " recomputed");
        if (pieces[i].contains("within")) {
          evaluated = true;
          CutwidthOracle oracle(caps);
          const bool within = oracle.within(induced_subdigraph(d, vs).digraph, c);
          ck.expect(within == pieces[i].at("within").get<bool>(), "piece " + std::to_string(i + 1) + " answer");
          all = all && within;
        }
      }
      ck.expect(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }), "pieces cover every vertex");
      if (evaluated) ck.expect((all ? "YES" : "NO") == r.at("verdict").get<std::string>(), "verdict is the conjunction");
    }
  } else if (command == "ola-kernel") {
    const auto k = r.at("k").get<std::int64_t>();
    std::vector<Vertex> expect;
    for (const auto& comp : strongly_connected_components(d)) {
      if (comp.size() > 1) expect.insert(expect.end(), comp.begin(), comp.end());
    }
    std::sort(expect.begin(), expect.end());
    ck.expect(zero_based(r.at("kept"), d.vertex_count()) == expect, "kept vertices are the non-trivial components");
    const bool reject = static_cast<std::int64_t>(expect.size()) > 2 * k;
    ck.expect(reject == (r.at("verdict") == "REJECT"), "reject iff more than 2k vertices remain");
  } else if (command == "obstruction") {
    const auto c = r.at("c").get<std::int64_t>();
    if (r.contains("tangle")) {
      const json& t = r.at("tangle");
      TangleCertificate cert{zero_based(t.at("vertices"), d.vertex_count()), t.at("k").get<std::int64_t>(),
                             t.at("alpha").get<std::int64_t>(),
                             Rational(t.at("bound").at("num").get<std::int64_t>(), t.at("bound").at("den").get<std::int64_t>())};
      ck.expect(is_semicomplete(d) && verify_tangle(relaxation(d), cert), "degree tangle certificate");
    }
    CutwidthOracle oracle(caps);
    if (r.at("verdict") == "WITHIN") {
      check_witness(ck, r, d);
      ck.expect(cut_vector(d, witness_of(r, d)).width() <= c, "witness width at most c");
    } else {
      const json& o = r.at("obstruction");
      const ObstructionReport rep{zero_based(o.at("vertices"), d.vertex_count()), o.at("threshold").get<std::int64_t>()};
      ck.expect(rep.threshold == c + 1, "threshold is c+1");
      ck.expect(verify_obstruction(d, rep, oracle), "obstruction is cutwidth-minimal");
    }
  } else if (command.rfind("cvd ", 0) == 0) {
    const auto c = r.at("c").get<std::int64_t>();
    CutwidthOracle oracle(caps);
    const std::string mode = command.substr(4);
    if (mode == "kernel") {
      const CvdKernel kern = cvd_kernel(d, c, r.at("k").get<std::int64_t>(), oracle, g.cap_n);
      ck.expect(one_based(kern.reduced.to_host) == r.at("kept"), "kernel recomputes to the same vertex set");
    } else if (r.at("verdict") == "NO_SOLUTION") {
      ck.expect(!cvd_branching(d, c, r.at("k").get<std::int64_t>(), oracle), "search re-run finds no solution");
    } else {
      const auto del = zero_based(r.at("deletion"), d.vertex_count());
      ck.expect(oracle.within(delete_vertices(d, del).digraph, c), "remaining digraph has cutwidth at most c");
      if (mode == "branch") {
        ck.expect(static_cast<std::int64_t>(del.size()) <= r.at("k").get<std::int64_t>(), "deletion within budget");
      } else {
        std::set<Vertex> seen;
        for (const auto& o : r.at("obstructions")) {
          const auto vs = zero_based(o, d.vertex_count());
          ck.expect(!oracle.within(induced_subdigraph(d, vs).digraph, c), "each removed set has cutwidth above c");
          for (Vertex v : vs) ck.expect(seen.insert(v).second, "removed sets are disjoint");
        }
        ck.expect(seen.size() == del.size(), "deletion is the union of the removed sets");
      }
    }
  } else {
    throw UsageError("unknown report command '" + command + "'");
  }
}

int cmd_verify(const Globals& g, const std::string& path) {
  json r;
  try {
    r = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw UsageError(std::string("report is not valid JSON: ") + e.what());
  }
  Checks ck;
  try {
    verify_report(ck, r, g);
  } catch (const json::exception& e) {
    ck.failures.push_back({"report structure", e.what()});
  } catch (const std::invalid_argument& e) {
    ck.failures.push_back({"report contents", e.what()});
  }
  for (const auto& s : ck.passes) std::cout << "PASS " << s << '\n';
  for (const auto& s : ck.skips) std::cout << "SKIP " << s << '\n';
  for (const auto& [what, why] : ck.failures) std::cout << "FAIL " << what << (why.empty() ? "" : ": " + why) << '\n';
  std::cout << (ck.failures.empty() ? "verified" : "rejected") << '\n';
  return ck.failures.empty() ? kAnswered : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutwidth and linear arrangement of semi-complete digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for generators");
  app.add_flag("--json", g.json, "emit the JSON report");
  app.add_option("--cap-n", g.cap_n, "vertex cap for exponential solvers")->check(CLI::Range(1, 30));
  app.add_option("--cap-k", g.cap_k, "non-pure vertex cap for the pure-vertex DP")->check(CLI::Range(0, 30));
  app.add_flag("--parallel", g.parallel, "evaluate kernel pieces concurrently");
  app.add_flag("--timing", g.timing, "include wall time in the report");

  std::string file = "-", solver = "auto", family = "t", mode;
  std::int64_t c = 1, k = 0;
  std::size_t nmax = 5;
  bool no_evaluate = false;
  std::function<int()> action;

  auto input = [&](CLI::App* sub) { sub->add_option("file", file, "input (.dg), '-' for stdin")->required(); };

  for (const char* name : {"ctw", "ola"}) {
    auto* sub = app.add_subcommand(name, std::string("exact ") + (name[0] == 'c' ? "cutwidth" : "linear arrangement"));
    input(sub);
    sub->add_option("--solver", solver)->check(CLI::IsMember({"auto", "brute", "dp", "pure-dp"}));
    const Objective obj = name[0] == 'c' ? Objective::Cutwidth : Objective::Ola;
    sub->callback([&, obj] { action = [&, obj] { return cmd_exact(g, obj, file, solver); }; });
  }
  auto* approx = app.add_subcommand("approx", "2-approximation for semi-complete digraphs");
  input(approx);
  approx->callback([&] { action = [&] { return cmd_approx(g, file); }; });

  auto* tour = app.add_subcommand("tournament", "exact optima of a tournament");
  input(tour);
  tour->callback([&] { action = [&] { return cmd_tournament(g, file); }; });

  auto* lean = app.add_subcommand("lean", "lean refinement of the approximation ordering");
  input(lean);
  lean->callback([&] { action = [&] { return cmd_lean(g, file); }; });

  auto* turing = app.add_subcommand("turing-kernel", "split into small pieces deciding ctw <= c");
  input(turing);
  turing->add_option("--c", c)->required();
  turing->add_flag("--no-evaluate", no_evaluate, "list pieces without solving them");
  turing->callback([&] { action = [&] { return cmd_turing(g, file, c, !no_evaluate); }; });

  auto* olak = app.add_subcommand("ola-kernel", "kernel for OLA <= k");
  input(olak);
  olak->add_option("--k", k)->required();
  olak->callback([&] { action = [&] { return cmd_ola_kernel(g, file, k); }; });

  auto* obs = app.add_subcommand("obstruction", "(c+1)-cutwidth-minimal subdigraph or a width-c witness");
  input(obs);
  obs->add_option("--c", c)->required();
  obs->callback([&] { action = [&] { return cmd_obstruction(g, file, c); }; });

  auto* enumerate = app.add_subcommand("enumerate", "catalog of small cutwidth-minimal digraphs");
  enumerate->add_option("--c", c)->required();
  enumerate->add_option("--nmax", nmax)->required();
  enumerate->add_option("--family", family)->check(CLI::IsMember({"t", "sc"}));
  enumerate->callback([&] { action = [&] { return cmd_enumerate(g, c, nmax, family); }; });

  auto* cvd = app.add_subcommand("cvd", "cutwidth vertex deletion");
  cvd->require_subcommand(1);
  cvd->fallthrough();
  for (const char* name : {"branch", "approx", "kernel"}) {
    auto* sub = cvd->add_subcommand(name);
    input(sub);
    sub->add_option("--c", c)->required();
    auto* kopt = sub->add_option("--k", k);
    if (std::string(name) != "approx") kopt->required();
    const std::string m = name;
    sub->callback([&, m] { action = [&, m] { return cmd_cvd(g, m, file, c, k); }; });
  }

  GenParams gp;
  auto* gen = app.add_subcommand("gen", "instance generators; writes .dg text");
  gen->require_subcommand(1);
  gen->fallthrough();
  for (const char* name : {"nae", "complement-nae", "vc"}) {
    auto* sub = gen->add_subcommand(name);
    sub->add_option("file", gp.file, std::string(name) == "vc" ? "edge list" : "DIMACS CNF")->required();
    if (std::string(name) == "vc") sub->add_option("--c", gp.c)->required();
    const std::string kind = name;
    sub->callback([&, kind] {
      gp.kind = kind;
      action = [&] { return cmd_gen(g, gp); };
    });
  }
  auto* circ = gen->add_subcommand("circular");
  circ->add_option("--t", gp.t)->required();
  circ->add_option("--x", gp.x)->required();
  circ->callback([&] {
    gp.kind = "circular";
    action = [&] { return cmd_gen(g, gp); };
  });
  auto* minimal = gen->add_subcommand("minimal");
  minimal->add_option("--c", gp.c)->required();
  minimal->callback([&] {
    gp.kind = "minimal";
    action = [&] { return cmd_gen(g, gp); };
  });
  auto* rnd = gen->add_subcommand("random");
  rnd->add_option("--n", gp.n)->required();
  rnd->add_option("--p-sym", gp.p_sym, "symmetric-pair (sc) or arc (digraph) probability")->check(CLI::Range(0.0, 1.0));
  rnd->add_option("--family", gp.family)->check(CLI::IsMember({"t", "sc", "digraph"}));
  rnd->callback([&] {
    gp.kind = "random";
    action = [&] { return cmd_gen(g, gp); };
  });

  auto* verify = app.add_subcommand("verify", "re-check a JSON report from its witnesses");
  verify->add_option("report", file)->required();
  verify->callback([&] { action = [&] { return cmd_verify(g, file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kAnswered : kUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: input " << e.what() << '\n';
  } catch (const CapacityError& e) {
    std::cerr << "error: capability exceeded: " << e.what() << '\n';
  } catch (const TriviallySatisfiable& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
