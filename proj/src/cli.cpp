#include "dcl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "dcl/catalan.hpp"
#include "dcl/errors.hpp"
#include "dcl/minuscule_b.hpp"
#include "dcl/symplectic.hpp"
#include "dcl/verify.hpp"
#include "dcl/weyl.hpp"

namespace dcl::cli {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kFamilies = {"mixedmiddleswitch", "domino-ballot", "domino-staircase",
                                            "domino-full", "snakes"};

Coord parse_ints(const std::string& s) {
  Coord c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("integer expected, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("integer expected, got '" + tok + "'");
    c.push_back(v);
  }
  if (c.empty()) throw ParseError("empty list");
  return c;
}

symplectic::BoardKind board_kind(const std::string& family) {
  if (family == "domino-ballot") return symplectic::BoardKind::ballot;
  if (family == "domino-staircase") return symplectic::BoardKind::staircase;
  return symplectic::BoardKind::full;
}

bool is_domino(const std::string& f) { return f.rfind("domino-", 0) == 0; }

void check_range(const std::string& family, int n, int k) {
  if (family == "mixedmiddleswitch" && (n < 2 || n > 12))
    throw InvalidObject("mixedmiddleswitch supports 2 <= n <= 12");
  if (is_domino(family) && (k < 1 || k > n || n > 8)) throw InvalidObject("domino boards need 1 <= k <= n <= 8");
  if (family == "snakes" && (n < 1 || n > 7)) throw InvalidObject("snakes supports 1 <= n <= 7");
}

Coord parse_state(const std::string& family, const std::string& s, int k) {
  if (family == "mixedmiddleswitch") return minuscule::parse_bits(s);
  Coord c = parse_ints(s);
  if (is_domino(family) && static_cast<int>(c.size()) < k) c.resize(k, 0);
  return c;
}

std::string format_state(const std::string& family, const Coord& c) {
  if (family == "mixedmiddleswitch") return minuscule::bits_to_string(c);
  return join_ints(c);
}

struct SolveArgs {
  std::string family, from, to;
  int n = 0, k = 0;
  bool json = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  check_range(a.family, a.n, a.k);
  Coord s = parse_state(a.family, a.from, a.k);
  Coord t = parse_state(a.family, a.to, a.k);
  Solution sol;
  bool replayed = false;
  if (a.family == "mixedmiddleswitch") {
    sol = minuscule::solve_mixedmiddleswitch(a.n, s, t);
    replayed = minuscule::replay(sol);
  } else if (a.family == "snakes") {
    sol = catalan::solve_snakes(a.n, s, t);
    replayed = catalan::replay(sol);
  } else {
    auto kind = board_kind(a.family);
    sol = symplectic::solve_domino(kind, a.k, a.n, s, t);
    replayed = symplectic::replay(kind, a.k, a.n, sol);
  }
  if (!replayed) throw InconsistentLattice("certificate failed to replay");

  if (a.json) {
    json j;
    j["family"] = a.family;
    j["params"] = {{"n", a.n}};
    if (is_domino(a.family)) j["params"]["k"] = a.k;
    j["distance"] = sol.distance;
    json counts = json::object();
    for (size_t c = 1; c < sol.color_counts.size(); ++c)
      if (sol.color_counts[c]) counts[std::to_string(c)] = sol.color_counts[c];
    j["color_counts"] = counts;
    json path = json::array();
    for (size_t i = 0; i < sol.states.size(); ++i) {
      json st = {{"state", format_state(a.family, sol.states[i])}};
      if (i) {
        st["color"] = sol.steps[i - 1].color;
        st["direction"] = sol.steps[i - 1].up ? "up" : "down";
      }
      path.push_back(st);
    }
    j["path"] = path;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "family " << a.family << '\n';
  out << "params n=" << a.n;
  if (is_domino(a.family)) out << " k=" << a.k;
  out << '\n';
  out << "distance " << sol.distance << '\n';
  out << "color_counts";
  for (size_t c = 1; c < sol.color_counts.size(); ++c)
    if (sol.color_counts[c]) out << ' ' << c << ':' << sol.color_counts[c];
  out << '\n';
  for (size_t i = 0; i < sol.steps.size(); ++i) {
    std::string x = format_state(a.family, sol.states[i]);
    std::string y = format_state(a.family, sol.states[i + 1]);
    if (sol.steps[i].up)
      out << x << " --" << sol.steps[i].color << "--> " << y << '\n';
    else
      out << x << " <--" << sol.steps[i].color << "-- " << y << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  verify::Options opt;
  std::string fault;
  bool json = false;
};

int cmd_verify(VerifyArgs a, std::ostream& out, std::ostream& err) {
  if (!a.fault.empty() && a.fault != "recolor-edge") throw ParseError("unknown fault: " + a.fault);
  a.opt.inject_fault = !a.fault.empty();
  auto r = verify::run_suite(a.suite, a.opt);
  if (a.json) {
    json j = {{"suite", a.suite}, {"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}};
    out << j.dump(2) << '\n';
  } else {
    for (const auto& f : r.failures) err << "counterexample: " << f << '\n';
    out << a.suite << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
  }
  return r.ok() ? 0 : 1;
}

struct ExportArgs {
  std::string family, format, state;
  int n = 0, k = 0;
};

int cmd_export(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  if (a.format != "dot" && a.format != "text-board") {
    err << "unknown format: " << a.format << '\n';
    return 2;
  }
  const bool dot = a.format == "dot";
  if (a.family == "mixedmiddleswitch") {
    if (!dot) throw ParseError("text-board needs a board family");
    check_range(a.family, a.n, a.k);
    auto fmt = [](const Coord& c) { return minuscule::bits_to_string(c); };
    out << minuscule::mixedmiddleswitch_digraph(a.n).to_dot("B" + std::to_string(a.n), fmt);
  } else if (a.family == "z" || a.family == "catalan" || a.family == "kn" || a.family == "dec") {
    if (!dot) throw ParseError("text-board needs a board family");
    if (a.family == "z") {
      check_range("mixedmiddleswitch", a.n, a.k);
      out << minuscule::z_lattice(a.n).diagram().to_dot("Z" + std::to_string(a.n));
    } else if (a.family == "catalan") {
      check_range("snakes", a.n, a.k);
      out << catalan::c_lattice(a.n).diagram().to_dot("C" + std::to_string(a.n));
    } else {
      check_range("domino-full", a.n, a.k);
      auto L = a.family == "kn" ? symplectic::kn_lattice(a.k, a.n) : symplectic::dec_lattice(a.k, a.n);
      out << L.diagram().to_dot(a.family);
    }
  } else if (is_domino(a.family)) {
    check_range(a.family, a.n, a.k);
    auto kind = board_kind(a.family);
    if (dot) {
      out << symplectic::domino_digraph(kind, a.k, a.n).graph.to_dot("D");
    } else {
      std::optional<Coord> p;
      if (!a.state.empty()) {
        p = parse_state(a.family, a.state, a.k);
        if (!symplectic::fits(kind, *p, a.k, a.n)) throw InvalidObject("partition does not fit the board");
      }
      out << symplectic::Board{kind, a.k, a.n}.render(p);
    }
  } else if (a.family == "snakes") {
    check_range(a.family, a.n, a.k);
    if (dot) {
      out << catalan::ming_digraph(a.n).to_dot("M" + std::to_string(a.n));
    } else {
      Coord t = a.state.empty() ? Coord(a.n, 0) : parse_ints(a.state);
      if (!catalan::is_tiling(t, a.n)) throw InvalidObject("not a Ming'antu tiling");
      out << catalan::render_tiling(t, a.n);
    }
  } else {
    throw ParseError("unknown family: " + a.family);
  }
  return 0;
}

struct EnumerateArgs {
  std::string family;
  int n = 0, k = 0;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  std::vector<std::string> items;
  if (a.family == "mixedmiddleswitch" || a.family == "z") {
    check_range("mixedmiddleswitch", a.n, a.k);
    for (const auto& x : minuscule::z_tuples(a.n))
      items.push_back(a.family == "z" ? join_ints(x) : minuscule::bits_to_string(minuscule::b_map(x)));
  } else if (a.family == "king" || a.family == "seminarii") {
    check_range("domino-full", a.n, a.k);
    auto v = a.family == "king" ? symplectic::Variant::king : symplectic::Variant::seminarii;
    for (const auto& t : symplectic::enumerate_tableaux(v, a.k, a.n)) items.push_back(symplectic::tableau_to_string(t));
  } else if (is_domino(a.family)) {
    check_range(a.family, a.n, a.k);
    for (const auto& p : symplectic::enumerate_partitions(board_kind(a.family), a.k, a.n)) items.push_back(join_ints(p));
  } else if (a.family == "catalan") {
    check_range("snakes", a.n, a.k);
    for (const auto& s : catalan::catalan_tuples(a.n)) items.push_back(join_ints(s));
  } else if (a.family == "snakes") {
    check_range(a.family, a.n, a.k);
    for (const auto& t : catalan::enumerate_tilings(a.n)) items.push_back(join_ints(t));
  } else if (a.family == "snakes-iso") {
    check_range("snakes", a.n, a.k);
    out << catalan::isomorphism_table(a.n);
    return 0;
  } else {
    throw ParseError("unknown family: " + a.family);
  }
  for (const auto& s : items) out << s << '\n';
  out << "count " << items.size() << '\n';
  return 0;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diamond-colored distributive lattices: puzzle solver and verifier", "dcl"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve a puzzle instance with a replayable certificate");
  solve->add_option("family", sa.family, "Puzzle family")->required()->check(CLI::IsMember(kFamilies));
  solve->add_option("--n", sa.n, "Rank parameter n")->required();
  solve->add_option("--k", sa.k, "Row count k (domino families)");
  solve->add_option("--from", sa.from, "Start state")->required();
  solve->add_option("--to", sa.to, "Goal state")->required();
  solve->add_flag("--json", sa.json, "JSON output");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run an invariant sweep");
  ver->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--max-n", va.opt.max_n, "Upper bound for the sweep (0 = suite default)");
  ver->add_option("--samples", va.opt.samples, "Random instances for sampled suites")->capture_default_str();
  ver->add_option("--seed", va.opt.seed, "Random seed")->capture_default_str();
  ver->add_option("--inject-fault", va.fault, "Seed a fault (recolor-edge) to exercise failure reporting");
  ver->add_flag("--json", va.json, "JSON summary");

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "Export a diagram or board");
  exp->add_option("--family", ea.family, "mixedmiddleswitch, z, kn, dec, catalan, snakes or a domino board")
      ->required();
  exp->add_option("--n", ea.n, "Rank parameter n")->required();
  exp->add_option("--k", ea.k, "Row count k");
  exp->add_option("--format", ea.format, "dot or text-board")->required();
  exp->add_option("--state", ea.state, "Object to draw on the board");

  EnumerateArgs na;
  auto* en = app.add_subcommand("enumerate", "List objects with a count");
  en->add_option("family", na.family,
                 "mixedmiddleswitch, z, king, seminarii, catalan, snakes, snakes-iso or a domino board")
      ->required();
  en->add_option("--n", na.n, "Rank parameter n")->required();
  en->add_option("--k", na.k, "Row count k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*solve) return cmd_solve(sa, out);
    if (*ver) return cmd_verify(va, out, err);
    if (*exp) return cmd_export(ea, out, err);
    return cmd_enumerate(na, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidObject& e) {
    err << "invalid object: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace dcl::cli
