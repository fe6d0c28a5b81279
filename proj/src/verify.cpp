#include "dcl/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dcl/catalan.hpp"
#include "dcl/errors.hpp"
#include "dcl/lattice.hpp"
#include "dcl/minuscule_b.hpp"
#include "dcl/puzzle.hpp"
#include "dcl/symplectic.hpp"
#include "dcl/weyl.hpp"

namespace dcl::verify {

void Report::check(bool cond, const std::string& what) {
  ++checks;
  if (!cond) failures.push_back(suite + ": " + what);
}

void Report::merge(const Report& o) {
  checks += o.checks;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"birkhoff", "theorem2", "minuscule", "symplectic",
                                                 "weyl",     "catalan",  "all"};
  return names;
}

int default_max_n(const std::string& suite) {
  if (suite == "birkhoff" || suite == "theorem2") return 8;
  if (suite == "minuscule") return 6;
  if (suite == "symplectic") return 4;
  if (suite == "weyl") return 3;
  if (suite == "catalan") return 5;
  return 0;
}

VertexColoredPoset random_poset(int size, int colors, double p, std::mt19937& rng) {
  std::bernoulli_distribution rel(p);
  std::uniform_int_distribution<int> col(1, colors);
  std::vector<std::vector<char>> less(size, std::vector<char>(size, 0));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) less[i][j] = rel(rng);
  // transitive closure
  for (int m = 0; m < size; ++m)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (less[i][m] && less[m][j]) less[i][j] = 1;
  VertexColoredPoset P;
  for (int i = 0; i < size; ++i) P.color.push_back(col(rng));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      if (!less[i][j]) continue;
      bool cover = true;
      for (int m = i + 1; m < j && cover; ++m) cover = !(less[i][m] && less[m][j]);
      if (cover) P.covers.emplace_back(i, j);
    }
  return P;
}

ColoredDigraph recolor_edge(const ColoredDigraph& g, int e) {
  ColoredDigraph h;
  for (int v = 0; v < g.size(); ++v) h.add_vertex(g.coord(v));
  const int top = std::max(2, g.max_color());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& x = g.edge(i);
    h.add_edge(x.from, x.to, i == e ? x.color % top + 1 : x.color);
  }
  return h;
}

namespace {

std::string where(const Coord& c) { return "(" + join_ints(c) + ")"; }

ColoredDigraph maybe_fault(const ColoredDigraph& g, const Options& opt) {
  return opt.inject_fault && g.edge_count() ? recolor_edge(g, 0) : g;
}

// first edge pair breaking the diamond coloring, or empty
std::string diamond_witness(const ColoredDigraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    const auto& out = g.out_edges(v);
    for (size_t a = 0; a < out.size(); ++a)
      for (size_t b = a + 1; b < out.size(); ++b) {
        const Edge& x = g.edge(out[a]);
        const Edge& y = g.edge(out[b]);
        for (int e : g.out_edges(x.to)) {
          int top = g.edge(e).to;
          auto c = g.color_between(y.to, top);
          if (!c) continue;
          if (g.edge(e).color != y.color || *c != x.color)
            return "diamond at " + where(g.coord(v)) + " -> " + where(g.coord(top));
        }
      }
  }
  return {};
}

void check_diamond(Report& r, const ColoredDigraph& g, const std::string& label) {
  bool ok = is_diamond_colored(g);
  std::string w = ok ? "" : " [" + diamond_witness(g) + "]";
  r.check(ok, label + " diamond-colored" + w);
}

void all_pairs_distance(Report& r, const DiamondLattice& L, const std::string& label) {
  const auto& g = L.diagram();
  for (int s = 0; s < L.size(); ++s) {
    auto d = bfs_all(g, s);
    for (int t = s + 1; t < L.size(); ++t) {
      int f = lattice_distance(L, s, t);
      if (f != d[t]) {
        r.check(false, label + " distance " + where(g.coord(s)) + " " + where(g.coord(t)) + " formula " +
                           std::to_string(f) + " bfs " + std::to_string(d[t]));
        return;
      }
    }
  }
  r.check(true, label + " all-pairs distance");
}

Report birkhoff(const Options& opt) {
  Report r{"birkhoff"};
  std::mt19937 rng(opt.seed);
  const int max_size = opt.max_n ? opt.max_n : default_max_n("birkhoff");
  for (int i = 0; i < opt.samples; ++i) {
    int size = 1 + static_cast<int>(rng() % max_size);
    auto P = random_poset(size, 3, 0.3, rng);
    DiamondLattice L = ideals_lattice(P);
    std::string tag = "sample " + std::to_string(i);
    check_diamond(r, maybe_fault(L.diagram(), opt), tag);
    r.check(L.distributive(), tag + " distributive");
    r.check(isomorphic(join_irreducibles(L), P), tag + " irreducibles recover the poset");
    r.check(L.length() == size, tag + " length equals poset size");
    r.check(is_topographically_balanced(L.diagram()), tag + " topographically balanced");
  }
  return r;
}

std::vector<int> trace_counts(const PathCertificate& p, int colors) {
  std::vector<int> c(colors + 1, 0);
  for (const auto& s : p.color_trace) ++c[s.color];
  return c;
}

Report theorem2(const Options& opt) {
  Report r{"theorem2"};
  std::mt19937 rng(opt.seed + 1);
  const int size = opt.max_n ? opt.max_n : default_max_n("theorem2");
  for (int i = 0; i < opt.samples; ++i) {
    auto P = random_poset(size, 3, 0.25, rng);
    DiamondLattice L = ideals_lattice(P);
    std::string tag = "lattice " + std::to_string(i);
    check_diamond(r, maybe_fault(L.diagram(), opt), tag);
    all_pairs_distance(r, L, tag);
    const int colors = L.diagram().max_color();
    for (int k = 0; k < 3; ++k) {
      int s = static_cast<int>(rng() % L.size()), t = static_cast<int>(rng() % L.size());
      auto want = color_counts(L, s, t);
      want.resize(colors + 1, 0);
      int dist = lattice_distance(L, s, t);
      for (Via via : {Via::join, Via::meet}) {
        auto p = shortest_path(L, s, t, via);
        r.check(validate_certificate(L.diagram(), p, s, t) && p.length() == dist,
                tag + " certificate " + where(L.diagram().coord(s)) + " " + where(L.diagram().coord(t)));
      }
      bool same = true;
      for (const auto& p : all_shortest_paths(L, s, t)) same = same && trace_counts(p, colors) == want;
      r.check(same, tag + " geodesic color multisets " + where(L.diagram().coord(s)) + " " +
                        where(L.diagram().coord(t)));
    }
  }
  return r;
}

Report minuscule_suite(const Options& opt) {
  using namespace dcl::minuscule;
  Report r{"minuscule"};
  const int top = opt.max_n ? opt.max_n : default_max_n("minuscule");
  for (int n = 2; n <= top; ++n) {
    std::string tag = "n=" + std::to_string(n);
    DiamondLattice Z = z_lattice(n);
    ColoredDigraph zg = maybe_fault(Z.diagram(), opt);
    ColoredDigraph B = mixedmiddleswitch_digraph(n);
    r.check(Z.size() == (1 << n), tag + " |Z(n)| = 2^n");
    r.check(Z.length() == n * (n + 1) / 2, tag + " length n(n+1)/2");
    check_diamond(r, zg, tag + " Z(n)");
    r.check(is_topographically_balanced(B), tag + " B(n) topographically balanced");
    std::set<Coord> image;
    for (int v = 0; v < Z.size(); ++v) {
      Coord y = b_map(Z.diagram().coord(v));
      image.insert(y);
      if (b_inv(y) != Z.diagram().coord(v)) r.check(false, tag + " b_inv(b_map" + where(Z.diagram().coord(v)) + ")");
    }
    r.check(static_cast<int>(image.size()) == B.size(), tag + " b_map bijective");
    bool edges_ok = zg.edge_count() == B.edge_count();
    std::string bad;
    for (const auto& e : zg.edges()) {
      auto c = B.color_between(B.at(b_map(zg.coord(e.from))), B.at(b_map(zg.coord(e.to))));
      if (!c || *c != e.color) {
        edges_ok = false;
        bad = " at " + where(zg.coord(e.from)) + " -> " + where(zg.coord(e.to));
        break;
      }
    }
    r.check(edges_ok, tag + " b_map preserves colored edges" + bad);
    all_pairs_distance(r, Z, tag);
    if (n == 5) {
      auto sol = solve_mixedmiddleswitch(5, {0, 0, 0, 0, 0}, {0, 1, 0, 1, 0});
      r.check(sol.distance == 10 && replay(sol), "00000 -> 01010 takes 10 moves");
    }
  }
  return r;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Report symplectic_suite(const Options& opt) {
  using namespace dcl::symplectic;
  Report r{"symplectic"};
  const int top = opt.max_n ? opt.max_n : default_max_n("symplectic");
  r.check(l_map({4, 3}, 2, 3) == Partition{1, 1}, "l_map(4,3) = (1,1)");
  for (int n = 1; n <= top; ++n)
    for (int k = 1; k <= n; ++k) {
      std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      auto card = weyl::closed_card_c(n, k);
      auto king = enumerate_tableaux(Variant::king, k, n);
      auto sem = enumerate_tableaux(Variant::seminarii, k, n);
      r.check(BigInt(king.size()) == card && BigInt(sem.size()) == card, tag + " tableau counts");
      DiamondLattice KN = kn_lattice(k, n), DeC = dec_lattice(k, n);
      r.check(BigInt(KN.size()) == card && BigInt(DeC.size()) == card, tag + " lattice sizes");
      r.check(KN.length() == k * (2 * n - k) && DeC.length() == k * (2 * n - k), tag + " length k(2n-k)");
      auto closed = weyl::closed_rgf_c(n, k);
      r.check(weyl::rgf(KN) == closed && weyl::rgf(DeC) == closed, tag + " rank generating function");
      check_diamond(r, maybe_fault(KN.diagram(), opt), tag + " KN");
      check_diamond(r, maybe_fault(DeC.diagram(), opt), tag + " DeC");

      for (const auto& p : enumerate_partitions(BoardKind::full, k, n)) {
        if (kn_admissible(p, k, n) != kn_admissible_tally(p, k, n) ||
            dec_admissible(p, k, n) != dec_admissible_tally(p, k, n))
          r.check(false, tag + " admissibility forms disagree at " + where(p));
      }

      // l_map carries each domino digraph onto its lattice, colors included
      for (auto [kind, L, name] : {std::tuple{BoardKind::staircase, &KN, "staircase->KN"},
                                   std::tuple{BoardKind::ballot, &DeC, "ballot->DeC"}}) {
        auto D = domino_digraph(kind, k, n);
        ColoredDigraph lg = maybe_fault(L->diagram(), opt);
        bool ok = D.graph.size() == lg.size() && D.graph.edge_count() == lg.edge_count();
        std::string bad;
        for (const auto& e : D.graph.edges()) {
          if (!ok) break;
          auto a = lg.find(l_map(D.graph.coord(e.from), k, n));
          auto b = lg.find(l_map(D.graph.coord(e.to), k, n));
          auto c = a && b ? lg.color_between(*a, *b) : std::nullopt;
          if (!c || *c != e.color) {
            ok = false;
            bad = " at " + where(D.graph.coord(e.from)) + " -> " + where(D.graph.coord(e.to));
          }
        }
        r.check(ok, tag + " " + name + " isomorphism" + bad);
      }

      std::vector<Weight> wk, ws;
      for (const auto& t : king) wk.push_back(wt_c(t, n));
      for (const auto& t : sem) ws.push_back(wt_c(t, n));
      auto a = sorted(wk), b = sorted(ws);
      auto c = sorted(weyl::poset_weights(KN.diagram(), n));
      auto d = sorted(weyl::poset_weights(DeC.diagram(), n));
      r.check(a == b && b == c && c == d, tag + " weight multisets agree");
    }
  return r;
}

Report weyl_suite(const Options& opt) {
  using namespace dcl::weyl;
  Report r{"weyl"};
  const int top = opt.max_n ? opt.max_n : default_max_n("weyl");
  for (int n = 1; n <= top; ++n) {
    auto C = root_data(Family::C, n);
    for (int k = 1; k <= n; ++k) {
      std::string tag = "C" + std::to_string(n) + " k=" + std::to_string(k);
      DiamondLattice KN = symplectic::kn_lattice(k, n);
      ColoredDigraph g = maybe_fault(KN.diagram(), opt);
      bool structured = is_structured(g, C);
      r.check(structured, tag + " KN structured");
      if (!structured) continue;
      auto w = wgf(g, n);
      r.check(w_invariant(C, w), tag + " WGF W-invariant");
      r.check(bialternant_check(C, omega(n, k), w), tag + " bialternant identity");
      r.check(product_rgf(C, omega(n, k)) == closed_rgf_c(n, k), tag + " product formula");
      r.check(product_length(C, omega(n, k)) == KN.length(), tag + " product length");
    }
  }
  for (int n = 2; n <= top + 1; ++n) {
    auto B = root_data(Family::B, n);
    std::string tag = "B" + std::to_string(n);
    DiamondLattice Z = minuscule::z_lattice(n);
    ColoredDigraph g = maybe_fault(Z.diagram(), opt);
    bool structured = is_structured(g, B);
    r.check(structured, tag + " Z(n) structured");
    if (!structured) continue;
    auto w = wgf(g, n);
    auto orb = orbit(B, omega(n, n));
    bool free_orbit = w.size() == orb.size();
    for (const auto& [wt, c] : w.terms()) free_orbit = free_orbit && c == 1 && orb.count(wt);
    r.check(free_orbit, tag + " WGF is the orbit sum of omega_n");
    r.check(bialternant_check(B, omega(n, n), w), tag + " bialternant identity");
    r.check(rgf(Z) == closed_rgf_b(n) && product_rgf(B, omega(n, n)) == closed_rgf_b(n),
            tag + " rank generating function");
    r.check(is_symmetric_unimodal(rgf(Z)), tag + " symmetric unimodal");
  }
  return r;
}

BigInt catalan_number(int m) {
  BigInt c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Report catalan_suite(const Options& opt) {
  using namespace dcl::catalan;
  Report r{"catalan"};
  const int top = opt.max_n ? opt.max_n : default_max_n("catalan");
  for (int n = 1; n <= top; ++n) {
    std::string tag = "n=" + std::to_string(n);
    DiamondLattice C = c_lattice(n);
    ColoredDigraph M = ming_digraph(n);
    auto cat = catalan_number(n + 1);
    r.check(BigInt(C.size()) == cat && BigInt(enumerate_tilings(n).size()) == cat, tag + " Catalan counts");
    r.check(C.length() == n * (n + 1) / 2, tag + " length");
    check_diamond(r, maybe_fault(C.diagram(), opt), tag + " C(n)");
    std::set<int> colors;
    for (const auto& e : M.edges()) colors.insert(e.color);
    r.check(static_cast<int>(colors.size()) == 2 * n - 1 && *colors.begin() == 1 &&
                *colors.rbegin() == 2 * n - 1,
            tag + " snake colors 1..2n-1");
    auto iso = find_isomorphism(maybe_fault(C.diagram(), opt), M);
    r.check(iso.has_value(), tag + " C(n) isomorphic to the snake digraph");
    r.check(is_diamond_colored(M) && is_topographically_balanced(M), tag + " snake digraph balanced");
    const auto& m = ming_isomorphism(n);
    auto sol = solve_snakes(n, M.coord(m[C.min()]), M.coord(m[C.max()]));
    r.check(sol.distance == n * (n + 1) / 2 && replay(sol), tag + " min to max");
  }
  if (top >= 4) {
    ColoredDigraph M = ming_digraph(4);
    auto sol = solve_snakes(4, {4, 4, 1, 0}, {1, 0, 0, 0});
    int bfs = bfs_distance(M, M.at({4, 4, 1, 0}), M.at({1, 0, 0, 0}));
    r.check(sol.distance == bfs && replay(sol), "(4,4,1,0) -> (1,0,0,0) formula matches BFS");
  }
  return r;
}

}  // namespace

Report run_suite(const std::string& suite, const Options& opt) {
  if (suite == "birkhoff") return birkhoff(opt);
  if (suite == "theorem2") return theorem2(opt);
  if (suite == "minuscule") return minuscule_suite(opt);
  if (suite == "symplectic") return symplectic_suite(opt);
  if (suite == "weyl") return weyl_suite(opt);
  if (suite == "catalan") return catalan_suite(opt);
  if (suite == "all") {
    Report all{"all"};
    for (const auto& s : suite_names())
      if (s != "all") all.merge(run_suite(s, opt));
    return all;
  }
  throw InvalidObject("unknown suite: " + suite);
}

}  // namespace dcl::verify
