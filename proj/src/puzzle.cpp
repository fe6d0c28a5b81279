#include "dcl/puzzle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dcl/errors.hpp"

namespace dcl {

DistancePair distance_formulas(const DiamondLattice& L, int s, int t) {
  int j = L.join(s, t), m = L.meet(s, t);
  return {2 * L.rank(j) - L.rank(s) - L.rank(t), L.rank(s) + L.rank(t) - 2 * L.rank(m)};
}

int lattice_distance(const DiamondLattice& L, int s, int t) {
  auto d = distance_formulas(L, s, t);
  if (d.via_join != d.via_meet) throw InconsistentLattice("join and meet distance formulas disagree");
  return d.via_join;
}

std::vector<int> color_counts(const DiamondLattice& L, int s, int t) {
  const auto& P = L.irreducibles();
  const Bits& a = L.ideal(s);
  const Bits& b = L.ideal(t);
  Bits u = a | b, m = a & b;
  int top = 0;
  for (int c : P.color) top = std::max(top, c);
  std::vector<int> by_join(top + 1, 0), by_meet(top + 1, 0);
  for (int v = 0; v < P.size(); ++v) {
    int c = P.color[v];
    by_join[c] += (u.test(v) && !a.test(v)) + (u.test(v) && !b.test(v));
    by_meet[c] += (a.test(v) && !m.test(v)) + (b.test(v) && !m.test(v));
  }
  if (by_join != by_meet) throw InconsistentLattice("color count formulas disagree");
  return by_join;
}

int color_count_min(const DiamondLattice& L, int s, int t, int color) {
  auto c = color_counts(L, s, t);
  return color >= 0 && color < static_cast<int>(c.size()) ? c[color] : 0;
}

namespace {

// Monotone chain from x up to y (x <= y), adding the smallest minimal element
// of the difference at each step.
std::vector<int> chain_up(const DiamondLattice& L, int x, int y) {
  const auto& P = L.irreducibles();
  std::vector<std::vector<int>> lower(P.size());
  for (auto [a, b] : P.covers) lower[b].push_back(a);
  std::vector<int> out{x};
  Bits cur = L.ideal(x);
  const Bits& goal = L.ideal(y);
  while (cur != goal) {
    Bits diff = goal - cur;
    for (auto v = diff.find_first(); v != Bits::npos; v = diff.find_next(v)) {
      bool minimal = true;
      for (int u : lower[v]) minimal = minimal && cur.test(u);
      if (minimal) {
        cur.set(v);
        break;
      }
    }
    out.push_back(L.vertex_of_ideal(cur));
  }
  return out;
}

// Monotone chain from x down to y (y <= x), removing the smallest maximal element.
std::vector<int> chain_down(const DiamondLattice& L, int x, int y) {
  const auto& P = L.irreducibles();
  std::vector<std::vector<int>> upper(P.size());
  for (auto [a, b] : P.covers) upper[a].push_back(b);
  std::vector<int> out{x};
  Bits cur = L.ideal(x);
  const Bits& goal = L.ideal(y);
  while (cur != goal) {
    Bits diff = cur - goal;
    for (auto v = diff.find_first(); v != Bits::npos; v = diff.find_next(v)) {
      bool maximal = true;
      for (int w : upper[v]) maximal = maximal && !cur.test(w);
      if (maximal) {
        cur.reset(v);
        break;
      }
    }
    out.push_back(L.vertex_of_ideal(cur));
  }
  return out;
}

void fill_trace(const ColoredDigraph& g, PathCertificate& p) {
  p.color_trace.clear();
  for (size_t i = 1; i < p.sequence.size(); ++i) {
    int a = p.sequence[i - 1], b = p.sequence[i];
    if (auto c = g.color_between(a, b)) p.color_trace.push_back({*c, true});
    else if (auto c2 = g.color_between(b, a)) p.color_trace.push_back({*c2, false});
    else throw InconsistentLattice("path step is not an edge");
  }
}

}  // namespace

PathCertificate shortest_path(const DiamondLattice& L, int s, int t, Via via) {
  L.irreducibles();  // distributive only
  PathCertificate p;
  if (via == Via::join) {
    p.pivot = L.join(s, t);
    p.orientation = Orientation::mountain;
    p.sequence = chain_up(L, s, p.pivot);
    auto back = chain_up(L, t, p.pivot);
    p.sequence.insert(p.sequence.end(), back.rbegin() + 1, back.rend());
  } else {
    p.pivot = L.meet(s, t);
    p.orientation = Orientation::valley;
    p.sequence = chain_down(L, s, p.pivot);
    auto back = chain_down(L, t, p.pivot);
    p.sequence.insert(p.sequence.end(), back.rbegin() + 1, back.rend());
  }
  fill_trace(L.diagram(), p);
  if (p.length() != lattice_distance(L, s, t)) throw InconsistentLattice("path length differs from distance");
  return p;
}

int gods_number(const DiamondLattice& L, int check_limit) {
  if (L.size() <= check_limit) {
    int best = 0;
    for (int s = 0; s < L.size(); ++s)
      for (int t = s + 1; t < L.size(); ++t) best = std::max(best, lattice_distance(L, s, t));
    if (best != L.length()) throw InconsistentLattice("maximum distance differs from length");
  }
  return L.length();
}

std::vector<PathCertificate> all_shortest_paths(const DiamondLattice& L, int s, int t, int cap,
                                                std::size_t max_paths) {
  const auto& g = L.diagram();
  int d = lattice_distance(L, s, t);
  if (d > cap) throw CapExceeded("distance " + std::to_string(d) + " exceeds geodesic cap");
  auto to_t = bfs_all(g, t);
  std::vector<PathCertificate> out;
  std::vector<int> seq{s};
  std::function<void(int)> rec = [&](int v) {
    if (v == t) {
      if (out.size() >= max_paths) throw CapExceeded("too many geodesics");
      PathCertificate p;
      p.sequence = seq;
      fill_trace(g, p);
      out.push_back(std::move(p));
      return;
    }
    auto go = [&](int w) {
      if (to_t[w] != to_t[v] - 1) return;
      seq.push_back(w);
      rec(w);
      seq.pop_back();
    };
    for (int e : g.out_edges(v)) go(g.edge(e).to);
    for (int e : g.in_edges(v)) go(g.edge(e).from);
  };
  rec(s);
  return out;
}

bool validate_certificate(const ColoredDigraph& g, const PathCertificate& p, int s, int t) {
  if (p.sequence.empty() || p.sequence.front() != s || p.sequence.back() != t) return false;
  if (p.color_trace.size() + 1 != p.sequence.size()) return false;
  for (size_t i = 0; i < p.color_trace.size(); ++i) {
    int a = p.sequence[i], b = p.sequence[i + 1];
    auto c = p.color_trace[i].up ? g.color_between(a, b) : g.color_between(b, a);
    if (!c || *c != p.color_trace[i].color) return false;
  }
  return true;
}

std::string format_certificate(const ColoredDigraph& g, const PathCertificate& p,
                               const ColoredDigraph::Formatter& fmt) {
  auto show = [&](int v) { return fmt ? fmt(g.coord(v)) : join_ints(g.coord(v)); };
  std::ostringstream os;
  os << "distance " << p.length() << "\n";
  if (p.orientation == Orientation::mountain) os << "apex " << show(p.pivot) << "\n";
  if (p.orientation == Orientation::valley) os << "nadir " << show(p.pivot) << "\n";
  for (size_t i = 0; i < p.color_trace.size(); ++i) {
    const auto& st = p.color_trace[i];
    os << show(p.sequence[i]) << (st.up ? " --" : " <--") << st.color << (st.up ? "--> " : "-- ")
       << show(p.sequence[i + 1]) << "\n";
  }
  return os.str();
}

}  // namespace dcl
