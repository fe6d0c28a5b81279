#include "dcl/catalan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "dcl/errors.hpp"

namespace dcl::catalan {

bool is_catalan_tuple(const Coord& s, int n) {
  if (static_cast<int>(s.size()) != n) return false;
  for (int i = 1; i <= n; ++i) {
    if (s[i - 1] < 0 || s[i - 1] > n + 1 - i) return false;
    if (i > 1 && s[i - 1] > s[i - 2]) return false;
  }
  return true;
}

namespace {

std::vector<Coord> box_partitions(int rows, int cap) {
  std::vector<Coord> out;
  Coord p(rows);
  std::function<void(int, int)> rec = [&](int i, int hi) {
    if (i == rows) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v <= hi; ++v) {
      p[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, cap);
  return out;
}

}  // namespace

std::vector<Coord> catalan_tuples(int n) {
  std::vector<Coord> out;
  for (auto& p : box_partitions(n, n))
    if (is_catalan_tuple(p, n)) out.push_back(p);
  return out;
}

DiamondLattice c_lattice(int n) {
  if (n < 1) throw InvalidObject("c_lattice needs n >= 1");
  ColoredDigraph g;
  for (auto& s : catalan_tuples(n)) g.add_vertex(s);
  for (int v = 0; v < g.size(); ++v) {
    Coord t = g.coord(v);
    for (int q = 1; q <= n; ++q) {
      ++t[q - 1];
      if (is_catalan_tuple(t, n)) g.add_edge(v, g.at(t), n + q - t[q - 1]);
      --t[q - 1];
    }
  }
  return DiamondLattice::from_diagram(std::move(g));
}

bool is_tiling(const Tiling& t, int n) {
  if (static_cast<int>(t.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (t[i] < 0 || t[i] > n) return false;
    if (i && t[i] > t[i - 1]) return false;
  }
  // a tiled diagonal square (i,i): tiles below it in column i <= tiles right of it in row i
  for (int i = 1; i <= n; ++i) {
    if (t[i - 1] < i) break;
    int col = 0;
    for (int r = 0; r < n; ++r) col += t[r] >= i;
    if (col - i > t[i - 1] - i) return false;
  }
  return true;
}

std::vector<Tiling> enumerate_tilings(int n) {
  std::vector<Tiling> out;
  for (auto& p : box_partitions(n, n))
    if (is_tiling(p, n)) out.push_back(p);
  return out;
}

bool is_snake(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  for (size_t i = 1; i < cells.size(); ++i) {
    auto [r0, c0] = cells[i - 1];
    auto [r1, c1] = cells[i];
    bool south = r1 == r0 + 1 && c1 == c0;
    bool west = r1 == r0 && c1 == c0 - 1;
    if (!south && !west) return false;
  }
  const auto& mid = cells[(cells.size() + 1) / 2 - 1];
  return mid.first == mid.second;
}

namespace {

// cells of the larger tiling that are not in the smaller one, in path order
std::vector<Cell> difference(const Tiling& big, const Tiling& small) {
  std::vector<Cell> d;
  for (size_t r = 0; r < big.size(); ++r)
    for (int c = big[r]; c > small[r]; --c) d.emplace_back(static_cast<int>(r) + 1, c);
  return d;
}

bool contains(const Tiling& big, const Tiling& small) {
  for (size_t r = 0; r < big.size(); ++r)
    if (small[r] > big[r]) return false;
  return true;
}

const std::vector<Tiling>& tilings_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Tiling>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_tilings(n)).first;
  return it->second;
}

}  // namespace

std::vector<SnakeMove> legal_snake_moves(int n, const Tiling& t) {
  if (!is_tiling(t, n)) throw InvalidObject("not a Ming'antu tiling");
  std::vector<SnakeMove> out;
  for (const auto& u : tilings_cached(n)) {
    if (u == t) continue;
    if (contains(u, t)) {
      auto d = difference(u, t);
      if (is_snake(d)) out.push_back({d, true, u});
    } else if (contains(t, u)) {
      auto d = difference(t, u);
      if (is_snake(d)) out.push_back({d, false, u});
    }
  }
  return out;
}

std::optional<int> snake_edge_color(const Tiling& s, const Tiling& t) {
  if (s.size() != t.size() || s == t) return std::nullopt;
  bool add = contains(t, s);
  if (!add && !contains(s, t)) return std::nullopt;
  auto d = add ? difference(t, s) : difference(s, t);
  if (!is_snake(d)) return std::nullopt;
  int m = static_cast<int>(d.size());
  if (add != (m % 2 == 0)) return std::nullopt;
  return m;
}

ColoredDigraph ming_digraph(int n) {
  if (n < 1) throw InvalidObject("ming_digraph needs n >= 1");
  ColoredDigraph g;
  for (const auto& t : tilings_cached(n)) g.add_vertex(t);
  for (int v = 0; v < g.size(); ++v)
    for (const auto& m : legal_snake_moves(n, g.coord(v))) {
      int len = static_cast<int>(m.snake.size());
      // even snakes are added, odd snakes removed, along the edge direction
      if (m.add == (len % 2 == 0)) g.add_edge(v, g.at(m.result), len);
    }
  return g;
}

namespace {

using Signature = std::vector<std::pair<int, int>>;  // sorted (color, +1 out / -1 in)

Signature signature(const ColoredDigraph& g, int v) {
  Signature s;
  for (int e : g.out_edges(v)) s.emplace_back(g.edge(e).color, 1);
  for (int e : g.in_edges(v)) s.emplace_back(g.edge(e).color, -1);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b, int cap) {
  const int n = a.size();
  if (n > cap || b.size() > cap) throw SizeCap("graph too large for isomorphism search");
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<Signature> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }

  // visiting order: undirected BFS, sources first so the minimum anchors the search
  std::vector<int> order, parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (a.in_edges(v).empty()) roots.push_back(v);
  for (int v = 0; v < n; ++v) roots.push_back(v);
  for (int r : roots) {
    if (seen[r]) continue;
    seen[r] = 1;
    size_t h = order.size();
    order.push_back(r);
    for (; h < order.size(); ++h) {
      int v = order[h];
      auto visit = [&](int w) {
        if (!seen[w]) { seen[w] = 1; parent[w] = v; order.push_back(w); }
      };
      for (int e : a.out_edges(v)) visit(a.edge(e).to);
      for (int e : a.in_edges(v)) visit(a.edge(e).from);
    }
  }

  std::vector<int> map(n, -1), pos(n);
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  auto consistent = [&](int v, int w) {
    int mapped_a = 0, mapped_b = 0;
    for (int e : a.out_edges(v)) {
      int x = a.edge(e).to;
      if (map[x] < 0) continue;
      ++mapped_a;
      auto c = b.color_between(w, map[x]);
      if (!c || *c != a.edge(e).color) return false;
    }
    for (int e : a.in_edges(v)) {
      int x = a.edge(e).from;
      if (map[x] < 0) continue;
      ++mapped_a;
      auto c = b.color_between(map[x], w);
      if (!c || *c != a.edge(e).color) return false;
    }
    for (int e : b.out_edges(w)) mapped_b += used[b.edge(e).to];
    for (int e : b.in_edges(w)) mapped_b += used[b.edge(e).from];
    return mapped_a == mapped_b;
  };

  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    int v = order[i];
    std::vector<int> cand;
    if (parent[v] < 0) {
      for (int w = 0; w < n; ++w) cand.push_back(w);
    } else {
      int pw = map[parent[v]];
      for (int e : b.out_edges(pw)) cand.push_back(b.edge(e).to);
      for (int e : b.in_edges(pw)) cand.push_back(b.edge(e).from);
    }
    for (int w : cand) {
      if (used[w] || sa[v] != sb[w] || !consistent(v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(i + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

const std::vector<int>& ming_isomorphism(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<int>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto iso = find_isomorphism(c_lattice(n).diagram(), ming_digraph(n));
    if (!iso) throw InconsistentLattice("no isomorphism between C(n) and the snake digraph");
    slot = std::make_unique<std::vector<int>>(std::move(*iso));
  }
  return *slot;
}

namespace {

struct Instance {
  DiamondLattice lattice;
  ColoredDigraph digraph;
};

const Instance& instance(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Instance>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Instance>(Instance{c_lattice(n), ming_digraph(n)});
  return *slot;
}

}  // namespace

Solution solve_snakes(int n, const Tiling& s, const Tiling& t) {
  if (!is_tiling(s, n) || !is_tiling(t, n)) throw InvalidObject("not a Ming'antu tiling for this n");
  const DiamondLattice& C = instance(n).lattice;
  const ColoredDigraph& M = instance(n).digraph;
  const auto& iso = ming_isomorphism(n);
  std::vector<int> inv(iso.size());
  for (size_t v = 0; v < iso.size(); ++v) inv[iso[v]] = static_cast<int>(v);
  int a = inv[M.at(s)], b = inv[M.at(t)];
  const Coord& x = C.diagram().coord(a);
  const Coord& y = C.diagram().coord(b);
  int sx = 0, sy = 0, smax = 0, smin = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    smax += std::max(x[i], y[i]);
    smin += std::min(x[i], y[i]);
  }
  Solution sol;
  sol.distance = 2 * smax - sx - sy;
  if (sol.distance != sx + sy - 2 * smin || sol.distance != lattice_distance(C, a, b))
    throw InconsistentLattice("distance formulas disagree");
  sol.color_counts = color_counts(C, a, b);
  auto path = shortest_path(C, a, b, Via::join);
  for (int v : path.sequence) sol.states.push_back(M.coord(iso[v]));
  sol.steps = path.color_trace;
  return sol;
}

bool replay(const Solution& sol) {
  if (sol.states.size() != sol.steps.size() + 1) return false;
  const int n = sol.states.empty() ? 0 : static_cast<int>(sol.states[0].size());
  for (size_t i = 0; i < sol.steps.size(); ++i) {
    const auto& a = sol.steps[i].up ? sol.states[i] : sol.states[i + 1];
    const auto& b = sol.steps[i].up ? sol.states[i + 1] : sol.states[i];
    if (!is_tiling(a, n) || !is_tiling(b, n)) return false;
    auto c = snake_edge_color(a, b);
    if (!c || *c != sol.steps[i].color) return false;
  }
  return static_cast<int>(sol.steps.size()) == sol.distance;
}

std::string render_tiling(const Tiling& t, int n) {
  std::ostringstream os;
  for (int r = 0; r < n; ++r) {
    for (int c = 1; c <= n; ++c) os << (c <= t[r] ? '#' : '.');
    os << '\n';
  }
  return os.str();
}

std::string isomorphism_table(int n) {
  const DiamondLattice C = c_lattice(n);
  const ColoredDigraph M = ming_digraph(n);
  const auto& iso = ming_isomorphism(n);
  std::ostringstream os;
  for (int v = 0; v < C.size(); ++v)
    os << join_ints(C.diagram().coord(v)) << ' ' << join_ints(M.coord(iso[v])) << '\n';
  return os.str();
}

bool check_isomorphism_table(int n, const std::string& text) {
  const DiamondLattice C = c_lattice(n);
  const ColoredDigraph M = ming_digraph(n);
  std::vector<int> map(C.size(), -1), hit(M.size(), 0);
  std::istringstream in(text);
  std::string lhs, rhs;
  auto parse = [](const std::string& s) {
    Coord c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
    return c;
  };
  while (in >> lhs >> rhs) {
    auto a = C.diagram().find(parse(lhs));
    auto b = M.find(parse(rhs));
    if (!a || !b || map[*a] >= 0 || hit[*b]) return false;
    map[*a] = *b;
    hit[*b] = 1;
  }
  if (std::count(map.begin(), map.end(), -1)) return false;
  if (C.diagram().edge_count() != M.edge_count()) return false;
  for (const auto& e : C.diagram().edges()) {
    auto c = M.color_between(map[e.from], map[e.to]);
    if (!c || *c != e.color) return false;
  }
  return true;
}

}  // namespace dcl::catalan
