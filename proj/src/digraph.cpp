#include "dcl/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "dcl/errors.hpp"

namespace dcl {

std::string join_ints(const Coord& c, const std::string& sep) {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << sep;
    os << c[i];
  }
  return os.str();
}

int ColoredDigraph::add_vertex(Coord c) {
  auto [it, fresh] = index_.emplace(c, size());
  if (!fresh) throw InvalidObject("duplicate vertex (" + join_ints(c) + ")");
  coords_.push_back(std::move(c));
  out_.emplace_back();
  in_.emplace_back();
  return it->second;
}

void ColoredDigraph::add_edge(int from, int to, int color) {
  if (from == to) throw InvalidObject("loop at vertex " + std::to_string(from));
  if (color < 1) throw InvalidObject("edge colors are positive");
  if (color_between(from, to)) throw InvalidObject("parallel edge");
  int e = edge_count();
  edges_.push_back({from, to, color});
  out_[from].push_back(e);
  in_[to].push_back(e);
}

std::optional<int> ColoredDigraph::find(const Coord& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ColoredDigraph::at(const Coord& c) const {
  auto v = find(c);
  if (!v) throw InvalidObject("no vertex (" + join_ints(c) + ")");
  return *v;
}

std::optional<int> ColoredDigraph::color_between(int u, int v) const {
  for (int e : out_[u])
    if (edges_[e].to == v) return edges_[e].color;
  return std::nullopt;
}

int ColoredDigraph::max_color() const {
  int m = 0;
  for (const auto& e : edges_) m = std::max(m, e.color);
  return m;
}

std::string ColoredDigraph::to_dot(const std::string& name, const Formatter& fmt) const {
  // index_ is a std::map, so iteration is already lexicographic on coordinates
  std::vector<int> order;
  std::vector<int> pos(size());
  for (const auto& [c, v] : index_) {
    pos[v] = static_cast<int>(order.size());
    order.push_back(v);
  }
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v : order) {
    std::string label = fmt ? fmt(coords_[v]) : join_ints(coords_[v]);
    os << "  n" << pos[v] << " [label=\"" << label << "\"];\n";
  }
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [&](const Edge& a, const Edge& b) {
    return std::pair(pos[a.from], pos[a.to]) < std::pair(pos[b.from], pos[b.to]);
  });
  for (const auto& e : sorted)
    os << "  n" << pos[e.from] << " -> n" << pos[e.to] << " [label=" << e.color << "];\n";
  os << "}\n";
  return os.str();
}

std::vector<int> bfs_all(const ColoredDigraph& g, int s) {
  std::vector<int> d(g.size(), -1);
  std::deque<int> q{s};
  d[s] = 0;
  auto visit = [&](int from, int to) {
    if (d[to] < 0) {
      d[to] = d[from] + 1;
      q.push_back(to);
    }
  };
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int e : g.out_edges(v)) visit(v, g.edge(e).to);
    for (int e : g.in_edges(v)) visit(v, g.edge(e).from);
  }
  return d;
}

int bfs_distance(const ColoredDigraph& g, int s, int t) {
  int d = bfs_all(g, s)[t];
  if (d < 0) throw Unreachable("vertices lie in different components");
  return d;
}

std::vector<int> rank_function(const ColoredDigraph& g) {
  const int n = g.size();
  std::vector<int> r(n, 0);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    r[root] = 0;
    for (size_t h = 0; h < comp.size(); ++h) {
      int v = comp[h];
      for (int e : g.out_edges(v)) {
        int w = g.edge(e).to;
        if (!seen[w]) { seen[w] = 1; r[w] = r[v] + 1; comp.push_back(w); }
      }
      for (int e : g.in_edges(v)) {
        int w = g.edge(e).from;
        if (!seen[w]) { seen[w] = 1; r[w] = r[v] - 1; comp.push_back(w); }
      }
    }
    int lo = r[root];
    for (int v : comp) lo = std::min(lo, r[v]);
    for (int v : comp) r[v] -= lo;
  }
  for (const auto& e : g.edges())
    if (r[e.to] != r[e.from] + 1)
      throw NotRanked("edge " + join_ints(g.coord(e.from)) + " -> " + join_ints(g.coord(e.to)) +
                      " breaks the rank rule");
  return r;
}

bool is_diamond_colored(const ColoredDigraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    const auto& outs = g.out_edges(v);
    for (size_t a = 0; a < outs.size(); ++a)
      for (size_t b = a + 1; b < outs.size(); ++b) {
        const Edge& vs = g.edge(outs[a]);
        const Edge& vt = g.edge(outs[b]);
        for (int e : g.out_edges(vs.to)) {
          const Edge& su = g.edge(e);
          auto tu = g.color_between(vt.to, su.to);
          if (!tu) continue;
          // opposite sides of the diamond carry equal colors
          if (su.color != vt.color || *tu != vs.color) return false;
        }
      }
  }
  return true;
}

namespace {

// number of common out-neighbours (up) or in-neighbours (down) of s and t
int common(const ColoredDigraph& g, int s, int t, bool up) {
  std::vector<int> a, b;
  for (int e : up ? g.out_edges(s) : g.in_edges(s)) a.push_back(up ? g.edge(e).to : g.edge(e).from);
  for (int e : up ? g.out_edges(t) : g.in_edges(t)) b.push_back(up ? g.edge(e).to : g.edge(e).from);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return static_cast<int>(c.size());
}

}  // namespace

bool is_topographically_balanced(const ColoredDigraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    for (bool up : {true, false}) {
      const auto& es = up ? g.out_edges(v) : g.in_edges(v);
      for (size_t a = 0; a < es.size(); ++a)
        for (size_t b = a + 1; b < es.size(); ++b) {
          int s = up ? g.edge(es[a]).to : g.edge(es[a]).from;
          int t = up ? g.edge(es[b]).to : g.edge(es[b]).from;
          if (common(g, s, t, up) != 1) return false;
        }
    }
  }
  return true;
}

}  // namespace dcl
