#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dcl {

using Coord = std::vector<int>;

struct Edge {
  int from;
  int to;
  int color;
};

std::string join_ints(const Coord& c, const std::string& sep = ",");

// Simple edge-colored digraph. Every vertex carries a coordinate tuple, which
// doubles as its identity for lookups and for deterministic output.
class ColoredDigraph {
 public:
  int add_vertex(Coord c);
  void add_edge(int from, int to, int color);

  int size() const { return static_cast<int>(coords_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const Coord& coord(int v) const { return coords_[v]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  std::optional<int> find(const Coord& c) const;
  int at(const Coord& c) const;
  // color of the edge u -> v, if any
  std::optional<int> color_between(int u, int v) const;
  int max_color() const;

  using Formatter = std::function<std::string(const Coord&)>;
  std::string to_dot(const std::string& name, const Formatter& fmt = {}) const;

 private:
  std::vector<Coord> coords_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_, in_;
  std::map<Coord, int> index_;
};

// Undirected BFS distances from s; -1 where unreachable.
std::vector<int> bfs_all(const ColoredDigraph& g, int s);
int bfs_distance(const ColoredDigraph& g, int s, int t);

// Ranks by propagation along edges in both directions, shifted so that the
// minimum is 0. Throws NotRanked on any edge that does not raise rank by 1.
std::vector<int> rank_function(const ColoredDigraph& g);

bool is_diamond_colored(const ColoredDigraph& g);
bool is_topographically_balanced(const ColoredDigraph& g);

}  // namespace dcl
