#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcl/lattice.hpp"
#include "dcl/puzzle.hpp"

namespace dcl::catalan {

using Tiling = Coord;  // row lengths of the tiled region
using Cell = std::pair<int, int>;  // (row, col), 1-based

bool is_catalan_tuple(const Coord& s, int n);
std::vector<Coord> catalan_tuples(int n);
DiamondLattice c_lattice(int n);

bool is_tiling(const Tiling& t, int n);
std::vector<Tiling> enumerate_tilings(int n);

// squares in path order; true iff every step goes South or West and the
// middle square sits on the diagonal
bool is_snake(const std::vector<Cell>& cells);

struct SnakeMove {
  std::vector<Cell> snake;
  bool add;
  Tiling result;
};

std::vector<SnakeMove> legal_snake_moves(int n, const Tiling& t);
// Edge color of the move s -> t, if it is an edge of the puzzle digraph.
std::optional<int> snake_edge_color(const Tiling& s, const Tiling& t);
ColoredDigraph ming_digraph(int n);

// Color- and direction-preserving bijection A -> B, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b,
                                                 int cap = 2000);

// Isomorphism c_lattice(n) -> ming_digraph(n), searched once per n and kept.
const std::vector<int>& ming_isomorphism(int n);

Solution solve_snakes(int n, const Tiling& s, const Tiling& t);
bool replay(const Solution& sol);

std::string render_tiling(const Tiling& t, int n);

// Table format: one line per vertex, "<c-tuple> <tiling>" with comma-separated entries.
std::string isomorphism_table(int n);
bool check_isomorphism_table(int n, const std::string& text);

}  // namespace dcl::catalan
