#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcl/lattice.hpp"
#include "dcl/polynomial.hpp"
#include "dcl/puzzle.hpp"

namespace dcl::symplectic {

enum class Variant { king, seminarii };
enum class BoardKind { ballot, staircase, full };

using Tableau = Coord;    // strictly increasing, values in [1, 2n]
using Partition = Coord;  // weakly decreasing, k parts, each <= 2n-k
using Tally = Coord;      // 0/1, length 2n

bool is_partition(const Partition& p, int k, int n);
bool is_ballot(const Partition& p, int k, int n);
bool is_staircase(const Partition& p, int k, int n);
bool fits(BoardKind kind, const Partition& p, int k, int n);
bool is_tableau(const Tableau& t, Variant v, int k, int n);

std::vector<Partition> enumerate_partitions(BoardKind kind, int k, int n);
std::vector<Tableau> enumerate_tableaux(Variant v, int k, int n);

Partition tab_to_part(const Tableau& t);
Tableau part_to_tab(const Partition& p);
Weight wt_c(const Tableau& t, int n);

Tally to_tally(const Tableau& t, int n);
Tableau from_tally(const Tally& t);
int reorder_position(int i, int n);  // the permutation used by reorder_tally, 1-based
Tally reorder_tally(const Tally& t);
Tally unreorder_tally(const Tally& t);

// Coding on the lattice side: T'_j = 2n-k+j-tau'_j
Tableau lattice_tableau(const Partition& p, int k, int n);
Partition lattice_partition(const Tableau& t, int k, int n);

Partition l_map(const Partition& p, int k, int n);
Partition l_inv(const Partition& p, int k, int n);

Partition conjugate(const Partition& p, int width);
int durfee(const Partition& p);
bool kn_admissible(const Partition& p, int k, int n);
bool dec_admissible(const Partition& p, int k, int n);
bool kn_admissible_tally(const Partition& p, int k, int n);
bool dec_admissible_tally(const Partition& p, int k, int n);
// tally forms of the staircase and ballot conditions, on the domino side
bool staircase_tally(const Partition& p, int k, int n);
bool ballot_tally(const Partition& p, int k, int n);
// weight read off the lattice-side tally
Weight tally_weight(const Partition& p, int k, int n);

struct Square {
  int row, col;
  bool operator==(const Square&) const = default;
};

struct Board {
  BoardKind kind;
  int k, n;

  int width() const { return 2 * n - k; }
  bool contains(int row, int col) const;
  bool red(int row, int col) const;
  int removing_diagonal(int row, int col) const;  // red squares
  int adding_diagonal(int row, int col) const;    // white squares, relabeled on the full board
  std::string render(const std::optional<Partition>& p = std::nullopt) const;
};

struct DominoMove {
  char kind;  // 'R' or 'A'
  std::vector<Square> squares;
  int color;
  Partition result;
};

std::vector<DominoMove> legal_moves(const Board& b, const Partition& p);

struct DominoDigraph {
  ColoredDigraph graph;
  std::vector<DominoMove> moves;  // parallel to graph.edges()
};

DominoDigraph domino_digraph(BoardKind kind, int k, int n);

int sigma(int color, int n);
DiamondLattice a_lattice(int k, int n);
DiamondLattice recolor_sigma(const DiamondLattice& L, int n);
DiamondLattice kn_lattice(int k, int n);
DiamondLattice dec_lattice(int k, int n);
// the lattice a domino board is solved on: a_lattice, kn_lattice or dec_lattice
DiamondLattice target_lattice(BoardKind kind, int k, int n);

Solution solve_domino(BoardKind kind, int k, int n, const Partition& s, const Partition& t);
// Each step must be a legal domino move with the recorded color.
bool replay(BoardKind kind, int k, int n, const Solution& sol);

std::string tableau_to_string(const Tableau& t);

}  // namespace dcl::symplectic
