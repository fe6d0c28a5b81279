#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcl/lattice.hpp"
#include "dcl/puzzle.hpp"

namespace dcl::minuscule {

struct Interval {
  int lo, hi;
  bool empty() const { return lo > hi; }
  bool operator==(const Interval&) const = default;
};

bool is_ztuple(const Coord& x, int n);
bool is_binary(const Coord& y, int n);
std::vector<Coord> z_tuples(int n);

DiamondLattice z_lattice(int n);
ColoredDigraph mixedmiddleswitch_digraph(int n);

// Color of the legal move s -> t, if there is one.
std::optional<int> move_color(const Coord& s, const Coord& t);

std::vector<Interval> intervals_of_tuple(const Coord& x);  // I_0..I_n
std::vector<Interval> intervals_of_bits(const Coord& y);   // J_0..J_n
Coord b_map(const Coord& x);
Coord b_inv(const Coord& y);

Solution solve_mixedmiddleswitch(int n, const Coord& s, const Coord& t);
// Replays the steps under the switching rules.
bool replay(const Solution& sol);

std::string bits_to_string(const Coord& y);
Coord parse_bits(const std::string& s);

}  // namespace dcl::minuscule
