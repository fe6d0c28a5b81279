#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcl/lattice.hpp"

namespace dcl {

enum class Via { join, meet };
enum class Orientation { mountain, valley, geodesic };

struct Step {
  int color;
  bool up;  // true when the edge points from the earlier vertex to the later one
};

struct PathCertificate {
  std::vector<int> sequence;
  int pivot = -1;  // apex (mountain) or nadir (valley); -1 for plain geodesics
  Orientation orientation = Orientation::geodesic;
  std::vector<Step> color_trace;

  int length() const { return static_cast<int>(color_trace.size()); }
};

struct DistancePair {
  int via_join;
  int via_meet;
};

DistancePair distance_formulas(const DiamondLattice& L, int s, int t);
// Throws InconsistentLattice if the join and meet formulas disagree.
int lattice_distance(const DiamondLattice& L, int s, int t);

int color_count_min(const DiamondLattice& L, int s, int t, int color);
// index c holds the count for color c; index 0 unused
std::vector<int> color_counts(const DiamondLattice& L, int s, int t);

PathCertificate shortest_path(const DiamondLattice& L, int s, int t, Via via = Via::join);

// Length of L, cross-checked against every pairwise distance when
// size() <= check_limit.
int gods_number(const DiamondLattice& L, int check_limit = 256);

std::vector<PathCertificate> all_shortest_paths(const DiamondLattice& L, int s, int t, int cap = 12,
                                                std::size_t max_paths = 1000000);

// Every step is an edge in the stated direction with the stated color.
bool validate_certificate(const ColoredDigraph& g, const PathCertificate& p, int s, int t);

std::string format_certificate(const ColoredDigraph& g, const PathCertificate& p,
                               const ColoredDigraph::Formatter& fmt = {});

}  // namespace dcl

namespace dcl {

// A solved instance expressed in the family's own encoding.
struct Solution {
  int distance = 0;
  std::vector<int> color_counts;  // index 0 unused
  std::vector<Coord> states;      // states.front() = start, states.back() = goal
  std::vector<Step> steps;
};

}  // namespace dcl
