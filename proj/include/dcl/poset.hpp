#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <utility>
#include <vector>

#include "dcl/digraph.hpp"

namespace dcl {

using Bits = boost::dynamic_bitset<>;

struct VertexColoredPoset {
  std::vector<int> color;                  // color of each element
  std::vector<std::pair<int, int>> covers; // (lower, upper)
  std::vector<Coord> labels;               // optional, one per element

  int size() const { return static_cast<int>(color.size()); }

  // Throws InvalidObject unless covers are acyclic and transitively reduced.
  void validate() const;
  // below[v] holds every u <= v (v included)
  std::vector<Bits> down_sets() const;
  std::vector<int> linear_extension() const;
};

// All order ideals, in the order produced by a fixed backtracking over a
// linear extension. Throws CapExceeded past `cap` ideals.
std::vector<Bits> order_ideals(const VertexColoredPoset& p, std::size_t cap = 1u << 20);

bool is_order_ideal(const VertexColoredPoset& p, const Bits& s);

// Color- and order-preserving isomorphism test by backtracking.
bool isomorphic(const VertexColoredPoset& a, const VertexColoredPoset& b);

}  // namespace dcl
