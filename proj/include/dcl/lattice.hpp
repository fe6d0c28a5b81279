#pragma once

#include <map>
#include <vector>

#include "dcl/digraph.hpp"
#include "dcl/poset.hpp"

namespace dcl {

// A diamond-colored modular lattice given by its order diagram. Distributive
// lattices additionally carry the ideal of join-irreducibles below each vertex.
class DiamondLattice {
 public:
  // Validates everything; throws NotRanked or StructureViolation.
  static DiamondLattice from_diagram(ColoredDigraph g);

  const ColoredDigraph& diagram() const { return g_; }
  int size() const { return g_.size(); }
  int rank(int v) const { return rank_[v]; }
  const std::vector<int>& ranks() const { return rank_; }
  int length() const { return length_; }
  int min() const { return min_; }
  int max() const { return max_; }
  bool distributive() const { return distributive_; }
  bool leq(int a, int b) const { return up_[a].test(b); }

  int join(int a, int b) const;
  int meet(int a, int b) const;

  // Distributive only (NotDistributive otherwise).
  const VertexColoredPoset& irreducibles() const;
  const Bits& ideal(int v) const;
  int irreducible_vertex(int j) const;  // lattice vertex of the j-th irreducible
  int vertex_of_ideal(const Bits& s) const;

 private:
  void require_distributive() const;

  ColoredDigraph g_;
  std::vector<int> rank_;
  int length_ = 0, min_ = 0, max_ = 0;
  bool distributive_ = false;
  std::vector<Bits> up_, down_;
  VertexColoredPoset irr_;
  std::vector<int> irr_vertex_;
  std::vector<Bits> ideal_;
  std::map<Bits, int> by_ideal_;
  std::vector<int> join_table_, meet_table_;
};

// Lattice of order ideals; coordinates are 0/1 membership vectors.
DiamondLattice ideals_lattice(const VertexColoredPoset& p);

VertexColoredPoset join_irreducibles(const DiamondLattice& l);

}  // namespace dcl
