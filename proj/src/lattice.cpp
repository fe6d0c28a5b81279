#include "dcl/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "dcl/errors.hpp"

namespace dcl {

namespace {

// Count ideals and covers of p, stopping once either exceeds the given limits.
std::pair<long, long> count_ideals(const VertexColoredPoset& p, long max_ideals) {
  long ideals = 0, covers = 0;
  try {
    for (const auto& s : order_ideals(p, static_cast<std::size_t>(max_ideals) + 1)) {
      ++ideals;
      for (int v = 0; v < p.size(); ++v) {
        if (s.test(v)) continue;
        bool addable = true;
        for (auto [a, b] : p.covers)
          if (b == v && !s.test(a)) { addable = false; break; }
        covers += addable;
      }
    }
  } catch (const CapExceeded&) {
    return {max_ideals + 1, 0};
  }
  return {ideals, covers};
}

}  // namespace

DiamondLattice DiamondLattice::from_diagram(ColoredDigraph g) {
  DiamondLattice L;
  L.g_ = std::move(g);
  const auto& G = L.g_;
  const int n = G.size();
  if (n == 0) throw StructureViolation("empty diagram");
  for (int d : bfs_all(G, 0))
    if (d < 0) throw StructureViolation("diagram is not connected");
  L.rank_ = rank_function(G);
  L.length_ = *std::max_element(L.rank_.begin(), L.rank_.end());

  std::vector<int> mins, maxs;
  for (int v = 0; v < n; ++v) {
    if (G.in_edges(v).empty()) mins.push_back(v);
    if (G.out_edges(v).empty()) maxs.push_back(v);
  }
  if (mins.size() != 1 || maxs.size() != 1) throw StructureViolation("no unique minimum and maximum");
  L.min_ = mins[0];
  L.max_ = maxs[0];

  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](int a, int b) { return L.rank_[a] < L.rank_[b]; });
  L.up_.assign(n, Bits(n));
  L.down_.assign(n, Bits(n));
  for (int v : by_rank) {
    L.down_[v].set(v);
    for (int e : G.in_edges(v)) L.down_[v] |= L.down_[G.edge(e).from];
  }
  for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it) {
    int v = *it;
    L.up_[v].set(v);
    for (int e : G.out_edges(v)) L.up_[v] |= L.up_[G.edge(e).to];
  }

  // join-irreducibles, ordered by coordinates for reproducibility
  std::vector<int> J;
  for (int v = 0; v < n; ++v)
    if (G.in_edges(v).size() == 1) J.push_back(v);
  std::sort(J.begin(), J.end(), [&](int a, int b) { return G.coord(a) < G.coord(b); });
  const int m = static_cast<int>(J.size());
  VertexColoredPoset P;
  for (int j : J) {
    P.color.push_back(G.edge(G.in_edges(j)[0]).color);
    P.labels.push_back(G.coord(j));
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !L.up_[J[a]].test(J[b])) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (c != a && c != b && L.up_[J[a]].test(J[c]) && L.up_[J[c]].test(J[b])) cover = false;
      if (cover) P.covers.emplace_back(a, b);
    }

  std::vector<Bits> ideal(n, Bits(m));
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < m; ++a)
      if (L.down_[v].test(J[a])) ideal[v].set(a);
  std::map<Bits, int> by_ideal;
  bool distributive = true;
  for (int v = 0; v < n && distributive; ++v)
    distributive = by_ideal.emplace(ideal[v], v).second;
  for (const auto& e : G.edges()) {
    if (!distributive) break;
    distributive = ideal[e.from].is_subset_of(ideal[e.to]) && (ideal[e.to].count() == ideal[e.from].count() + 1);
  }
  if (distributive) {
    auto [ni, nc] = count_ideals(P, n);
    distributive = ni == n && nc == G.edge_count();
  }

  if (distributive) {
    L.distributive_ = true;
    L.irr_ = std::move(P);
    L.irr_vertex_ = J;
    L.ideal_ = std::move(ideal);
    L.by_ideal_ = std::move(by_ideal);
  } else {
    // general lattice: least upper bounds from the order, checked for uniqueness
    L.join_table_.assign(static_cast<size_t>(n) * n, -1);
    L.meet_table_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        Bits U = L.up_[a] & L.up_[b], D = L.down_[a] & L.down_[b];
        int j = -1, k = -1;
        for (auto u = U.find_first(); u != Bits::npos; u = U.find_next(u))
          if (U.is_subset_of(L.up_[u])) { j = static_cast<int>(u); break; }
        for (auto d = D.find_first(); d != Bits::npos; d = D.find_next(d))
          if (D.is_subset_of(L.down_[d])) { k = static_cast<int>(d); break; }
        if (j < 0 || k < 0) throw StructureViolation("diagram is not a lattice");
        if (L.rank_[a] + L.rank_[b] != L.rank_[j] + L.rank_[k])
          throw StructureViolation("lattice is not modular");
        L.join_table_[a * n + b] = L.join_table_[b * n + a] = j;
        L.meet_table_[a * n + b] = L.meet_table_[b * n + a] = k;
      }
  }
  if (!is_diamond_colored(G)) throw StructureViolation("diagram is not diamond-colored");
  return L;
}

void DiamondLattice::require_distributive() const {
  if (!distributive_) throw NotDistributive("lattice is not distributive");
}

int DiamondLattice::join(int a, int b) const {
  if (distributive_) return by_ideal_.at(ideal_[a] | ideal_[b]);
  return join_table_[static_cast<size_t>(a) * size() + b];
}

int DiamondLattice::meet(int a, int b) const {
  if (distributive_) return by_ideal_.at(ideal_[a] & ideal_[b]);
  return meet_table_[static_cast<size_t>(a) * size() + b];
}

const VertexColoredPoset& DiamondLattice::irreducibles() const {
  require_distributive();
  return irr_;
}

const Bits& DiamondLattice::ideal(int v) const {
  require_distributive();
  return ideal_[v];
}

int DiamondLattice::irreducible_vertex(int j) const {
  require_distributive();
  return irr_vertex_[j];
}

int DiamondLattice::vertex_of_ideal(const Bits& s) const {
  require_distributive();
  auto it = by_ideal_.find(s);
  if (it == by_ideal_.end()) throw InvalidObject("not an ideal of this lattice");
  return it->second;
}

DiamondLattice ideals_lattice(const VertexColoredPoset& p) {
  p.validate();
  const int n = p.size();
  auto ideals = order_ideals(p);
  std::sort(ideals.begin(), ideals.end());
  std::vector<std::vector<int>> lower(n);
  for (auto [a, b] : p.covers) lower[b].push_back(a);
  ColoredDigraph g;
  for (const auto& s : ideals) {
    Coord c(n);
    for (int v = 0; v < n; ++v) c[v] = s.test(v);
    g.add_vertex(c);
  }
  for (int x = 0; x < g.size(); ++x) {
    Coord c = g.coord(x);
    for (int v = 0; v < n; ++v) {
      if (c[v]) continue;
      if (!std::all_of(lower[v].begin(), lower[v].end(), [&](int u) { return c[u] == 1; })) continue;
      c[v] = 1;
      g.add_edge(x, g.at(c), p.color[v]);
      c[v] = 0;
    }
  }
  return DiamondLattice::from_diagram(std::move(g));
}

VertexColoredPoset join_irreducibles(const DiamondLattice& l) { return l.irreducibles(); }

}  // namespace dcl
