#include "dcl/symplectic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "dcl/errors.hpp"

namespace dcl::symplectic {

bool is_partition(const Partition& p, int k, int n) {
  if (k < 1 || k > n || static_cast<int>(p.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (p[i] < 0 || p[i] > 2 * n - k) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_ballot(const Partition& p, int k, int n) {
  if (!is_partition(p, k, n)) return false;
  for (int i = 1; i <= k; ++i)
    if (p[i - 1] > 2 * n - k - i + 1) return false;
  return true;
}

bool is_staircase(const Partition& p, int k, int n) {
  if (!is_partition(p, k, n)) return false;
  for (int i = 1; i <= k; ++i)
    if (p[i - 1] < k - i) return false;
  return true;
}

bool fits(BoardKind kind, const Partition& p, int k, int n) {
  switch (kind) {
    case BoardKind::ballot: return is_ballot(p, k, n);
    case BoardKind::staircase: return is_staircase(p, k, n);
    case BoardKind::full: return is_partition(p, k, n);
  }
  return false;
}

bool is_tableau(const Tableau& t, Variant v, int k, int n) {
  if (k < 1 || k > n || static_cast<int>(t.size()) != k) return false;
  for (int i = 1; i <= k; ++i) {
    int x = t[i - 1];
    if (x < 1 || x > 2 * n) return false;
    if (i > 1 && x <= t[i - 2]) return false;
    if (v == Variant::king && x > 2 * (n - k + i)) return false;
    if (v == Variant::seminarii && x < 2 * i - 1) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(BoardKind kind, int k, int n) {
  std::vector<Partition> out;
  if (k < 1 || k > n) return out;
  Partition p(k);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == k) {
      if (fits(kind, p, k, n)) out.push_back(p);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      p[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 2 * n - k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_tableaux(Variant v, int k, int n) {
  std::vector<Tableau> out;
  if (k < 1 || k > n) return out;
  Tableau t(k);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == k) {
      if (is_tableau(t, v, k, n)) out.push_back(t);
      return;
    }
    for (int x = lo; x <= 2 * n; ++x) {
      t[i] = x;
      rec(i + 1, x + 1);
    }
  };
  rec(0, 1);
  return out;  // already lexicographic
}

Partition tab_to_part(const Tableau& t) {
  const int k = static_cast<int>(t.size());
  Partition p(k);
  for (int i = 1; i <= k; ++i) p[i - 1] = t[k - i] - (k + 1 - i);
  return p;
}

Tableau part_to_tab(const Partition& p) {
  const int k = static_cast<int>(p.size());
  Tableau t(k);
  for (int j = 1; j <= k; ++j) t[j - 1] = j + p[k - j];
  return t;
}

Weight wt_c(const Tableau& t, int n) {
  auto cnt = [&](int v) { return static_cast<int>(std::count(t.begin(), t.end(), v)); };
  Weight w(n);
  for (int i = 1; i < n; ++i) w[i - 1] = cnt(2 * i - 1) - cnt(2 * i) - cnt(2 * i + 1) + cnt(2 * i + 2);
  w[n - 1] = cnt(2 * n - 1) - cnt(2 * n);
  return w;
}

Tally to_tally(const Tableau& t, int n) {
  Tally b(2 * n, 0);
  for (int x : t) b[x - 1] = 1;
  return b;
}

Tableau from_tally(const Tally& t) {
  Tableau out;
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int reorder_position(int i, int n) { return i <= n ? 2 * i - 1 : 4 * n + 2 - 2 * i; }

Tally reorder_tally(const Tally& t) {
  const int n = static_cast<int>(t.size()) / 2;
  Tally r(2 * n);
  for (int i = 1; i <= 2 * n; ++i) r[i - 1] = t[reorder_position(i, n) - 1];
  return r;
}

Tally unreorder_tally(const Tally& t) {
  const int n = static_cast<int>(t.size()) / 2;
  Tally r(2 * n);
  for (int i = 1; i <= 2 * n; ++i) r[reorder_position(i, n) - 1] = t[i - 1];
  return r;
}

Tableau lattice_tableau(const Partition& p, int k, int n) {
  Tableau t(k);
  for (int j = 1; j <= k; ++j) t[j - 1] = 2 * n - k + j - p[j - 1];
  return t;
}

Partition lattice_partition(const Tableau& t, int k, int n) {
  Partition p(k);
  for (int j = 1; j <= k; ++j) p[j - 1] = 2 * n - k + j - t[j - 1];
  return p;
}

Partition l_map(const Partition& p, int k, int n) {
  if (!is_partition(p, k, n)) throw InvalidObject("not a k x (2n-k) partition");
  return lattice_partition(from_tally(reorder_tally(to_tally(part_to_tab(p), n))), k, n);
}

Partition l_inv(const Partition& p, int k, int n) {
  if (!is_partition(p, k, n)) throw InvalidObject("not a k x (2n-k) partition");
  return tab_to_part(from_tally(unreorder_tally(to_tally(lattice_tableau(p, k, n), n))));
}

Partition conjugate(const Partition& p, int width) {
  Partition c(width, 0);
  for (int j = 1; j <= width; ++j)
    for (int x : p) c[j - 1] += x >= j;
  return c;
}

int durfee(const Partition& p) {
  int d = 0;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i)
    if (p[i - 1] >= i) d = i;
  return d;
}

namespace {

bool kn_rule(const Partition& p, int width, int slack) {
  Partition c = conjugate(p, width);
  for (int i = 1; i <= durfee(p); ++i)
    if (p[i - 1] - c[i - 1] > slack) return false;
  return true;
}

// prefix sums of t[a(i)] + t[b(i)] stay below p
template <class A, class B>
bool tally_rule(const Tally& t, int n, A a, B b) {
  int s = 0;
  for (int p = 1; p <= n; ++p) {
    s += t[a(p) - 1] + t[b(p) - 1];
    if (s > p) return false;
  }
  return true;
}

}  // namespace

bool kn_admissible(const Partition& p, int k, int n) {
  if (!is_partition(p, k, n)) return false;
  return kn_rule(p, 2 * n - k, 2 * n - 2 * k);
}

bool dec_admissible(const Partition& p, int k, int n) {
  if (!is_partition(p, k, n)) return false;
  Partition c = conjugate(p, 2 * n - k);
  Partition mid(c.begin() + (n - k), c.begin() + n);
  return kn_rule(mid, k, 0);
}

bool kn_admissible_tally(const Partition& p, int k, int n) {
  Tally t = to_tally(lattice_tableau(p, k, n), n);
  return tally_rule(t, n, [](int i) { return i; }, [n](int i) { return 2 * n + 1 - i; });
}

bool dec_admissible_tally(const Partition& p, int k, int n) {
  Tally t = to_tally(lattice_tableau(p, k, n), n);
  return tally_rule(t, n, [n](int i) { return n + 1 - i; }, [n](int i) { return n + i; });
}

bool staircase_tally(const Partition& p, int k, int n) {
  (void)k;
  Tally t = to_tally(part_to_tab(p), n);
  return tally_rule(t, n, [](int i) { return 2 * i - 1; }, [](int i) { return 2 * i; });
}

bool ballot_tally(const Partition& p, int k, int n) {
  (void)k;
  Tally t = to_tally(part_to_tab(p), n);
  return tally_rule(t, n, [n](int i) { return 2 * n + 1 - 2 * i; }, [n](int i) { return 2 * n + 2 - 2 * i; });
}

Weight tally_weight(const Partition& p, int k, int n) {
  Tally t = to_tally(lattice_tableau(p, k, n), n);
  auto at = [&](int i) { return t[i - 1]; };
  Weight w(n);
  for (int i = 1; i < n; ++i) w[i - 1] = at(i) - at(i + 1) - at(2 * n + 1 - i) + at(2 * n - i);
  w[n - 1] = at(n) - at(n + 1);
  return w;
}

bool Board::contains(int row, int col) const {
  if (row < 1 || row > k || col < 1 || col > width()) return false;
  switch (kind) {
    case BoardKind::ballot: return col <= width() - row + 1;
    case BoardKind::staircase: return col >= k - row + 1;
    case BoardKind::full: return true;
  }
  return false;
}

bool Board::red(int row, int col) const { return (row + col) % 2 == (1 + width()) % 2; }

int Board::removing_diagonal(int row, int col) const { return (col - row + k + 1) / 2; }

int Board::adding_diagonal(int row, int col) const {
  int i = (col - row + k) / 2;
  return kind == BoardKind::full ? 2 * n - i : i;
}

std::string Board::render(const std::optional<Partition>& p) const {
  std::vector<std::vector<std::string>> cells(k, std::vector<std::string>(width()));
  size_t w = 0;
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= width(); ++c) {
      bool filled = p && (*p)[r - 1] >= c;
      std::string s;
      if (!contains(r, c)) s = filled ? "#" : ".";
      else s = (filled ? "*" : "") + std::string(red(r, c) ? "R" : "W") +
               std::to_string(red(r, c) ? removing_diagonal(r, c) : adding_diagonal(r, c));
      w = std::max(w, s.size());
      cells[r - 1][c - 1] = s;
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << std::string(w - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::vector<DominoMove> legal_moves(const Board& b, const Partition& p) {
  std::vector<DominoMove> out;
  const int k = b.k;
  auto emit = [&](char kind, std::vector<Square> sq, Partition q) {
    for (const auto& s : sq)
      if (!b.contains(s.row, s.col)) return;
    if (!fits(b.kind, q, b.k, b.n)) return;
    int color = 0;
    for (const auto& s : sq) {
      if (kind == 'R' && b.red(s.row, s.col)) color = b.removing_diagonal(s.row, s.col);
      if (kind == 'A' && !b.red(s.row, s.col)) color = b.adding_diagonal(s.row, s.col);
    }
    out.push_back({kind, std::move(sq), color, std::move(q)});
  };
  for (int r = 1; r <= k; ++r) {
    const int len = p[r - 1];
    // (R) horizontal: red west, white east, at the end of the row
    if (len >= 2 && b.red(r, len - 1) && !b.red(r, len)) {
      Partition q = p;
      q[r - 1] -= 2;
      emit('R', {{r, len - 1}, {r, len}}, q);
    }
    // (A) horizontal: white west, red east
    if (!b.red(r, len + 1) && b.red(r, len + 2)) {
      Partition q = p;
      q[r - 1] += 2;
      emit('A', {{r, len + 1}, {r, len + 2}}, q);
    }
    if (r < k && p[r] == len) {
      // (R) vertical: white north, red south, both ending their rows
      if (len >= 1 && !b.red(r, len) && b.red(r + 1, len)) {
        Partition q = p;
        q[r - 1] -= 1;
        q[r] -= 1;
        emit('R', {{r, len}, {r + 1, len}}, q);
      }
      // (A) vertical: red north, white south
      if (b.red(r, len + 1) && !b.red(r + 1, len + 1)) {
        Partition q = p;
        q[r - 1] += 1;
        q[r] += 1;
        emit('A', {{r, len + 1}, {r + 1, len + 1}}, q);
      }
    }
  }
  // singleton at the north-east corner
  if (p[0] == b.width()) {
    Partition q = p;
    q[0] -= 1;
    emit('R', {{1, b.width()}}, q);
  }
  return out;
}

DominoDigraph domino_digraph(BoardKind kind, int k, int n) {
  if (k < 1 || k > n) throw InvalidObject("need 1 <= k <= n");
  DominoDigraph d;
  Board b{kind, k, n};
  for (auto& p : enumerate_partitions(kind, k, n)) d.graph.add_vertex(p);
  for (int v = 0; v < d.graph.size(); ++v)
    for (auto& m : legal_moves(b, d.graph.coord(v))) {
      d.graph.add_edge(v, d.graph.at(m.result), m.color);
      d.moves.push_back(std::move(m));
    }
  return d;
}

int sigma(int color, int n) { return color > n ? 2 * n - color : color; }

DiamondLattice a_lattice(int k, int n) {
  if (k < 1 || k > n) throw InvalidObject("need 1 <= k <= n");
  ColoredDigraph g;
  for (auto& p : enumerate_partitions(BoardKind::full, k, n)) g.add_vertex(p);
  for (int v = 0; v < g.size(); ++v) {
    Partition t = g.coord(v);
    for (int q = 1; q <= k; ++q) {
      ++t[q - 1];
      if (is_partition(t, k, n)) g.add_edge(v, g.at(t), q - t[q - 1] + 2 * n - k);
      --t[q - 1];
    }
  }
  return DiamondLattice::from_diagram(std::move(g));
}

DiamondLattice recolor_sigma(const DiamondLattice& L, int n) {
  ColoredDigraph g;
  const auto& d = L.diagram();
  for (int v = 0; v < d.size(); ++v) g.add_vertex(d.coord(v));
  for (const auto& e : d.edges()) g.add_edge(e.from, e.to, sigma(e.color, n));
  return DiamondLattice::from_diagram(std::move(g));
}

namespace {

DiamondLattice admissible_sublattice(int k, int n, bool (*keep)(const Partition&, int, int)) {
  DiamondLattice full = recolor_sigma(a_lattice(k, n), n);
  const auto& d = full.diagram();
  ColoredDigraph g;
  std::vector<int> ids;
  for (int v = 0; v < d.size(); ++v)
    if (keep(d.coord(v), k, n)) {
      g.add_vertex(d.coord(v));
      ids.push_back(v);
    }
  for (const auto& e : d.edges()) {
    auto a = g.find(d.coord(e.from)), b = g.find(d.coord(e.to));
    if (a && b) g.add_edge(*a, *b, e.color);
  }
  // covers of the induced order must be exactly the inherited edges
  const int m = g.size();
  auto below = [&](int a, int b) { return a != b && full.leq(ids[a], ids[b]); };
  std::set<std::pair<int, int>> covers, edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!below(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (below(a, c) && below(c, b)) cover = false;
      if (cover) covers.emplace(a, b);
    }
  for (const auto& e : g.edges()) edges.emplace(e.from, e.to);
  if (covers != edges) throw StructureViolation("induced covers differ from inherited edges");
  DiamondLattice L = DiamondLattice::from_diagram(std::move(g));
  if (L.length() != k * (2 * n - k) || !L.distributive())
    throw StructureViolation("sublattice is not a full-length distributive lattice");
  return L;
}

}  // namespace

DiamondLattice kn_lattice(int k, int n) { return admissible_sublattice(k, n, kn_admissible); }
DiamondLattice dec_lattice(int k, int n) { return admissible_sublattice(k, n, dec_admissible); }

DiamondLattice target_lattice(BoardKind kind, int k, int n) {
  switch (kind) {
    case BoardKind::ballot: return dec_lattice(k, n);
    case BoardKind::staircase: return kn_lattice(k, n);
    case BoardKind::full: return a_lattice(k, n);
  }
  throw InvalidObject("unknown board");
}

namespace {

struct Instance {
  DiamondLattice lattice;
  DominoDigraph digraph;
};

const Instance& cached(BoardKind kind, int k, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Instance>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{static_cast<int>(kind), k, n}];
  if (!slot) slot = std::make_unique<Instance>(Instance{target_lattice(kind, k, n), domino_digraph(kind, k, n)});
  return *slot;
}

}  // namespace

Solution solve_domino(BoardKind kind, int k, int n, const Partition& s, const Partition& t) {
  if (k < 1 || k > n) throw InvalidObject("need 1 <= k <= n");
  if (!fits(kind, s, k, n) || !fits(kind, t, k, n)) throw InvalidObject("partition does not fit the board");
  const auto& inst = cached(kind, k, n);
  const auto& L = inst.lattice;
  int a = L.diagram().at(l_map(s, k, n)), b = L.diagram().at(l_map(t, k, n));
  Solution sol;
  sol.distance = lattice_distance(L, a, b);
  sol.color_counts = color_counts(L, a, b);
  auto path = shortest_path(L, a, b, Via::join);
  const auto& D = inst.digraph.graph;
  for (int v : path.sequence) sol.states.push_back(l_inv(L.diagram().coord(v), k, n));
  for (size_t i = 0; i + 1 < sol.states.size(); ++i) {
    int x = D.at(sol.states[i]), y = D.at(sol.states[i + 1]);
    const Step& st = path.color_trace[i];
    auto c = st.up ? D.color_between(x, y) : D.color_between(y, x);
    if (!c || *c != st.color) throw InconsistentLattice("lattice step has no matching domino move");
    sol.steps.push_back(st);
  }
  return sol;
}

bool replay(BoardKind kind, int k, int n, const Solution& sol) {
  if (sol.states.size() != sol.steps.size() + 1) return false;
  Board b{kind, k, n};
  for (size_t i = 0; i < sol.steps.size(); ++i) {
    const auto& from = sol.steps[i].up ? sol.states[i] : sol.states[i + 1];
    const auto& to = sol.steps[i].up ? sol.states[i + 1] : sol.states[i];
    if (!fits(kind, from, k, n)) return false;
    bool found = false;
    for (const auto& m : legal_moves(b, from))
      found = found || (m.result == to && m.color == sol.steps[i].color);
    if (!found) return false;
  }
  return static_cast<int>(sol.steps.size()) == sol.distance;
}

std::string tableau_to_string(const Tableau& t) { return "[" + join_ints(t) + "]"; }

}  // namespace dcl::symplectic
