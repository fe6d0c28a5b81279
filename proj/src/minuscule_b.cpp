#include "dcl/minuscule_b.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "dcl/errors.hpp"

namespace dcl::minuscule {

bool is_ztuple(const Coord& x, int n) {
  if (static_cast<int>(x.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0 || x[i] > n) return false;
    if (i + 1 < n && (x[i] < x[i + 1] || (x[i] != 0 && x[i] == x[i + 1]))) return false;
  }
  return true;
}

bool is_binary(const Coord& y, int n) {
  if (static_cast<int>(y.size()) != n) return false;
  for (int b : y)
    if (b != 0 && b != 1) return false;
  return true;
}

std::vector<Coord> z_tuples(int n) {
  // subsets of {1..n} listed decreasingly, padded with zeros
  std::vector<Coord> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Coord x;
    for (int v = n; v >= 1; --v)
      if (mask >> (v - 1) & 1) x.push_back(v);
    x.resize(n, 0);
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiamondLattice z_lattice(int n) {
  if (n < 2) throw InvalidObject("z_lattice needs n >= 2");
  ColoredDigraph g;
  for (auto& x : z_tuples(n)) g.add_vertex(x);
  for (int v = 0; v < g.size(); ++v) {
    Coord t = g.coord(v);
    for (int k = 0; k < n; ++k) {
      ++t[k];
      if (is_ztuple(t, n)) g.add_edge(v, g.at(t), n + 1 - t[k]);
      --t[k];
    }
  }
  return DiamondLattice::from_diagram(std::move(g));
}

std::optional<int> move_color(const Coord& s, const Coord& t) {
  const int n = static_cast<int>(s.size());
  if (n < 2 || t.size() != s.size()) return std::nullopt;
  int diff = -1;
  for (int j = 0; j < n; ++j)
    if (s[j] != t[j]) {
      if (diff >= 0) return std::nullopt;
      diff = j;
    }
  if (diff < 0) return std::nullopt;
  const int i = diff + 1;
  auto at = [&](int j) { return s[j - 1]; };
  bool ok = false;
  if (1 < i && i < n) {
    ok = (at(i - 1) == 0 && at(i) == 0 && at(i + 1) == 1) || (at(i - 1) == 1 && at(i) == 1 && at(i + 1) == 0);
  } else if (i == 1) {
    ok = at(1) == 0 && at(2) == 1;
  } else {
    ok = (at(n - 1) == 0 && at(n) == 0) || (at(n - 1) == 1 && at(n) == 1);
  }
  if (!ok) return std::nullopt;
  return i;
}

ColoredDigraph mixedmiddleswitch_digraph(int n) {
  if (n < 2) throw InvalidObject("mixedmiddleswitch needs n >= 2");
  ColoredDigraph g;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Coord y(n);
    for (int j = 0; j < n; ++j) y[j] = mask >> (n - 1 - j) & 1;
    g.add_vertex(y);
  }
  for (int v = 0; v < g.size(); ++v) {
    Coord t = g.coord(v);
    for (int j = 0; j < n; ++j) {
      t[j] ^= 1;
      if (auto c = move_color(g.coord(v), t)) g.add_edge(v, g.at(t), *c);
      t[j] ^= 1;
    }
  }
  return g;
}

std::vector<Interval> intervals_of_tuple(const Coord& x) {
  const int n = static_cast<int>(x.size());
  auto xi = [&](int i) { return i == 0 ? n : (i == n + 1 ? 0 : x[i - 1]); };
  std::vector<Interval> I;
  for (int i = 0; i <= n; ++i) I.push_back({n + 1 - xi(i), n - xi(i + 1)});
  return I;
}

std::vector<Interval> intervals_of_bits(const Coord& y) {
  const int n = static_cast<int>(y.size());
  std::vector<int> j{1};
  for (int p = 1; p <= n; ++p)
    if ((p == 1 ? 0 : y[p - 2]) != y[p - 1]) j.push_back(p);
  const int k = static_cast<int>(j.size()) - 1;
  j.push_back(n + 1);
  std::vector<Interval> J;
  for (int i = 0; i <= n; ++i) J.push_back(i <= k ? Interval{j[i], j[i + 1] - 1} : Interval{n + 1, n});
  return J;
}

Coord b_map(const Coord& x) {
  const int n = static_cast<int>(x.size());
  if (!is_ztuple(x, n)) throw InvalidObject("not a zero-cushioned subset");
  Coord y(n);
  auto I = intervals_of_tuple(x);
  for (int i = 0; i <= n; ++i)
    for (int j = I[i].lo; j <= I[i].hi; ++j) y[j - 1] = i % 2;
  return y;
}

Coord b_inv(const Coord& y) {
  const int n = static_cast<int>(y.size());
  if (!is_binary(y, n)) throw InvalidObject("not a binary sequence");
  Coord x;
  for (int p = 1; p <= n; ++p)
    if ((p == 1 ? 0 : y[p - 2]) != y[p - 1]) x.push_back(n + 1 - p);
  x.resize(n, 0);
  return x;
}

namespace {

const DiamondLattice& cached_z(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DiamondLattice>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<DiamondLattice>(z_lattice(n));
  return *slot;
}

}  // namespace

Solution solve_mixedmiddleswitch(int n, const Coord& s, const Coord& t) {
  if (!is_binary(s, n) || !is_binary(t, n)) throw InvalidObject("expected binary sequences of length " + std::to_string(n));
  if (n < 2) throw InvalidObject("mixedmiddleswitch needs n >= 2");
  Coord x = b_inv(s), y = b_inv(t);
  int sx = 0, sy = 0, smax = 0, smin = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    smax += std::max(x[i], y[i]);
    smin += std::min(x[i], y[i]);
  }
  Solution sol;
  sol.distance = 2 * smax - sx - sy;
  if (sol.distance != sx + sy - 2 * smin) throw InconsistentLattice("join and meet formulas disagree");

  const auto& Z = cached_z(n);
  int a = Z.diagram().at(x), b = Z.diagram().at(y);
  sol.color_counts = color_counts(Z, a, b);
  auto path = shortest_path(Z, a, b, Via::join);
  if (path.length() != sol.distance) throw InconsistentLattice("path length differs from formula");
  for (int v : path.sequence) sol.states.push_back(b_map(Z.diagram().coord(v)));
  sol.steps = path.color_trace;
  return sol;
}

bool replay(const Solution& sol) {
  if (sol.states.size() != sol.steps.size() + 1) return false;
  for (size_t i = 0; i < sol.steps.size(); ++i) {
    const auto& a = sol.states[i];
    const auto& b = sol.states[i + 1];
    auto c = sol.steps[i].up ? move_color(a, b) : move_color(b, a);
    if (!c || *c != sol.steps[i].color) return false;
  }
  return static_cast<int>(sol.steps.size()) == sol.distance;
}

std::string bits_to_string(const Coord& y) {
  std::string s;
  for (int b : y) s += static_cast<char>('0' + b);
  return s;
}

Coord parse_bits(const std::string& s) {
  Coord y;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError("bit-string expected, got '" + s + "'");
    y.push_back(ch - '0');
  }
  if (y.empty()) throw ParseError("empty bit-string");
  return y;
}

}  // namespace dcl::minuscule
