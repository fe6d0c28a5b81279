#include "dcl/poset.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "dcl/errors.hpp"

namespace dcl {

std::vector<int> VertexColoredPoset::linear_extension() const {
  const int n = size();
  std::vector<int> indeg(n, 0), order;
  std::vector<std::vector<int>> up(n);
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidObject("cover out of range");
    up[a].push_back(b);
    ++indeg[b];
  }
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) order.push_back(v);
  for (size_t h = 0; h < order.size(); ++h)
    for (int w : up[order[h]])
      if (--indeg[w] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != n) throw InvalidObject("covers contain a cycle");
  return order;
}

std::vector<Bits> VertexColoredPoset::down_sets() const {
  const int n = size();
  std::vector<std::vector<int>> lower(n);
  for (auto [a, b] : covers) lower[b].push_back(a);
  std::vector<Bits> d(n, Bits(n));
  for (int v : linear_extension()) {
    d[v].set(v);
    for (int u : lower[v]) d[v] |= d[u];
  }
  return d;
}

void VertexColoredPoset::validate() const {
  auto d = down_sets();
  for (auto [a, b] : covers) {
    if (a == b) throw InvalidObject("loop in covers");
    // a must not lie below another lower cover of b
    for (auto [c, e] : covers)
      if (e == b && c != a && d[c].test(a)) throw InvalidObject("covers are not transitively reduced");
  }
  std::vector<std::pair<int, int>> s = covers;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidObject("repeated cover");
  if (!labels.empty() && static_cast<int>(labels.size()) != size()) throw InvalidObject("label count");
}

bool is_order_ideal(const VertexColoredPoset& p, const Bits& s) {
  for (auto [a, b] : p.covers)
    if (s.test(b) && !s.test(a)) return false;
  return true;
}

std::vector<Bits> order_ideals(const VertexColoredPoset& p, std::size_t cap) {
  const int n = p.size();
  auto order = p.linear_extension();
  std::vector<std::vector<int>> lower(n);
  for (auto [a, b] : p.covers) lower[b].push_back(a);
  std::vector<Bits> out;
  Bits cur(n);
  std::function<void(int)> rec = [&](int h) {
    if (h == n) {
      if (out.size() >= cap) throw CapExceeded("too many order ideals");
      out.push_back(cur);
      return;
    }
    int v = order[h];
    rec(h + 1);
    bool ok = std::all_of(lower[v].begin(), lower[v].end(), [&](int u) { return cur.test(u); });
    if (ok) {
      cur.set(v);
      rec(h + 1);
      cur.reset(v);
    }
  };
  rec(0);
  return out;
}

bool isomorphic(const VertexColoredPoset& a, const VertexColoredPoset& b) {
  const int n = a.size();
  if (n != b.size() || a.covers.size() != b.covers.size()) return false;
  auto da = a.down_sets(), db = b.down_sets();
  std::vector<Bits> ua(n, Bits(n)), ub(n, Bits(n));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      if (da[v].test(u)) ua[u].set(v);
      if (db[v].test(u)) ub[u].set(v);
    }
  auto sig = [](const std::vector<int>& color, const std::vector<Bits>& d, const std::vector<Bits>& u, int v) {
    return std::tuple(color[v], d[v].count(), u[v].count());
  };
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || sig(a.color, da, ua, v) != sig(b.color, db, ub, w)) continue;
      bool ok = true;
      for (int x = 0; x < v && ok; ++x)
        ok = da[v].test(x) == db[w].test(map[x]) && da[x].test(v) == db[map[x]].test(w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return rec(0);
}

}  // namespace dcl
