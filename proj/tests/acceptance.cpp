// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// (integer or polynomial equality); the tolerance is pinned at zero.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dcl/catalan.hpp"
#include "dcl/minuscule_b.hpp"
#include "dcl/symplectic.hpp"
#include "dcl/verify.hpp"
#include "dcl/weyl.hpp"
#include "fixtures.hpp"

using namespace dcl;

namespace {

constexpr long long kTolerance = 0;

bool exact(long long a, long long b) { return (a > b ? a - b : b - a) <= kTolerance; }

// Small dense integer polynomials, kept apart from the library's QPolynomial.
using Poly = std::vector<long long>;

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly one_minus_q(int e) {
  Poly p(e + 1, 0);
  p[0] = 1;
  p[e] -= 1;
  return p;
}

// exact long division; returns empty on a remainder
Poly div(Poly a, const Poly& d) {
  int da = static_cast<int>(a.size()) - 1, dd = static_cast<int>(d.size()) - 1;
  Poly q(std::max(0, da - dd + 1), 0);
  for (int i = da - dd; i >= 0; --i) {
    if (a[i + dd] % d[dd]) return {};
    q[i] = a[i + dd] / d[dd];
    for (int j = 0; j <= dd; ++j) a[i + j] -= q[i] * d[j];
  }
  for (long long x : a)
    if (x) return {};
  return q;
}

Poly gaussian(int m, int k) {
  Poly num{1}, den{1};
  for (int i = 0; i < k; ++i) {
    num = mul(num, one_minus_q(m - i));
    den = mul(den, one_minus_q(i + 1));
  }
  return div(num, den);
}

Poly to_poly(const QPolynomial& p) {
  Poly out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long long>(c));
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Line {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& why) {
    if (!c && ok) note << " [first failure: " << why << "]";
    ok = ok && c;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Line&)>& body) {
  Line l;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(l);
  } catch (const std::exception& e) {
    l.ok = false;
    l.note << " [exception: " << e.what() << "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!l.ok) ++failures;
  std::cout << (l.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << l.note.str() << " ("
            << static_cast<int>(secs * 1000) << " ms)" << std::endl;
}

Coord digits(const std::string& s) {
  Coord c;
  for (char ch : s) c.push_back(ch - '0');
  return c;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int main() {
  report(1, "mixedmiddleswitch 00000 -> 01010 at n=5 is 10 by formula and by BFS", [](Line& l) {
    auto sol = minuscule::solve_mixedmiddleswitch(5, {0, 0, 0, 0, 0}, {0, 1, 0, 1, 0});
    auto B = minuscule::mixedmiddleswitch_digraph(5);
    int bfs = bfs_distance(B, B.at({0, 0, 0, 0, 0}), B.at({0, 1, 0, 1, 0}));
    l.note << " formula=" << sol.distance << " bfs=" << bfs;
    l.require(exact(sol.distance, 10) && exact(bfs, 10), "distance");
    l.require(minuscule::replay(sol), "replay");
  });

  report(2, "b_map is a colored isomorphism Z(n) -> B(n), n=2..6, all pair distances agree", [](Line& l) {
    long long pairs = 0;
    for (int n = 2; n <= 6; ++n) {
      auto Z = minuscule::z_lattice(n);
      auto B = minuscule::mixedmiddleswitch_digraph(n);
      l.require(Z.size() == (1 << n), "|Z(n)|");
      std::vector<int> to_b(Z.size());
      std::set<int> image;
      for (int v = 0; v < Z.size(); ++v) {
        to_b[v] = B.at(minuscule::b_map(Z.diagram().coord(v)));
        image.insert(to_b[v]);
      }
      l.require(static_cast<int>(image.size()) == B.size(), "bijective");
      l.require(Z.diagram().edge_count() == B.edge_count(), "edge count");
      for (const auto& e : Z.diagram().edges())
        l.require(B.color_between(to_b[e.from], to_b[e.to]) == e.color, "edge color");
      for (int s = 0; s < Z.size(); ++s) {
        auto d = bfs_all(B, to_b[s]);
        for (int t = s + 1; t < Z.size(); ++t, ++pairs)
          l.require(exact(lattice_distance(Z, s, t), d[to_b[t]]), "distance");
      }
    }
    l.note << " pairs=" << pairs;
  });

  report(3, "rank generating function of Z(n) is prod (1+q^i), length n(n+1)/2, n<=8", [](Line& l) {
    for (int n = 2; n <= 8; ++n) {
      auto Z = minuscule::z_lattice(n);
      Poly want{1};
      for (int i = 1; i <= n; ++i) {
        Poly f(i + 1, 0);
        f[0] = f[i] = 1;
        want = mul(want, f);
      }
      l.require(to_poly(weyl::rgf(Z)) == want, "rgf n=" + std::to_string(n));
      l.require(exact(Z.length(), n * (n + 1) / 2), "length n=" + std::to_string(n));
    }
    l.note << " length(Z(5))=15, binom(5,2)=10";
  });

  report(4, "golden fixtures: drawn Z(5)/B(5) and the k=n=3 ballot digraph", [](Line& l) {
    auto Z = minuscule::z_lattice(5);
    std::map<std::string, int> v;
    int mislabeled = 0;
    for (const auto& x : fixtures::fig1_vertices) {
      auto c = digits(x.z);
      v[x.name] = Z.diagram().at(c);
      if (minuscule::bits_to_string(minuscule::b_map(c)) != x.b) {
        ++mislabeled;
        l.note << " drawn label of " << x.z << " is " << x.b << ", computed "
               << minuscule::bits_to_string(minuscule::b_map(c)) << ";";
      }
    }
    l.require(mislabeled == 1, "exactly one label discrepancy");
    l.require(Z.size() == 32 && Z.diagram().edge_count() == static_cast<int>(fixtures::fig1_edges.size()), "Z(5) counts");
    // drawn edge colors must match except for the pinned misprints, and each
    // drawn misprint must itself break a diamond
    int misprints = 0;
    for (const auto& [a, b, c] : fixtures::fig1_edges) {
      auto got = Z.diagram().color_between(v[a], v[b]);
      l.require(got.has_value(), "edge " + a + "->" + b);
      if (!got || *got == c) continue;
      ++misprints;
      bool listed = false;
      for (const auto& [ma, mb, drawn, computed] : fixtures::fig1_edge_misprints)
        listed = listed || (ma == a && mb == b && drawn == c && computed == *got);
      l.require(listed, "unlisted edge discrepancy " + a + "->" + b);
      ColoredDigraph as_drawn;
      for (int x = 0; x < Z.size(); ++x) as_drawn.add_vertex(Z.diagram().coord(x));
      for (const auto& e : Z.diagram().edges())
        as_drawn.add_edge(e.from, e.to, e.from == v[a] && e.to == v[b] ? c : e.color);
      l.require(!is_diamond_colored(as_drawn), "drawn color is consistent");
      l.note << " drawn color of " << join_ints(Z.diagram().coord(v[a]), "") << "->"
             << join_ints(Z.diagram().coord(v[b]), "") << " is " << c << ", computed " << *got << ";";
    }
    l.require(misprints == static_cast<int>(fixtures::fig1_edge_misprints.size()), "misprint count");

    auto D = symplectic::domino_digraph(symplectic::BoardKind::ballot, 3, 3);
    auto wt = weyl::poset_weights(D.graph, 3);
    std::map<std::string, int> u;
    int weights = 0;
    for (const auto& x : fixtures::fig3_vertices) {
      u[x.name] = D.graph.at(x.partition);
      l.require(symplectic::part_to_tab(x.partition) == x.tableau, "tableau");
      if (wt[u[x.name]] == x.weight && symplectic::wt_c(x.tableau, 3) == x.weight) ++weights;
    }
    l.require(weights == 14, "weights");
    l.require(D.graph.size() == 14 && D.graph.edge_count() == static_cast<int>(fixtures::fig3_edges.size()), "counts");
    for (const auto& [a, b, c] : fixtures::fig3_edges) l.require(D.graph.color_between(u[a], u[b]) == c, a + "->" + b);
    l.note << " weights exact=" << weights << "/14";
  });

  report(5, "type C counts, lengths and rank generating functions, 1<=k<=n<=5", [](Line& l) {
    using namespace symplectic;
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        std::string tag = " k=" + std::to_string(k) + " n=" + std::to_string(n);
        long long num = (2LL * n + 2 - 2 * k) * binom(2 * n + 1, k), den = 2LL * n + 2 - k;
        l.require(num % den == 0, "integral" + tag);
        long long card = num / den;
        l.require(exact(static_cast<long long>(enumerate_tableaux(Variant::king, k, n).size()), card), "King" + tag);
        l.require(exact(static_cast<long long>(enumerate_tableaux(Variant::seminarii, k, n).size()), card),
                  "seminarii" + tag);
        Poly want = div(mul(one_minus_q(2 * n + 2 - 2 * k), gaussian(2 * n + 1, k)), one_minus_q(2 * n + 2 - k));
        for (const auto& L : {kn_lattice(k, n), dec_lattice(k, n)}) {
          l.require(exact(L.size(), card), "size" + tag);
          l.require(exact(L.length(), k * (2 * n - k)), "length" + tag);
          l.require(!want.empty() && to_poly(weyl::rgf(L)) == want, "rgf" + tag);
        }
      }
  });

  report(6, "l_map carries staircase onto KN and ballot onto DeC, 1<=k<=n<=4; (4,3) -> (1,1)", [](Line& l) {
    using namespace symplectic;
    l.require(l_map({4, 3}, 2, 3) == Partition{1, 1}, "example");
    int maps = 0;
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k)
        for (auto kind : {BoardKind::staircase, BoardKind::ballot}) {
          auto D = domino_digraph(kind, k, n);
          auto L = kind == BoardKind::staircase ? kn_lattice(k, n) : dec_lattice(k, n);
          l.require(D.graph.size() == L.size() && D.graph.edge_count() == L.diagram().edge_count(), "counts");
          std::set<int> image;
          for (int v = 0; v < D.graph.size(); ++v) image.insert(L.diagram().at(l_map(D.graph.coord(v), k, n)));
          l.require(static_cast<int>(image.size()) == L.size(), "bijective");
          for (const auto& e : D.graph.edges()) {
            int a = L.diagram().at(l_map(D.graph.coord(e.from), k, n));
            int b = L.diagram().at(l_map(D.graph.coord(e.to), k, n));
            l.require(L.diagram().color_between(a, b) == e.color, "edge color");
          }
          ++maps;
        }
    l.note << " isomorphisms=" << maps;
  });

  report(7, "weight multisets agree (k<=n<=4); bialternant identities (C n<=3, B omega_n n<=4)", [](Line& l) {
    using namespace symplectic;
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        std::vector<Weight> king, sem;
        for (const auto& t : enumerate_tableaux(Variant::king, k, n)) king.push_back(wt_c(t, n));
        for (const auto& t : enumerate_tableaux(Variant::seminarii, k, n)) sem.push_back(wt_c(t, n));
        auto a = sorted(king), b = sorted(sem);
        auto c = sorted(weyl::poset_weights(kn_lattice(k, n).diagram(), n));
        auto d = sorted(weyl::poset_weights(dec_lattice(k, n).diagram(), n));
        l.require(a == b && b == c && c == d, "multisets k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= n; ++k) {
        auto C = weyl::root_data(weyl::Family::C, n);
        for (const auto& L : {kn_lattice(k, n), dec_lattice(k, n)})
          l.require(weyl::bialternant_check(C, weyl::omega(n, k), weyl::wgf(L.diagram(), n)), "type C");
      }
    for (int n = 2; n <= 4; ++n) {
      auto B = weyl::root_data(weyl::Family::B, n);
      l.require(weyl::bialternant_check(B, weyl::omega(n, n), weyl::wgf(minuscule::z_lattice(n).diagram(), n)),
                "type B");
    }
  });

  report(8, "WGF(Z(n)) is the free orbit sum of omega_n (n<=4); Z(n) structured (n<=6); symmetric unimodal",
         [](Line& l) {
           for (int n = 2; n <= 4; ++n) {
             auto B = weyl::root_data(weyl::Family::B, n);
             auto w = weyl::wgf(minuscule::z_lattice(n).diagram(), n);
             auto orb = weyl::orbit(B, weyl::omega(n, n));
             bool ok = w.size() == orb.size();
             for (const auto& [wt, c] : w.terms()) ok = ok && c == 1 && orb.count(wt);
             l.require(ok, "orbit n=" + std::to_string(n));
           }
           for (int n = 2; n <= 6; ++n)
             l.require(weyl::is_structured(minuscule::z_lattice(n).diagram(), weyl::root_data(weyl::Family::B, n)),
                       "structured n=" + std::to_string(n));
           int lattices = 0;
           auto check = [&](const DiamondLattice& L) {
             ++lattices;
             l.require(weyl::is_symmetric_unimodal(weyl::rgf(L)), "symmetric unimodal");
           };
           for (int n = 2; n <= 8; ++n) check(minuscule::z_lattice(n));
           for (int n = 1; n <= 5; ++n)
             for (int k = 1; k <= n; ++k) {
               check(symplectic::kn_lattice(k, n));
               check(symplectic::dec_lattice(k, n));
               check(symplectic::a_lattice(k, n));
             }
           l.note << " lattices=" << lattices;
         });

  report(9, "Catalan counts (n<=6), snake digraph isomorphic to C(n) (n<=5), 4x4 challenge distance", [](Line& l) {
    for (int n = 1; n <= 6; ++n) {
      long long cat = binom(2 * n + 2, n + 1) / (n + 2);
      l.require(exact(catalan::c_lattice(n).size(), cat) &&
                    exact(static_cast<long long>(catalan::enumerate_tilings(n).size()), cat),
                "counts n=" + std::to_string(n));
    }
    for (int n = 1; n <= 5; ++n)
      l.require(catalan::find_isomorphism(catalan::c_lattice(n).diagram(), catalan::ming_digraph(n)).has_value(),
                "isomorphism n=" + std::to_string(n));
    auto M = catalan::ming_digraph(4);
    int bfs = bfs_distance(M, M.at({4, 4, 1, 0}), M.at({1, 0, 0, 0}));
    auto sol = catalan::solve_snakes(4, {4, 4, 1, 0}, {1, 0, 0, 0});
    l.note << " (4,4,1,0) -> (1,0,0,0): formula=" << sol.distance << " bfs=" << bfs;
    l.require(exact(sol.distance, bfs), "challenge distance");
    l.require(catalan::replay(sol), "replay");
  });

  report(10, "distance theorem on 100 random lattices from 8-element colored posets", [](Line& l) {
    std::mt19937 rng(424242);
    long long pairs = 0, geodesics = 0;
    int lattices = 0;
    while (lattices < 100) {
      auto P = verify::random_poset(8, 3, 0.25, rng);
      auto L = ideals_lattice(P);
      l.require(is_diamond_colored(L.diagram()), "diamond-colored");
      ++lattices;
      for (int s = 0; s < L.size(); ++s) {
        auto d = bfs_all(L.diagram(), s);
        for (int t = 0; t < L.size(); ++t, ++pairs) l.require(exact(lattice_distance(L, s, t), d[t]), "distance");
      }
      for (int i = 0; i < 3; ++i) {
        int s = static_cast<int>(rng() % L.size()), t = static_cast<int>(rng() % L.size());
        int dist = lattice_distance(L, s, t);
        std::vector<int> first;
        for (const auto& p : all_shortest_paths(L, s, t)) {
          std::vector<int> c(L.diagram().max_color() + 1, 0);
          for (const auto& st : p.color_trace) ++c[st.color];
          if (first.empty()) first = c;
          l.require(c == first, "geodesic color multiset");
          ++geodesics;
        }
        for (Via via : {Via::join, Via::meet}) {
          auto p = shortest_path(L, s, t, via);
          l.require(validate_certificate(L.diagram(), p, s, t) && p.length() == dist, "certificate");
        }
      }
    }
    l.note << " lattices=" << lattices << " pairs=" << pairs << " geodesics=" << geodesics;
  });

  return failures ? 1 : 0;
}
