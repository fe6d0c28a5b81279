#include "dcl/weyl.hpp"

#include <algorithm>
#include <map>

#include "dcl/errors.hpp"

namespace dcl::weyl {

Weight RootSystemData::alpha(int i) const {
  Weight w(n);
  for (int j = 0; j < n; ++j) w[j] = cartan(i - 1, j);
  return w;
}

Weight omega(int n, int k) {
  Weight w(n, 0);
  w[k - 1] = 1;
  return w;
}

RootSystemData root_data(Family f, int n) {
  if (n < 1) throw InvalidObject("rank must be positive");
  RootSystemData r{f, n, Eigen::MatrixXi::Zero(n, n), Weight(n, 1), Eigen::MatrixXi::Zero(n, n),
                   Eigen::MatrixXi::Zero(n, n), {}};
  for (int i = 0; i + 1 < n; ++i) {
    r.simple_euclid2(i, i) = 2;
    r.simple_euclid2(i, i + 1) = -2;
  }
  r.simple_euclid2(n - 1, n - 1) = f == Family::B ? 2 : 4;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ij = r.simple_euclid2.row(i).dot(r.simple_euclid2.row(j));
      int jj = r.simple_euclid2.row(j).squaredNorm();
      r.cartan(i, j) = 2 * ij / jj;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) r.omega_euclid2(i, j) = 2;
  if (f == Family::B)
    for (int j = 0; j < n; ++j) r.omega_euclid2(n - 1, j) = 1;

  auto e2 = [n](int i, int s) {
    Eigen::VectorXi v = Eigen::VectorXi::Zero(n);
    v(i) = 2 * s;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      r.positive_euclid2.push_back(e2(i, 1) - e2(j, 1));
      r.positive_euclid2.push_back(e2(i, 1) + e2(j, 1));
    }
    r.positive_euclid2.push_back(f == Family::B ? e2(i, 1) : e2(i, 2));
  }
  return r;
}

int pairing(const RootSystemData& phi, const Weight& mu, const Eigen::VectorXi& root2) {
  Eigen::VectorXi m = Eigen::VectorXi::Zero(phi.n);
  for (int i = 0; i < phi.n; ++i) m += mu[i] * phi.omega_euclid2.row(i).transpose();
  // 2 (mu, a) / (a, a) with both vectors doubled
  int num = 2 * m.dot(root2), den = root2.squaredNorm();
  if (num % den) throw InvalidObject("non-integral pairing");
  return num / den;
}

Weight reflect(const RootSystemData& phi, int i, const Weight& mu) {
  Weight r = mu;
  int c = mu[i - 1];
  for (int j = 0; j < phi.n; ++j) r[j] -= c * phi.cartan(i - 1, j);
  return r;
}

Weight apply(const GroupElement& g, const Weight& mu) {
  Eigen::VectorXi v = Eigen::Map<const Eigen::VectorXi>(mu.data(), static_cast<Eigen::Index>(mu.size()));
  Eigen::VectorXi r = g.matrix * v;
  return Weight(r.data(), r.data() + r.size());
}

namespace {

std::vector<int> flat(const Eigen::MatrixXi& m) {
  return std::vector<int>(m.data(), m.data() + m.size());
}

Eigen::MatrixXi generator(const RootSystemData& phi, int i) {
  // column j of s_i is s_i applied to omega_j
  Eigen::MatrixXi s = Eigen::MatrixXi::Identity(phi.n, phi.n);
  for (int j = 0; j < phi.n; ++j) s(j, i) -= phi.cartan(i, j);
  return s;
}

}  // namespace

std::vector<GroupElement> weyl_group(const RootSystemData& phi, std::size_t cap) {
  std::vector<GroupElement> out{{Eigen::MatrixXi::Identity(phi.n, phi.n), 1}};
  std::map<std::vector<int>, int> seen{{flat(out[0].matrix), 0}};
  std::vector<Eigen::MatrixXi> gens;
  for (int i = 0; i < phi.n; ++i) gens.push_back(generator(phi, i));
  for (size_t h = 0; h < out.size(); ++h)
    for (const auto& s : gens) {
      Eigen::MatrixXi m = s * out[h].matrix;
      if (seen.emplace(flat(m), static_cast<int>(out.size())).second) {
        if (out.size() >= cap) throw CapExceeded("Weyl group exceeds cap");
        out.push_back({m, -out[h].sign});
      }
    }
  return out;
}

std::set<Weight> orbit(const RootSystemData& phi, const Weight& lambda, std::size_t cap) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight mu = todo.back();
    todo.pop_back();
    for (int i = 1; i <= phi.n; ++i) {
      Weight nu = reflect(phi, i, mu);
      if (seen.insert(nu).second) {
        if (seen.size() > cap) throw CapExceeded("orbit exceeds cap");
        todo.push_back(nu);
      }
    }
  }
  return seen;
}

LaurentPoly alternant(const RootSystemData& phi, const Weight& mu, std::size_t cap) {
  LaurentPoly a;
  for (const auto& g : weyl_group(phi, cap)) a.add(apply(g, mu), g.sign);
  return a;
}

bool bialternant_check(const RootSystemData& phi, const Weight& lambda, const LaurentPoly& x,
                       std::size_t cap) {
  Weight lr = lambda;
  for (int i = 0; i < phi.n; ++i) lr[i] += phi.rho[i];
  return alternant(phi, phi.rho, cap) * x == alternant(phi, lr, cap);
}

bool w_invariant(const RootSystemData& phi, const LaurentPoly& x) {
  for (int i = 1; i <= phi.n; ++i) {
    LaurentPoly y;
    for (const auto& [w, c] : x.terms()) y.add(reflect(phi, i, w), c);
    if (!(y == x)) return false;
  }
  return true;
}

bool is_symmetric_unimodal(const QPolynomial& p) {
  const auto& c = p.coeffs();
  const int d = p.degree();
  for (int i = 0; i <= d; ++i)
    if (c[i] != c[d - i]) return false;
  for (int i = 1; 2 * i <= d; ++i)
    if (c[i] < c[i - 1]) return false;
  return true;
}

std::vector<Weight> poset_weights(const ColoredDigraph& g, int n) {
  const int V = g.size();
  std::vector<Weight> wt(V, Weight(n, 0));
  for (int color = 1; color <= n; ++color) {
    ColoredDigraph sub;
    for (int v = 0; v < V; ++v) sub.add_vertex(g.coord(v));
    for (const auto& e : g.edges())
      if (e.color == color) sub.add_edge(e.from, e.to, e.color);
    std::vector<int> r;
    try {
      r = rank_function(sub);
    } catch (const NotRanked& ex) {
      throw UnrankedComponent("color " + std::to_string(color) + ": " + ex.what());
    }
    std::vector<int> comp(V, -1), len;
    for (int v = 0; v < V; ++v) {
      if (comp[v] >= 0) continue;
      int id = static_cast<int>(len.size());
      len.push_back(0);
      std::vector<int> q{v};
      comp[v] = id;
      for (size_t h = 0; h < q.size(); ++h) {
        int x = q[h];
        len[id] = std::max(len[id], r[x]);
        auto visit = [&](int y) {
          if (comp[y] < 0) { comp[y] = id; q.push_back(y); }
        };
        for (int e : sub.out_edges(x)) visit(sub.edge(e).to);
        for (int e : sub.in_edges(x)) visit(sub.edge(e).from);
      }
    }
    for (int v = 0; v < V; ++v) wt[v][color - 1] = 2 * r[v] - len[comp[v]];
  }
  return wt;
}

bool is_structured(const ColoredDigraph& g, const RootSystemData& phi) {
  std::vector<Weight> wt;
  try {
    wt = poset_weights(g, phi.n);
  } catch (const UnrankedComponent&) {
    return false;
  }
  for (const auto& e : g.edges()) {
    if (e.color > phi.n) return false;
    Weight a = phi.alpha(e.color);
    for (int j = 0; j < phi.n; ++j)
      if (wt[e.from][j] + a[j] != wt[e.to][j]) return false;
  }
  return true;
}

LaurentPoly wgf(const ColoredDigraph& g, int n) {
  LaurentPoly p;
  for (const auto& w : poset_weights(g, n)) p.add(w, 1);
  return p;
}

QPolynomial rgf(const DiamondLattice& L) {
  QPolynomial p;
  for (int r : L.ranks()) p += QPolynomial::monomial(r);
  return p;
}

QPolynomial qbinomial(int m, int k) {
  if (k < 0 || k > m) return {};
  // q-Pascal: [m,k] = [m-1,k-1] + q^k [m-1,k]
  std::vector<std::vector<QPolynomial>> t(m + 1, std::vector<QPolynomial>(m + 1));
  for (int a = 0; a <= m; ++a) {
    t[a][0] = t[a][a] = QPolynomial::constant(1);
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + QPolynomial::monomial(b) * t[a - 1][b];
  }
  return t[m][k];
}

QPolynomial closed_rgf_b(int n) {
  QPolynomial p = QPolynomial::constant(1);
  for (int i = 1; i <= n; ++i) p *= QPolynomial::constant(1) + QPolynomial::monomial(i);
  return p;
}

QPolynomial closed_rgf_c(int n, int k) {
  auto one_minus = [](int d) { return QPolynomial::constant(1) - QPolynomial::monomial(d); };
  return (one_minus(2 * n + 2 - 2 * k) * qbinomial(2 * n + 1, k)).divide_exact(one_minus(2 * n + 2 - k));
}

BigInt closed_card_c(int n, int k) {
  BigInt b = 1;
  for (int i = 0; i < k; ++i) b = b * (2 * n + 1 - i) / (i + 1);
  BigInt num = BigInt(2 * n + 2 - 2 * k) * b;
  if (num % (2 * n + 2 - k) != 0) throw InexactDivision("card formula is not integral");
  return num / (2 * n + 2 - k);
}

QPolynomial product_rgf(const RootSystemData& phi, const Weight& lambda) {
  Weight lr = lambda;
  for (int i = 0; i < phi.n; ++i) lr[i] += phi.rho[i];
  QPolynomial num = QPolynomial::constant(1), den = QPolynomial::constant(1);
  for (const auto& a : phi.positive_euclid2) {
    num *= QPolynomial::constant(1) - QPolynomial::monomial(pairing(phi, lr, a));
    den *= QPolynomial::constant(1) - QPolynomial::monomial(pairing(phi, phi.rho, a));
  }
  return num.divide_exact(den);
}

int product_length(const RootSystemData& phi, const Weight& lambda) {
  int s = 0;
  for (const auto& a : phi.positive_euclid2) s += pairing(phi, lambda, a);
  return s;
}

}  // namespace dcl::weyl
