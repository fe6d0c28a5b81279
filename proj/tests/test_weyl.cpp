#include <doctest.h>

#include "dcl/errors.hpp"
#include "dcl/minuscule_b.hpp"
#include "dcl/symplectic.hpp"
#include "dcl/weyl.hpp"

using namespace dcl;
using namespace dcl::weyl;

TEST_SUITE("weyl") {
  TEST_CASE("polynomials") {
    auto p = QPolynomial::constant(1) + QPolynomial::monomial(1);
    CHECK((p * p).to_string() == "1 + 2 q + 1 q^2");
    CHECK((p * p).divide_exact(p) == p);
    CHECK_THROWS_AS(QPolynomial::monomial(2).divide_exact(QPolynomial::constant(1) + QPolynomial::monomial(1) +
                                                          QPolynomial::monomial(1)),
                    InexactDivision);
    CHECK(qbinomial(4, 2).coeffs() == std::vector<BigInt>{1, 1, 2, 1, 1});
    CHECK((p * p).at_one() == 4);
  }

  TEST_CASE("root data") {
    auto B = root_data(Family::B, 3);
    CHECK(B.alpha(3) == Weight{0, -1, 2});
    CHECK(B.alpha(1) == Weight{2, -1, 0});
    auto C = root_data(Family::C, 3);
    CHECK(C.alpha(3) == Weight{0, -2, 2});
    CHECK(C.alpha(2) == Weight{-1, 2, -1});
    CHECK(reflect(B, 1, {1, 0, 0}) == Weight{-1, 1, 0});
    CHECK(weyl_group(B).size() == 48);
    CHECK(weyl_group(root_data(Family::C, 2)).size() == 8);
    CHECK(B.positive_euclid2.size() == 9);
  }

  TEST_CASE("Z(2) weights") {
    auto Z = minuscule::z_lattice(2);
    auto wt = poset_weights(Z.diagram(), 2);
    std::vector<Weight> by_rank(4);
    for (int v = 0; v < Z.size(); ++v) by_rank[Z.rank(v)] = wt[v];
    CHECK(by_rank == std::vector<Weight>{{0, -1}, {-1, 1}, {1, -1}, {0, 1}});
    CHECK(is_structured(Z.diagram(), root_data(Family::B, 2)));
  }

  TEST_CASE("bialternants") {
    for (int n = 2; n <= 4; ++n) {
      auto B = root_data(Family::B, n);
      auto w = wgf(minuscule::z_lattice(n).diagram(), n);
      CHECK(bialternant_check(B, omega(n, n), w));
      CHECK(w_invariant(B, w));
      CHECK(orbit(B, omega(n, n)).size() == (1u << n));
    }
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= n; ++k) {
        auto C = root_data(Family::C, n);
        auto w = wgf(symplectic::dec_lattice(k, n).diagram(), n);
        CHECK(bialternant_check(C, omega(n, k), w));
      }
    // a non-invariant sum must fail
    auto B2 = root_data(Family::B, 2);
    auto bad = LaurentPoly::monomial({0, 1});
    CHECK_FALSE(bialternant_check(B2, omega(2, 2), bad));
  }

  TEST_CASE("closed forms") {
    for (int n = 1; n <= 8; ++n) {
      auto B = root_data(Family::B, n);
      CHECK(product_rgf(B, omega(n, n)) == closed_rgf_b(n));
      CHECK(product_length(B, omega(n, n)) == n * (n + 1) / 2);
    }
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) {
        auto C = root_data(Family::C, n);
        CHECK(product_rgf(C, omega(n, k)) == closed_rgf_c(n, k));
        CHECK(closed_rgf_c(n, k).at_one() == closed_card_c(n, k));
        CHECK(product_length(C, omega(n, k)) == k * (2 * n - k));
        CHECK(is_symmetric_unimodal(closed_rgf_c(n, k)));
      }
    CHECK(closed_card_c(3, 2) == 14);
  }

  TEST_CASE("unranked color components are reported") {
    ColoredDigraph g;
    for (int i = 0; i < 3; ++i) g.add_vertex({i});
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 1);
    CHECK_THROWS_AS(poset_weights(g, 1), UnrankedComponent);
  }
}
