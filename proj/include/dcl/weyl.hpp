#pragma once

#include <Eigen/Dense>
#include <set>
#include <vector>

#include "dcl/lattice.hpp"
#include "dcl/polynomial.hpp"

namespace dcl::weyl {

enum class Family { B, C };

struct RootSystemData {
  Family family;
  int n;
  Eigen::MatrixXi cartan;   // a_ij = <alpha_i, alpha_j^vee>; row i is alpha_i over omega
  Weight rho;               // all ones
  // Euclidean realization, every coordinate doubled so that omega_n of B_n is integral
  Eigen::MatrixXi simple_euclid2;    // row i = 2 alpha_i
  Eigen::MatrixXi omega_euclid2;     // row i = 2 omega_i
  std::vector<Eigen::VectorXi> positive_euclid2;

  Weight alpha(int i) const;  // 1-based
};

RootSystemData root_data(Family f, int n);

// <mu, alpha^vee> for a positive root given in doubled Euclidean coordinates
int pairing(const RootSystemData& phi, const Weight& mu, const Eigen::VectorXi& root2);

struct GroupElement {
  Eigen::MatrixXi matrix;  // acts on omega-coordinate columns
  int sign;
};

Weight reflect(const RootSystemData& phi, int i, const Weight& mu);  // s_i, 1-based
Weight apply(const GroupElement& g, const Weight& mu);

std::vector<GroupElement> weyl_group(const RootSystemData& phi, std::size_t cap = 10000);
std::set<Weight> orbit(const RootSystemData& phi, const Weight& lambda, std::size_t cap = 10000);

LaurentPoly alternant(const RootSystemData& phi, const Weight& mu, std::size_t cap = 10000);
bool bialternant_check(const RootSystemData& phi, const Weight& lambda, const LaurentPoly& x,
                       std::size_t cap = 10000);
bool w_invariant(const RootSystemData& phi, const LaurentPoly& x);
bool is_symmetric_unimodal(const QPolynomial& p);

// Per-vertex rank-minus-depth in each color component. Throws UnrankedComponent.
std::vector<Weight> poset_weights(const ColoredDigraph& g, int n);
bool is_structured(const ColoredDigraph& g, const RootSystemData& phi);
LaurentPoly wgf(const ColoredDigraph& g, int n);
QPolynomial rgf(const DiamondLattice& L);

QPolynomial qbinomial(int m, int k);
QPolynomial closed_rgf_b(int n);
QPolynomial closed_rgf_c(int n, int k);
BigInt closed_card_c(int n, int k);
// quotient of products over positive roots, divided exactly
QPolynomial product_rgf(const RootSystemData& phi, const Weight& lambda);
int product_length(const RootSystemData& phi, const Weight& lambda);

Weight omega(int n, int k);  // k-th fundamental weight, 1-based

}  // namespace dcl::weyl
