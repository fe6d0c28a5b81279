#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace dcl {

using BigInt = boost::multiprecision::cpp_int;
using Weight = std::vector<int>;  // coefficients over the fundamental weights

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial monomial(int degree, BigInt c = 1);
  static QPolynomial constant(BigInt c) { return monomial(0, std::move(c)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt at_one() const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }
  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

  // Throws InexactDivision when d does not divide *this.
  QPolynomial divide_exact(const QPolynomial& d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

class LaurentPoly {
 public:
  static LaurentPoly monomial(const Weight& w, BigInt c = 1);

  void add(const Weight& w, const BigInt& c);
  BigInt coeff(const Weight& w) const;
  const std::map<Weight, BigInt>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  std::string to_string() const;

 private:
  std::map<Weight, BigInt> t_;
};

}  // namespace dcl
