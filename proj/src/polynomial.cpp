#include "dcl/polynomial.hpp"

#include <sstream>

#include "dcl/digraph.hpp"
#include "dcl/errors.hpp"

namespace dcl {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::monomial(int degree, BigInt c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return QPolynomial(std::move(v));
}

BigInt QPolynomial::coeff(int d) const { return d >= 0 && d <= degree() ? c_[d] : BigInt(0); }

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& d) const {
  if (d.is_zero()) throw InexactDivision("division by zero polynomial");
  std::vector<BigInt> rem = c_;
  if (degree() < d.degree()) {
    if (is_zero()) return {};
    throw InexactDivision("divisor has larger degree");
  }
  std::vector<BigInt> quo(degree() - d.degree() + 1);
  const BigInt& lead = d.c_.back();
  for (int i = degree() - d.degree(); i >= 0; --i) {
    const BigInt& top = rem[i + d.degree()];
    if (top % lead != 0) throw InexactDivision("non-integral quotient");
    BigInt q = top / lead;
    quo[i] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= q * d.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw InexactDivision("nonzero remainder");
  return QPolynomial(std::move(quo));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    if (c_[d] == 0) continue;
    BigInt a = c_[d];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    os << a;
    if (d == 1) os << " q";
    if (d > 1) os << " q^" << d;
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::monomial(const Weight& w, BigInt c) {
  LaurentPoly p;
  p.add(w, c);
  return p;
}

void LaurentPoly::add(const Weight& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BigInt LaurentPoly::coeff(const Weight& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [w, c] : o.t_) r.add(w, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [a, x] : t_)
    for (const auto& [b, y] : o.t_) {
      Weight w(a.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = a[i] + b[i];
      r.add(w, x * y);
    }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    os << c << " * z^(" << join_ints(w) << ")";
    first = false;
  }
  return os.str();
}

}  // namespace dcl
