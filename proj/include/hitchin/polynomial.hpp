#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "hitchin/rational.hpp"

namespace hitchin {

/// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Dense univariate polynomial over a commutative ring `Scalar`.
///
/// Coefficient `i` multiplies the i-th power of the indeterminate. The
/// coefficient vector never carries a zero leading entry, so the zero
/// polynomial is the empty vector. Nesting is intended:
/// `Polynomial<Polynomial<Rational>>` is the ring Q[x][lambda].
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  Polynomial(Scalar c) {  // NOLINT(google-explicit-constructor): ring embedding
    if (!is_zero_scalar(c)) coeffs_.push_back(std::move(c));
  }
  explicit Polynomial(int c) : Polynomial(Scalar(c)) {}
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  /// c * t^power.
  static Polynomial monomial(Scalar c, int power) {
    if (is_zero_scalar(c)) return {};
    std::vector<Scalar> v(static_cast<std::size_t>(power) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^i; zero beyond the degree.
  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Horner evaluation; `Value` may be any ring that Scalar embeds into.
  template <typename Value>
  Value evaluate(const Value& at) const {
    Value acc = Value(Scalar(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Value(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_scalar(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const Scalar& c = p.coeffs_[static_cast<std::size_t>(i)];
      if (is_zero_scalar(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (i > 0) os << "*t^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }

  static bool is_zero_scalar(const Scalar& c) {
    if constexpr (requires { c.is_zero(); })
      return c.is_zero();
    else
      return c == 0;
  }

  std::vector<Scalar> coeffs_;
};

/// Q[x]: chart representatives of sections.
using Poly = Polynomial<Rational>;
/// Q[x][lambda]: spectral polynomials.
using LambdaPoly = Polynomial<Poly>;

inline bool is_zero(const Rational& q) { return q == 0; }
template <typename S>
bool is_zero(const Polynomial<S>& p) {
  return p.is_zero();
}

/// The indeterminate x of Q[x].
inline Poly poly_x() { return Poly::monomial(Rational(1), 1); }

/// Formal derivative.
template <typename S>
Polynomial<S> derivative(const Polynomial<S>& p) {
  if (p.degree() <= 0) return {};
  std::vector<S> out;
  out.reserve(p.coeffs().size() - 1);
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeffs()[static_cast<std::size_t>(i)] * S(i));
  return Polynomial<S>(std::move(out));
}

template <typename S>
Polynomial<S> pow(const Polynomial<S>& base, unsigned exponent) {
  Polynomial<S> result(S(1));
  Polynomial<S> b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

/// Multiplication by a scalar of the coefficient ring.
template <typename S>
Polynomial<S> scale(const Polynomial<S>& p, const S& c) {
  std::vector<S> out(p.coeffs());
  for (auto& v : out) v = v * c;
  return Polynomial<S>(std::move(out));
}

}  // namespace hitchin
