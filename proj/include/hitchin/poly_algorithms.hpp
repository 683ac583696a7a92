#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hitchin/polynomial.hpp"

namespace hitchin {

/// Euclidean division in Q[x]. Throws std::domain_error on division by zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Scales to a monic polynomial (zero stays zero).
Poly make_monic(const Poly& a);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct SquarefreeTest {
  bool is_squarefree;
  Poly gcd_with_derivative;  // monic
};

/// Distinct-root test via gcd(a, a'). Throws std::domain_error for a = 0.
SquarefreeTest gcd_squarefree(const Poly& a);

/// Yun's algorithm: returns monic squarefree, pairwise coprime factors
/// f_1, ..., f_k with a = lc(a) * f_1 * f_2^2 * ... * f_k^k.
std::vector<Poly> squarefree_decomposition(const Poly& a);

struct RationalRoot {
  Rational value;
  int multiplicity;
};

/// All rational roots with multiplicities, ascending, by enumerating
/// divisors of the integerized constant and leading coefficients.
std::vector<RationalRoot> rational_roots(const Poly& a);

/// Multiplicity of `root` as a zero of a (0 when it is not a zero).
int root_multiplicity(const Poly& a, const Rational& root);

struct EisensteinWitness {
  bool applies;
  std::optional<Rational> witness_root;
};

/// True when s has a rational root of multiplicity exactly one; then
/// <x - x0> is an Eisenstein prime for lambda^r - s. The smallest such root
/// is returned as witness.
EisensteinWitness eisenstein_applies(const Poly& s);

/// The Sylvester matrix of f and g in lambda, f-rows first.
/// Size (deg f + deg g); entries in Q[x].
std::vector<std::vector<Poly>> sylvester_matrix(const LambdaPoly& f, const LambdaPoly& g);

/// Res_lambda(f, g) as the determinant of the Sylvester matrix.
/// Throws std::domain_error if either input is zero or both are constant in lambda.
Poly resultant(const LambdaPoly& f, const LambdaPoly& g);

/// (-1)^{d(d-1)/2} Res(f, f') / lc(f), for lambda-degree d >= 1.
Poly discriminant(const LambdaPoly& f);

/// Exact n-th root in Q[x] if one exists.
std::optional<Poly> exact_root(const Poly& a, unsigned n);

/// Exact n-th root of a rational, if one exists.
std::optional<Rational> exact_root(const Rational& q, unsigned n);

}  // namespace hitchin
