#include "hitchin/spectral.hpp"

#include <stdexcept>

#include "hitchin/errors.hpp"
#include "hitchin/poly_algorithms.hpp"

namespace hitchin {

const char* to_string(Integrality v) {
  switch (v) {
    case Integrality::yes:
      return "yes";
    case Integrality::no:
      return "no";
    case Integrality::undecided:
      return "undecided";
  }
  return "unknown";
}

Section discriminant_section(const HitchinTuple& s) {
  const int r = s.rank();
  if (r < 2) throw DomainError("no branch data: rank 1 spectral cover is an isomorphism");
  const int twist = s.t() * r * (r - 1);
  Poly disc = discriminant(s.spectral_polynomial());
  if (!disc.is_zero() && disc.degree() > twist) throw std::logic_error("discriminant breaks its degree bound");
  return Section(twist, std::move(disc));
}

SmoothnessVerdict smooth_locus(const HitchinTuple& s) {
  const Section disc = discriminant_section(s);
  if (disc.is_zero()) return {false, "non-reduced discriminant: identically zero"};
  if (auto failure = genericity_failure(disc)) return {false, "discriminant has a " + *failure};
  return {true, std::nullopt};
}

bool smooth_locus_check(const HitchinTuple& s) { return smooth_locus(s).smooth; }

namespace {

LambdaPoly lambda_power(int q) { return LambdaPoly::monomial(Poly(Rational(1)), q); }

// lambda^{q d} - u^d = (lambda^q - u) * sum_j lambda^{q(d-1-j)} u^j
std::vector<LambdaPoly> power_difference_factors(const Poly& u, int q, int d) {
  LambdaPoly first = lambda_power(q) - LambdaPoly(u);
  LambdaPoly second;
  Poly u_power(Rational(1));
  for (int j = 0; j < d; ++j) {
    second += LambdaPoly::monomial(u_power, q * (d - 1 - j));
    u_power *= u;
  }
  return {std::move(first), std::move(second)};
}

}  // namespace

IntegralityVerdict cyclic_integrality(int t, int r, const Section& s) {
  if (t < 1 || r < 1) throw InputError("cyclic integrality needs t >= 1 and r >= 1");
  if (s.twist() != t * r) throw InputError("cyclic determinant must be a section of O(t r)");
  if (s.is_zero()) throw std::domain_error("cyclic integrality of the zero section");
  if (r == 1) return {Integrality::yes, "linear in lambda", {}};

  if (auto e = eisenstein_applies(s.rep()); e.applies)
    return {Integrality::yes, "Eisenstein at x = " + to_string(*e.witness_root) + " on the first chart", {}};
  if (auto e = eisenstein_applies(flip_chart(s)); e.applies)
    return {Integrality::yes, "Eisenstein at z = " + to_string(*e.witness_root) + " on the second chart", {}};
  if (is_generic(s)) return {Integrality::yes, "s has distinct zeros on P^1", {}};

  const LambdaPoly target = lambda_power(r) - LambdaPoly(s.rep());
  for (int d = 2; d <= r; ++d) {
    if (r % d != 0) continue;
    const auto root = exact_root(s.rep(), static_cast<unsigned>(d));
    if (!root) continue;
    auto factors = power_difference_factors(*root, r / d, d);
    if (factors[0] * factors[1] != target) throw std::logic_error("power-difference certificate does not multiply out");
    return {Integrality::no, "s is a " + std::to_string(d) + "-th power over Q", std::move(factors)};
  }
  return {Integrality::undecided, "no certificate either way", {}};
}

GenusData genus_formula(int t, int r) {
  if (t < 1 || r < 1) throw InputError("genus formula needs t >= 1 and r >= 1");
  const int euler = -t * r * (r - 1) / 2 + r;
  return {euler, 1 - euler};
}

int genus_hurwitz_cyclic(int t, int r) {
  if (t < 1 || r < 2) throw InputError("Hurwitz count needs t >= 1 and r >= 2");
  const int branch_total = t * r * (r - 1);  // t r points, each contributing r - 1
  const int twice_genus_minus_two = branch_total - 2 * r;
  return twice_genus_minus_two / 2 + 1;
}

namespace {

IntegralityVerdict tuple_integrality(const HitchinTuple& s) {
  const int r = s.rank();
  if (s.is_cyclic()) {
    const Section& last = s.coefficient(r);
    if (last.is_zero())
      return {Integrality::no, "nilpotent cone: lambda^r", {lambda_power(1), lambda_power(r - 1)}};
    return cyclic_integrality(s.t(), r, Section(last.twist(), -last.rep()));
  }
  if (r == 2) {
    // lambda^2 + s1 lambda + s2 = (lambda + s1/2)^2 - (s1^2/4 - s2)
    const Poly half = scale(s.coefficient(1).rep(), Rational(1, 2));
    const Section shifted(2 * s.t(), half * half - s.coefficient(2).rep());
    if (shifted.is_zero())
      return {Integrality::no, "perfect square", {LambdaPoly{half, Poly(Rational(1))}, LambdaPoly{half, Poly(Rational(1))}}};
    IntegralityVerdict v = cyclic_integrality(s.t(), 2, shifted);
    v.reason += " (after completing the square)";
    for (auto& f : v.certificate) f = f.evaluate(LambdaPoly{half, Poly(Rational(1))});
    return v;
  }
  return {Integrality::undecided, "integrality is only certified for cyclic or rank-2 tuples", {}};
}

}  // namespace

SpectralReport spectral_report(const HitchinTuple& s) {
  const int r = s.rank();
  const int t = s.t();
  SpectralReport report{t, r, discriminant_section(s), false, false, std::nullopt, Integrality::undecided, {}, {}, 0, 0, {}};
  report.discriminant_degenerate = report.discriminant.is_zero();
  const SmoothnessVerdict smooth = smooth_locus(s);
  report.is_smooth_locus = smooth.smooth;
  report.smoothness_diagnostic = smooth.diagnostic;

  IntegralityVerdict integral = tuple_integrality(s);
  report.is_integral = integral.verdict;
  report.integrality_reason = std::move(integral.reason);
  report.integrality_certificate = std::move(integral.certificate);

  const GenusData g = genus_formula(t, r);
  report.euler_char = g.euler_char;
  report.genus = g.genus;

  if (report.is_smooth_locus) {
    report.ramification.push_back({2, t * r * (r - 1)});
  } else if (s.is_cyclic() && !s.coefficient(r).is_zero() && is_generic(s.coefficient(r))) {
    report.ramification.push_back({r, t * r});
  }
  return report;
}

}  // namespace hitchin
