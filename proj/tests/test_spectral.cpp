#include <doctest.h>

#include "hitchin/errors.hpp"
#include "hitchin/poly_algorithms.hpp"
#include "hitchin/spectral.hpp"
#include "oracles.hpp"

using namespace hitchin;

namespace {

const Poly x = poly_x();
Poly c(long v) { return Poly(Rational(v)); }

HitchinTuple cyclic(int t, int r, const Poly& s) {
  std::vector<Section> coeffs;
  for (int i = 1; i < r; ++i) coeffs.push_back(Section::zero(t * i));
  coeffs.push_back(Section(t * r, -s));
  return HitchinTuple(t, coeffs);
}

// A degree-k polynomial with k distinct rational roots.
Poly split(int k, int offset = 0) {
  Poly p = c(1);
  for (int i = 0; i < k; ++i) p *= x - c(i + offset);
  return p;
}

LambdaPoly product(const std::vector<LambdaPoly>& factors) {
  LambdaPoly p(Poly(Rational(1)));
  for (const LambdaPoly& f : factors) p *= f;
  return p;
}

HitchinTuple flip_all(const HitchinTuple& s) {
  std::vector<Section> out;
  for (const Section& sec : s.coefficients()) out.push_back(flipped(sec));
  return HitchinTuple(s.t(), out);
}

}  // namespace

TEST_CASE("discriminant examples") {
  oracle::Rng rng(301);
  const Poly s2 = rng.poly_of_degree(4);
  CHECK(discriminant_section(cyclic(2, 2, s2)) == Section(4, scale(s2, Rational(4))));

  const Poly s3 = rng.poly_of_degree(6);
  const Poly d3 = discriminant_section(cyclic(2, 3, s3)).rep();
  CHECK((d3 == scale(s3 * s3, Rational(27)) || d3 == scale(s3 * s3, Rational(-27))));

  const Section zero = discriminant_section(HitchinTuple(1, {Section::zero(1), Section::zero(2), Section::zero(3)}));
  CHECK(zero.is_zero());
  CHECK(zero.twist() == 6);
  CHECK(spectral_report(HitchinTuple(1, {Section::zero(1), Section::zero(2)})).discriminant_degenerate);

  CHECK_THROWS_AS(discriminant_section(HitchinTuple(1, {Section(1, x)})), DomainError);
}

TEST_CASE("cyclic discriminant is a constant multiple of s^(r-1)") {
  oracle::Rng rng(303);
  for (int r = 2; r <= 6; ++r)
    for (int i = 0; i < 8; ++i) {
      const int t = rng.integer(1, 2);
      const Poly s = rng.poly_of_degree(rng.integer(0, t * r));
      Rational r_to_r = 1;
      for (int k = 0; k < r; ++k) r_to_r *= r;
      const Poly expected = scale(pow(s, static_cast<unsigned>(r - 1)), r_to_r);
      const Poly d = discriminant_section(cyclic(t, r, s)).rep();
      CHECK((d == expected || d == -expected));
    }
}

TEST_CASE("discriminant matches closed forms in ranks 2 and 3") {
  oracle::Rng rng(305);
  for (int i = 0; i < 40; ++i) {
    const HitchinTuple q = oracle::random_tuple(rng, 2, rng.integer(1, 3));
    const Poly a = q.coefficient(1).rep(), b = q.coefficient(2).rep();
    CHECK(discriminant_section(q).rep() == a * a - scale(b, Rational(4)));

    const HitchinTuple cu = oracle::random_tuple(rng, 3, rng.integer(1, 2));
    const Poly p = cu.coefficient(1).rep(), m = cu.coefficient(2).rep(), n = cu.coefficient(3).rep();
    const Poly expected = p * p * m * m - scale(m * m * m, Rational(4)) - scale(p * p * p * n, Rational(4)) -
                          scale(n * n, Rational(27)) + scale(p * m * n, Rational(18));
    CHECK(discriminant_section(cu).rep() == expected);
  }
}

TEST_CASE("smooth locus") {
  CHECK(smooth_locus_check(cyclic(2, 2, split(4))));
  CHECK(smooth_locus_check(cyclic(2, 2, split(3))));  // simple zero at infinity
  CHECK_FALSE(smooth_locus_check(cyclic(2, 2, split(2))));
  for (int r = 3; r <= 6; ++r) CHECK_FALSE(smooth_locus_check(cyclic(1, r, split(r))));
  CHECK_FALSE(smooth_locus_check(cyclic(2, 2, x * x * (x - c(1)) * (x - c(2)))));
  const SmoothnessVerdict v = smooth_locus(cyclic(2, 2, x * x * (x - c(1)) * (x - c(2))));
  REQUIRE(v.diagnostic);
  CHECK(v.diagnostic->find("repeated") != std::string::npos);
  CHECK_FALSE(smooth_locus_check(HitchinTuple(1, {Section::zero(1), Section::zero(2)})));
}

TEST_CASE("smoothness is invariant under chart flip") {
  oracle::Rng rng(307);
  int smooth = 0;
  for (int i = 0; i < 100; ++i) {
    const HitchinTuple s = oracle::random_tuple(rng, rng.integer(2, 3), rng.integer(1, 2));
    const bool a = smooth_locus_check(s);
    CHECK(a == smooth_locus_check(flip_all(s)));
    smooth += a;
  }
  CHECK(smooth > 0);
}

TEST_CASE("integrality examples") {
  const IntegralityVerdict quartic = cyclic_integrality(2, 2, Section(4, split(4)));
  CHECK(quartic.verdict == Integrality::yes);
  CHECK(quartic.certificate.empty());

  const IntegralityVerdict square = cyclic_integrality(1, 2, Section(2, x * x));
  CHECK(square.verdict == Integrality::no);
  REQUIRE(square.certificate.size() == 2);
  CHECK(product(square.certificate) == LambdaPoly{-(x * x), Poly{}, c(1)});
  CHECK(square.certificate[0] == LambdaPoly{-x, c(1)});

  const Poly octic = (x * x + c(1)) * (x * x + c(2)) * (x * x + c(3)) * (x * x + c(5));
  const IntegralityVerdict generic = cyclic_integrality(2, 4, Section(8, octic));
  CHECK(generic.verdict == Integrality::yes);
  CHECK(generic.reason.find("distinct zeros") != std::string::npos);

  CHECK(cyclic_integrality(3, 1, Section(3, x)).verdict == Integrality::yes);
  CHECK_THROWS_AS(cyclic_integrality(2, 2, Section(3, x)), InputError);
  CHECK_THROWS_AS(cyclic_integrality(2, 2, Section::zero(4)), std::domain_error);
}

TEST_CASE("perfect powers are certified reducible") {
  oracle::Rng rng(311);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.integer(2, 3);
    const int q = rng.integer(1, 2);
    const int r = d * q;
    const Poly u = rng.poly_of_degree(rng.integer(0, 2));
    const Poly s = pow(u, static_cast<unsigned>(d));
    const int t = (s.degree() + r - 1) / r + 1;
    const IntegralityVerdict v = cyclic_integrality(t, r, Section(t * r, s));
    CHECK(v.verdict == Integrality::no);
    CHECK(product(v.certificate) == LambdaPoly::monomial(c(1), r) - LambdaPoly(s));
    for (const LambdaPoly& f : v.certificate) CHECK(f.degree() >= 1);
  }
}

TEST_CASE("Eisenstein applies on the second chart") {
  // all finite zeros double, but a simple zero at infinity
  const IntegralityVerdict v = cyclic_integrality(3, 3, Section(9, pow(x * x + c(1), 4)));
  CHECK(v.verdict == Integrality::yes);
  CHECK(v.reason.find("second chart") != std::string::npos);
}

TEST_CASE("undecided integrality is reported, not guessed") {
  // s = (x^2+1)^2 (x^2+2)^2 on O(8), r = 4: square of a non-square, only
  // the d = 2 test fires
  const Poly u = (x * x + c(1)) * (x * x + c(2));
  CHECK(cyclic_integrality(2, 4, Section(8, u * u)).verdict == Integrality::no);
  // r = 3 with s a square: no cube root, no simple zero anywhere
  const IntegralityVerdict v = cyclic_integrality(2, 3, Section(6, pow(x * x + c(1), 2) * (x * x + c(3))));
  CHECK(v.verdict == Integrality::undecided);
}

TEST_CASE("random generic sections give integral curves") {
  oracle::Rng rng(313);
  for (int t = 2; t <= 3; ++t)
    for (int r = 2; r <= 4; ++r)
      for (int i = 0; i < 10; ++i) {
        Poly s = split(t * r - 1, rng.integer(-3, 3));
        s = scale(s, rng.nonzero_rational());
        REQUIRE(is_generic(Section(t * r, s)));
        CHECK(cyclic_integrality(t, r, Section(t * r, s)).verdict == Integrality::yes);
      }
}

TEST_CASE("genus formulas") {
  CHECK(genus_formula(2, 2).genus == 1);
  CHECK(genus_formula(2, 2).euler_char == 0);
  CHECK(genus_formula(2, 4).genus == 9);
  CHECK(genus_formula(1, 1).genus == 0);
  CHECK(genus_hurwitz_cyclic(2, 4) == 9);
  CHECK(genus_hurwitz_cyclic(2, 2) == 1);
  CHECK(genus_hurwitz_cyclic(3, 2) == 2);
  for (int r = 2; r <= 12; ++r)
    for (int t = 1; t <= 8; ++t) {
      CHECK(genus_formula(t, r).genus == genus_hurwitz_cyclic(t, r));
      // Riemann-Hurwitz with t r points of full ramification
      CHECK(2 * genus_formula(t, r).genus - 2 == r * (0 - 2) + t * r * (r - 1));
    }
}

TEST_CASE("spectral reports") {
  const SpectralReport smooth = spectral_report(cyclic(2, 2, split(4)));
  CHECK(smooth.is_smooth_locus);
  CHECK(smooth.is_integral == Integrality::yes);
  CHECK(smooth.genus == 1);
  REQUIRE(smooth.ramification.size() == 1);
  CHECK(smooth.ramification[0].multiplicity == 2);
  CHECK(smooth.ramification[0].count == 4);

  const SpectralReport cyc = spectral_report(cyclic(2, 4, split(8)));
  CHECK_FALSE(cyc.is_smooth_locus);
  CHECK(cyc.is_integral == Integrality::yes);
  CHECK(cyc.genus == 9);
  REQUIRE(cyc.ramification.size() == 1);
  CHECK(cyc.ramification[0].multiplicity == 4);
  CHECK(cyc.ramification[0].count == 8);

  const SpectralReport nil = spectral_report(HitchinTuple(2, {Section::zero(2), Section::zero(4), Section::zero(6)}));
  CHECK(nil.discriminant_degenerate);
  CHECK(nil.is_integral == Integrality::no);
  CHECK(product(nil.integrality_certificate) == LambdaPoly::monomial(c(1), 3));

  // lambda^2 + 2x lambda + (x^2 - 1) = (lambda + x - 1)(lambda + x + 1)
  const SpectralReport shifted = spectral_report(HitchinTuple(1, {Section(1, scale(x, Rational(2))), Section(2, x * x - c(1))}));
  CHECK(shifted.is_integral == Integrality::no);
  CHECK(product(shifted.integrality_certificate) == LambdaPoly{x * x - c(1), scale(x, Rational(2)), c(1)});

  const SpectralReport square = spectral_report(HitchinTuple(1, {Section(1, scale(x, Rational(2))), Section(2, x * x)}));
  CHECK(square.is_integral == Integrality::no);
  CHECK(product(square.integrality_certificate) == LambdaPoly{x * x, scale(x, Rational(2)), c(1)});

  const SpectralReport general = spectral_report(HitchinTuple(1, {Section(1, x), Section(2, x), Section(3, x)}));
  CHECK(general.is_integral == Integrality::undecided);
}
