#include <doctest.h>

#include "hitchin/errors.hpp"
#include "hitchin/p1_sections.hpp"
#include "hitchin/poly_algorithms.hpp"
#include "oracles.hpp"

using namespace hitchin;

namespace {

const Poly x = poly_x();
Poly c(long v) { return Poly(Rational(v)); }

// z^k s(1/z) by direct substitution: coefficient of z^(k-i) is s_i.
Poly substitute(const Section& s) {
  Poly out;
  for (int i = 0; i <= s.rep().degree(); ++i) out += Poly::monomial(s.rep().coeff(i), s.twist() - i);
  return out;
}

}  // namespace

TEST_CASE("section construction") {
  CHECK_THROWS_AS(Section(1, x * x), InputError);
  CHECK(Section::zero(-3).is_zero());
  CHECK_THROWS_AS(Section(-1, c(1)), InputError);
  CHECK((Section(1, x) * Section(2, x * x)) == Section(3, x * x * x));
}

TEST_CASE("second chart") {
  CHECK(flip_chart(Section(2, x)) == x);
  CHECK(flip_chart(Section(3, c(1))) == pow(x, 3));
  CHECK(flip_chart(Section(4, pow(x, 4))) == c(1));
}

TEST_CASE("second chart matches substitution") {
  oracle::Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const int k = rng.integer(0, 8);
    const Section s = oracle::random_section(rng, k);
    CHECK(flip_chart(s) == substitute(s));
    CHECK(flipped(flipped(s)) == s);
  }
}

TEST_CASE("flip is multiplicative") {
  oracle::Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const Section a = oracle::random_section(rng, rng.integer(0, 4));
    const Section b = oracle::random_section(rng, rng.integer(0, 4));
    CHECK(flip_chart(a * b) == flip_chart(a) * flip_chart(b));
  }
}

TEST_CASE("zero profiles") {
  const ZeroProfile split = zero_profile(Section(4, x * (x - c(1)) * (x - c(2)) * (x - c(3))));
  CHECK(split.rational.size() == 4);
  CHECK(split.infinity_multiplicity == 0);
  CHECK(split.total_multiplicity() == 4);

  const ZeroProfile cubic = zero_profile(Section(4, pow(x, 3) - x));
  CHECK(cubic.rational.size() == 3);
  CHECK(cubic.infinity_multiplicity == 1);
  CHECK(cubic.total_multiplicity() == 4);
  CHECK(cubic.distinct_zero_count() == 4);

  const ZeroProfile square = zero_profile(Section(4, x * x));
  REQUIRE(square.rational.size() == 1);
  CHECK(square.rational[0].place == 0);
  CHECK(square.rational[0].multiplicity == 2);
  CHECK(square.infinity_multiplicity == 2);

  const ZeroProfile irrational = zero_profile(Section(5, pow(x * x + c(1), 2) * (x - c(4))));
  REQUIRE(irrational.irrational.size() == 1);
  CHECK(irrational.irrational[0].count == 2);
  CHECK(irrational.irrational[0].multiplicity == 2);
  CHECK(irrational.total_multiplicity() == 5);

  CHECK_THROWS_AS(zero_profile(Section::zero(3)), std::domain_error);
}

TEST_CASE("total zero count equals the twist") {
  oracle::Rng rng(107);
  for (int i = 0; i < 100; ++i) {
    const int k = rng.integer(0, 7);
    const Section s(k, rng.poly_of_degree(rng.integer(0, k)));
    CHECK(zero_profile(s).total_multiplicity() == k);
  }
}

TEST_CASE("genericity") {
  CHECK(is_generic(Section(4, pow(x, 3) - x)));
  CHECK_FALSE(is_generic(Section(4, x * x - c(1))));
  CHECK_FALSE(is_generic(Section(4, x * x * (x - c(1)) * (x + c(1)))));
  CHECK(genericity_failure(Section(4, x * x * (x - c(1)) * (x + c(1)))) == "repeated finite zero");
  CHECK_FALSE(is_generic(Section::zero(2)));
  CHECK(is_generic(Section(0, c(3))));
}

TEST_CASE("genericity is chart independent") {
  oracle::Rng rng(109);
  for (int i = 0; i < 100; ++i) {
    const int k = rng.integer(1, 6);
    const Section s(k, rng.poly_of_degree(rng.integer(k - 1, k)));
    CHECK(is_generic(s) == is_generic(flipped(s)));
  }
}
