#include "hitchin/p1_sections.hpp"

#include <sstream>
#include <stdexcept>

#include "hitchin/errors.hpp"
#include "hitchin/poly_algorithms.hpp"

namespace hitchin {

Section::Section(int k, Poly rep) : k_(k), rep_(std::move(rep)) {
  if (!rep_.is_zero() && rep_.degree() > k_) {
    std::ostringstream msg;
    msg << "section of O(" << k_ << ") has first-chart degree " << rep_.degree();
    throw InputError(msg.str());
  }
}

Section operator*(const Section& a, const Section& b) { return Section(a.twist() + b.twist(), a.rep() * b.rep()); }

Poly flip_chart(const Section& s) {
  if (s.is_zero()) return {};
  std::vector<Rational> rev(static_cast<std::size_t>(s.twist()) + 1, Rational(0));
  for (int i = 0; i <= s.rep().degree(); ++i)
    rev[static_cast<std::size_t>(s.twist() - i)] = s.rep().coeffs()[static_cast<std::size_t>(i)];
  return Poly(std::move(rev));
}

Section flipped(const Section& s) { return Section(s.twist(), flip_chart(s)); }

int ZeroProfile::total_multiplicity() const {
  int total = infinity_multiplicity;
  for (const auto& z : rational) total += z.multiplicity;
  for (const auto& c : irrational) total += c.count * c.multiplicity;
  return total;
}

int ZeroProfile::distinct_zero_count() const {
  int total = infinity_multiplicity > 0 ? 1 : 0;
  total += static_cast<int>(rational.size());
  for (const auto& c : irrational) total += c.count;
  return total;
}

ZeroProfile zero_profile(const Section& s) {
  if (s.is_zero()) throw std::domain_error("zero profile of the zero section");
  ZeroProfile profile;
  profile.infinity_multiplicity = s.twist() - s.rep().degree();

  Poly rest = s.rep();
  for (const auto& root : rational_roots(s.rep())) {
    profile.rational.push_back({root.value, root.multiplicity});
    const Poly linear{Rational(-root.value), Rational(1)};
    for (int i = 0; i < root.multiplicity; ++i) rest = divrem(rest, linear).first;
  }
  // what remains has no rational roots; split it by multiplicity
  const auto layers = squarefree_decomposition(rest);
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i].degree() > 0) profile.irrational.push_back({layers[i].degree(), static_cast<int>(i) + 1});
  return profile;
}

std::optional<std::string> genericity_failure(const Section& s) {
  if (s.is_zero()) return "zero section has no isolated zeros";
  const int at_infinity = s.twist() - s.rep().degree();
  if (at_infinity > 1) return "zero at infinity of multiplicity " + std::to_string(at_infinity);
  if (!gcd_squarefree(s.rep()).is_squarefree) return "repeated finite zero";
  return std::nullopt;
}

bool is_generic(const Section& s) { return !genericity_failure(s).has_value(); }

}  // namespace hitchin
