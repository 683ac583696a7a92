#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitchin/polynomial.hpp"

namespace hitchin {

/// A global section of O(k) on P^1, stored by its first-chart polynomial.
///
/// The second-chart representative z^k rep(1/z) is always recomputed from
/// `rep`. A zero section is allowed for any k, including negative twists
/// (the only section those bundles have).
class Section {
 public:
  Section() = default;
  /// Throws InputError when deg(rep) > k, or k < 0 with rep nonzero.
  Section(int k, Poly rep);

  static Section zero(int k) { return Section(k, Poly{}); }
  static Section constant(int k, Rational c) { return Section(k, Poly(std::move(c))); }

  int twist() const { return k_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const Section& a, const Section& b) { return a.k_ == b.k_ && a.rep_ == b.rep_; }
  friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }

 private:
  int k_ = 0;
  Poly rep_;
};

/// Product of sections: twists add.
Section operator*(const Section& a, const Section& b);

/// Second-chart representative z^k s(1/z).
Poly flip_chart(const Section& s);

/// The section whose first chart is the second chart of `s`.
Section flipped(const Section& s);

struct FiniteZero {
  Rational place;
  int multiplicity;
};

/// Irrational finite zeros grouped by multiplicity: `count` distinct zeros,
/// each of multiplicity `multiplicity` (count = degree of a squarefree factor).
struct IrrationalZeroClass {
  int count;
  int multiplicity;
};

struct ZeroProfile {
  int infinity_multiplicity = 0;
  std::vector<FiniteZero> rational;
  std::vector<IrrationalZeroClass> irrational;

  int total_multiplicity() const;
  int distinct_zero_count() const;
};

/// Zeros of a nonzero section over P^1, including the point at infinity.
/// Throws std::domain_error for the zero section.
ZeroProfile zero_profile(const Section& s);

/// Why a section fails to have k distinct zeros, or nullopt when it has them.
std::optional<std::string> genericity_failure(const Section& s);

/// True iff all k zeros on P^1 are distinct: rep squarefree and at most one
/// zero at infinity. The zero section is not generic.
bool is_generic(const Section& s);

}  // namespace hitchin
