#pragma once

#include <utility>
#include <vector>

#include "hitchin/matrix.hpp"
#include "hitchin/p1_sections.hpp"

namespace hitchin {

/// Birkhoff-Grothendieck type O(m_1) + ... + O(m_r), m_1 >= ... >= m_r.
class BGType {
 public:
  /// Throws InputError when empty or not non-increasing.
  explicit BGType(std::vector<int> numbers);

  int rank() const { return static_cast<int>(m_.size()); }
  int degree() const;
  int operator[](int i) const { return m_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& numbers() const { return m_; }

  friend bool operator==(const BGType& a, const BGType& b) { return a.m_ == b.m_; }

 private:
  std::vector<int> m_;
};

/// mu(E) = deg E / rank E.
Rational slope(const BGType& bg);

/// Tuple (s_1, ..., s_r) in the Hitchin base; s_i is a section of O(t i).
class HitchinTuple {
 public:
  /// Throws InputError unless t >= 1, r >= 1 and every s_i has twist t i.
  HitchinTuple(int t, std::vector<Section> s);

  int t() const { return t_; }
  int rank() const { return static_cast<int>(s_.size()); }
  /// 1-based, matching s_1 .. s_r.
  const Section& coefficient(int i) const { return s_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Section>& coefficients() const { return s_; }

  /// lambda^r + s_1 lambda^{r-1} + ... + s_r on the first chart.
  LambdaPoly spectral_polynomial() const;
  /// True when s_1 = ... = s_{r-1} = 0, i.e. lambda^r + s_r.
  bool is_cyclic() const;

  friend bool operator==(const HitchinTuple& a, const HitchinTuple& b) { return a.t_ == b.t_ && a.s_ == b.s_; }

 private:
  int t_;
  std::vector<Section> s_;
};

/// Twisted endomorphism phi: E -> E(t) on P^1, entry (i, j) a section of
/// O(m_i - m_j + t) given by its first-chart polynomial.
class TwistedPair {
 public:
  /// Throws InputError on shape mismatch, t < 1, or an entry exceeding its
  /// degree bound (nonzero entries where the twist is negative included).
  TwistedPair(int t, BGType bg, PolyMatrix phi);

  int t() const { return t_; }
  int rank() const { return bg_.rank(); }
  const BGType& bg() const { return bg_; }
  const PolyMatrix& phi() const { return phi_; }

  int entry_twist(int i, int j) const { return bg_[i] - bg_[j] + t_; }
  Section entry(int i, int j) const { return Section(entry_twist(i, j), phi_(i, j)); }

 private:
  int t_;
  BGType bg_;
  PolyMatrix phi_;
};

/// (-1)^i tr(wedge^i phi) from power traces through the Newton determinant
/// tr(wedge^i phi) = det(N_i) / i!, where N_i has tr(phi^{k-j+1}) on and below
/// the diagonal and i-k on the superdiagonal of row k.
HitchinTuple char_coefficients_newton(const TwistedPair& pair);

/// Coefficients of det(lambda I - phi), expanded by cofactors over Q[x][lambda].
HitchinTuple char_coefficients_det(const TwistedPair& pair);

/// phi^r + s_1 phi^{r-1} + ... + s_r I == 0 over the first chart.
bool cayley_hamilton_check(const TwistedPair& pair);

/// Companion pair on O + O(-t) + ... + O(-(r-1)t): ones on the subdiagonal
/// and -s_r, ..., -s_1 down the last column.
TwistedPair companion(const HitchinTuple& s);

/// m_i <= m_{i+1} + t for every consecutive pair.
bool grothendieck_constraint(const BGType& bg, int t);

/// r^2 t + 1 + h^1(P^1, O(t)). Throws DomainError for t <= 0.
int nitsure_dimension(int r, int t);

/// Cyclic chain: u_i on the subdiagonal (i < r) and u_r in the top-right
/// corner. u_i is a section of O(m_{i+1} - m_i + t), u_r of O(m_1 - m_r + t).
class CyclicChain {
 public:
  /// Throws InputError when the twists of u do not match the slots of bg.
  CyclicChain(int t, BGType bg, std::vector<Section> u);

  int t() const { return t_; }
  int rank() const { return bg_.rank(); }
  const BGType& bg() const { return bg_; }
  /// 1-based.
  const Section& u(int i) const { return u_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Section>& sections() const { return u_; }

  /// Slot capacities m_{i+1} - m_i + t (i < r) and m_1 - m_r + t.
  static std::vector<int> slot_twists(const BGType& bg, int t);

  /// Characteristic polynomial lambda^r - u_1 ... u_r.
  TwistedPair to_pair() const;
  /// u_1 ... u_r as a section of O(tr).
  Section determinant_section() const;

 private:
  int t_;
  BGType bg_;
  std::vector<Section> u_;
};

/// A section of O(k) presented as unit * prod f_j^{e_j}. The factors are
/// taken to be irreducible over Q; this is not verified. unit = 0 with no
/// factors denotes the zero section.
struct FactoredSection {
  int twist = 0;
  Rational unit = 1;
  std::vector<std::pair<Poly, int>> factors;

  int finite_degree() const;
  int infinity_deficit() const { return twist - finite_degree(); }
  Section expand() const;
};

/// Distributes the factors of s over the chain slots so that the pair has
/// characteristic polynomial lambda^r - s. Each factor goes to the first slot
/// (in index order) with room, with backtracking; the unit rides in u_r.
/// Throws InputError if the constraint fails or the twist is not t r, and
/// DomainError("unpackable factorization") if no placement exists.
CyclicChain cyclic_chain_build(const BGType& bg, int t, const FactoredSection& s);

enum class ChainStability { stable, semistable_only, unstable };

struct InvariantSummand {
  int first;  // 1-based, inclusive
  int last;
  Rational slope;
};

struct ChainStabilityReport {
  ChainStability verdict;
  Rational slope;
  std::vector<InvariantSummand> invariant_summands;
};

/// Chain rules: with no vanishing u_i the pair is stable. A vanishing u_i
/// (i < r) makes O(m_1) + ... + O(m_i) invariant; a vanishing u_r makes every
/// tail O(m_j) + ... + O(m_r) invariant. A summand of slope above mu(E)
/// destabilizes; otherwise the verdict is semistable_only.
ChainStabilityReport analyze_chain_stability(const CyclicChain& chain);
ChainStability chain_stability(const CyclicChain& chain);

const char* to_string(ChainStability s);

}  // namespace hitchin
