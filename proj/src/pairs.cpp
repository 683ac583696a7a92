#include "hitchin/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hitchin/errors.hpp"

namespace hitchin {

BGType::BGType(std::vector<int> numbers) : m_(std::move(numbers)) {
  if (m_.empty()) throw InputError("Birkhoff-Grothendieck type needs rank >= 1");
  if (!std::is_sorted(m_.begin(), m_.end(), std::greater<>()))
    throw InputError("Grothendieck numbers must be non-increasing");
}

int BGType::degree() const { return std::accumulate(m_.begin(), m_.end(), 0); }

Rational slope(const BGType& bg) {
  Rational mu(bg.degree(), bg.rank());
  mu.canonicalize();
  return mu;
}

HitchinTuple::HitchinTuple(int t, std::vector<Section> s) : t_(t), s_(std::move(s)) {
  if (t_ < 1) throw InputError("twist t must be positive");
  if (s_.empty()) throw InputError("Hitchin tuple needs rank >= 1");
  for (std::size_t i = 0; i < s_.size(); ++i)
    if (s_[i].twist() != t_ * static_cast<int>(i + 1))
      throw InputError("s_" + std::to_string(i + 1) + " must be a section of O(" +
                       std::to_string(t_ * static_cast<int>(i + 1)) + ")");
}

LambdaPoly HitchinTuple::spectral_polynomial() const {
  const int r = rank();
  std::vector<Poly> coeffs(static_cast<std::size_t>(r) + 1);
  coeffs[static_cast<std::size_t>(r)] = Poly(Rational(1));
  for (int i = 1; i <= r; ++i) coeffs[static_cast<std::size_t>(r - i)] = coefficient(i).rep();
  return LambdaPoly(std::move(coeffs));
}

bool HitchinTuple::is_cyclic() const {
  for (int i = 1; i < rank(); ++i)
    if (!coefficient(i).is_zero()) return false;
  return true;
}

TwistedPair::TwistedPair(int t, BGType bg, PolyMatrix phi) : t_(t), bg_(std::move(bg)), phi_(std::move(phi)) {
  if (t_ < 1) throw InputError("twist t must be positive");
  const int r = bg_.rank();
  if (phi_.rows() != r || phi_.cols() != r) throw InputError("phi must be rank x rank");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Poly& e = phi_(i, j);
      if (!e.is_zero() && e.degree() > entry_twist(i, j)) {
        std::ostringstream msg;
        msg << "phi(" << i << "," << j << ") exceeds the degree bound " << entry_twist(i, j);
        throw InputError(msg.str());
      }
    }
}

namespace {

Rational factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

// Wraps a computed characteristic coefficient; a violated degree bound means
// the arithmetic above is wrong, not the input.
Section coefficient_section(int twist, Poly rep) {
  if (!rep.is_zero() && rep.degree() > twist) throw std::logic_error("characteristic coefficient breaks its degree bound");
  return Section(twist, std::move(rep));
}

}  // namespace

HitchinTuple char_coefficients_newton(const TwistedPair& pair) {
  const int r = pair.rank();
  std::vector<Poly> power_traces(static_cast<std::size_t>(r) + 1);
  PolyMatrix power = pair.phi();
  for (int k = 1; k <= r; ++k) {
    if (k > 1) power = (power * pair.phi()).eval();
    power_traces[static_cast<std::size_t>(k)] = trace(power);
  }

  std::vector<Section> s;
  for (int i = 1; i <= r; ++i) {
    PolyMatrix newton = zero_matrix<Poly>(i, i);
    for (int row = 0; row < i; ++row) {
      for (int col = 0; col <= row; ++col) newton(row, col) = power_traces[static_cast<std::size_t>(row - col + 1)];
      if (row + 1 < i) newton(row, row + 1) = Poly(Rational(i - row - 1));
    }
    Poly wedge = scale(determinant_bareiss(newton), Rational(1 / factorial(i)));
    if (i % 2 == 1) wedge = -wedge;
    s.push_back(coefficient_section(pair.t() * i, std::move(wedge)));
  }
  return HitchinTuple(pair.t(), std::move(s));
}

HitchinTuple char_coefficients_det(const TwistedPair& pair) {
  const int r = pair.rank();
  LambdaMatrix shifted(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      shifted(i, j) = i == j ? LambdaPoly{-pair.phi()(i, j), Poly(Rational(1))} : LambdaPoly(Poly(-pair.phi()(i, j)));
  const LambdaPoly charpoly = determinant_laplace(shifted);

  std::vector<Section> s;
  for (int i = 1; i <= r; ++i) s.push_back(coefficient_section(pair.t() * i, charpoly.coeff(r - i)));
  return HitchinTuple(pair.t(), std::move(s));
}

bool cayley_hamilton_check(const TwistedPair& pair) {
  const HitchinTuple s = char_coefficients_det(pair);
  const int r = pair.rank();
  PolyMatrix acc = identity_matrix<Poly>(r);
  for (int i = 1; i <= r; ++i) {
    acc = (acc * pair.phi()).eval();
    for (int d = 0; d < r; ++d) acc(d, d) += s.coefficient(i).rep();
  }
  return is_zero_matrix(acc);
}

TwistedPair companion(const HitchinTuple& s) {
  const int r = s.rank();
  const int t = s.t();
  std::vector<int> numbers(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) numbers[static_cast<std::size_t>(i)] = -i * t;
  PolyMatrix phi = zero_matrix<Poly>(r, r);
  for (int i = 0; i + 1 < r; ++i) phi(i + 1, i) = Poly(Rational(1));
  for (int i = 0; i < r; ++i) phi(i, r - 1) += -s.coefficient(r - i).rep();
  return TwistedPair(t, BGType(std::move(numbers)), std::move(phi));
}

bool grothendieck_constraint(const BGType& bg, int t) {
  for (int i = 0; i + 1 < bg.rank(); ++i)
    if (bg[i] > bg[i + 1] + t) return false;
  return true;
}

int nitsure_dimension(int r, int t) {
  if (t <= 0) throw DomainError("outside the treated cases: nitsure dimension needs t >= 1");
  if (r < 1) throw InputError("rank must be positive");
  // h^1(O(t)) = h^0(O(-t-2)) by Serre duality with K = O(-2)
  const int h1 = std::max(0, -t - 1);
  return r * r * t + 1 + h1;
}

std::vector<int> CyclicChain::slot_twists(const BGType& bg, int t) {
  const int r = bg.rank();
  std::vector<int> caps(static_cast<std::size_t>(r));
  for (int i = 0; i + 1 < r; ++i) caps[static_cast<std::size_t>(i)] = bg[i + 1] - bg[i] + t;
  caps[static_cast<std::size_t>(r - 1)] = bg[0] - bg[r - 1] + t;
  return caps;
}

CyclicChain::CyclicChain(int t, BGType bg, std::vector<Section> u) : t_(t), bg_(std::move(bg)), u_(std::move(u)) {
  if (t_ < 1) throw InputError("twist t must be positive");
  const auto caps = slot_twists(bg_, t_);
  if (u_.size() != caps.size()) throw InputError("chain needs exactly rank sections");
  for (std::size_t i = 0; i < caps.size(); ++i)
    if (u_[i].twist() != caps[i])
      throw InputError("u_" + std::to_string(i + 1) + " must be a section of O(" + std::to_string(caps[i]) + ")");
}

TwistedPair CyclicChain::to_pair() const {
  const int r = rank();
  PolyMatrix phi = zero_matrix<Poly>(r, r);
  for (int i = 0; i + 1 < r; ++i) phi(i + 1, i) = u_[static_cast<std::size_t>(i)].rep();
  // a weighted r-cycle has characteristic polynomial lambda^r - (product of weights)
  phi(0, r - 1) = u_.back().rep();
  return TwistedPair(t_, bg_, std::move(phi));
}

Section CyclicChain::determinant_section() const {
  Poly product(Rational(1));
  for (const auto& u : u_) product *= u.rep();
  return Section(t_ * rank(), std::move(product));
}

int FactoredSection::finite_degree() const {
  if (unit == 0) return kMinusInfinity;
  int deg = 0;
  for (const auto& [f, e] : factors) deg += f.degree() * e;
  return deg;
}

Section FactoredSection::expand() const {
  if (unit == 0) {
    if (!factors.empty()) throw InputError("zero unit with nonempty factor list");
    return Section::zero(twist);
  }
  Poly product(unit);
  for (const auto& [f, e] : factors) {
    if (f.degree() < 1) throw InputError("factors must be nonconstant");
    if (e < 1) throw InputError("factor multiplicities must be positive");
    product *= pow(f, static_cast<unsigned>(e));
  }
  return Section(twist, std::move(product));
}

namespace {

struct Packer {
  std::vector<const Poly*> items;
  std::vector<int> remaining;
  std::vector<int> assignment;

  bool place(std::size_t next) {
    if (next == items.size()) return true;
    const int deg = items[next]->degree();
    std::vector<int> tried;
    for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
      if (remaining[slot] < deg) continue;
      // slots with the same free room are interchangeable for what follows
      if (std::find(tried.begin(), tried.end(), remaining[slot]) != tried.end()) continue;
      tried.push_back(remaining[slot]);
      remaining[slot] -= deg;
      assignment[next] = static_cast<int>(slot);
      if (place(next + 1)) return true;
      remaining[slot] += deg;
    }
    return false;
  }
};

}  // namespace

CyclicChain cyclic_chain_build(const BGType& bg, int t, const FactoredSection& s) {
  if (!grothendieck_constraint(bg, t)) throw InputError("Grothendieck constraint fails for this splitting type");
  const int r = bg.rank();
  if (s.twist != t * r) throw InputError("determinant must be a section of O(t r)");
  const Section expanded = s.expand();  // validates degree against the twist
  const auto caps = CyclicChain::slot_twists(bg, t);

  std::vector<Section> u;
  if (expanded.is_zero()) {
    for (int i = 0; i + 1 < r; ++i) u.push_back(Section::constant(caps[static_cast<std::size_t>(i)], Rational(1)));
    u.push_back(Section::zero(caps.back()));
    return CyclicChain(t, bg, std::move(u));
  }

  Packer packer;
  for (const auto& [f, e] : s.factors)
    for (int k = 0; k < e; ++k) packer.items.push_back(&f);
  packer.remaining = caps;
  packer.assignment.assign(packer.items.size(), -1);
  if (!packer.place(0)) throw DomainError("unpackable factorization");

  std::vector<Poly> reps(static_cast<std::size_t>(r), Poly(Rational(1)));
  reps.back() = Poly(s.unit);
  for (std::size_t i = 0; i < packer.items.size(); ++i)
    reps[static_cast<std::size_t>(packer.assignment[i])] *= *packer.items[i];
  for (int i = 0; i < r; ++i) u.emplace_back(caps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(i)]);
  return CyclicChain(t, bg, std::move(u));
}

ChainStabilityReport analyze_chain_stability(const CyclicChain& chain) {
  const BGType& bg = chain.bg();
  const int r = chain.rank();
  ChainStabilityReport report{ChainStability::stable, slope(bg), {}};
  if (r == 1) return report;

  auto summand = [&](int first, int last) {
    int deg = 0;
    for (int i = first; i <= last; ++i) deg += bg[i - 1];
    Rational mu(deg, last - first + 1);
    mu.canonicalize();
    return InvariantSummand{first, last, mu};
  };
  for (int i = 1; i < r; ++i)
    if (chain.u(i).is_zero()) report.invariant_summands.push_back(summand(1, i));
  if (chain.u(r).is_zero())
    for (int j = 2; j <= r; ++j) report.invariant_summands.push_back(summand(j, r));

  if (report.invariant_summands.empty()) return report;
  report.verdict = ChainStability::semistable_only;
  for (const auto& inv : report.invariant_summands)
    if (inv.slope > report.slope) report.verdict = ChainStability::unstable;
  return report;
}

ChainStability chain_stability(const CyclicChain& chain) { return analyze_chain_stability(chain).verdict; }

const char* to_string(ChainStability s) {
  switch (s) {
    case ChainStability::stable:
      return "stable";
    case ChainStability::semistable_only:
      return "semistable_only";
    case ChainStability::unstable:
      return "unstable";
  }
  return "unknown";
}

}  // namespace hitchin
