#include "hitchin/poly_algorithms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hitchin/matrix.hpp"

namespace hitchin {

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, Rational(1 / a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

SquarefreeTest gcd_squarefree(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("undefined squarefree test");
  Poly g = gcd(a, derivative(a));
  const bool squarefree = g.degree() == 0;
  return {squarefree, std::move(g)};
}

std::vector<Poly> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<Poly> factors;
  if (a.degree() == 0) return factors;
  const Poly monic = make_monic(a);
  const Poly da = derivative(monic);
  Poly g = gcd(monic, da);
  Poly b = exact_quotient(monic, g);
  Poly c = exact_quotient(da, g);
  Poly d = c - derivative(b);
  while (b.degree() > 0) {
    Poly f = gcd(b, d);
    factors.push_back(f);
    b = exact_quotient(b, f);
    c = exact_quotient(d, f);
    d = c - derivative(b);
  }
  // Yun emits a trailing constant factor when the top multiplicity is reached
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

namespace {

// Clears denominators; the result has integer coefficients.
std::vector<Integer> integerize(const Poly& a) {
  Integer l = 1;
  for (const auto& c : a.coeffs()) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    Rational scaled = c * Rational(l);
    out.push_back(scaled.get_num());
  }
  return out;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 2) break;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (n > 1) primes.emplace_back(n, 1u);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

int root_multiplicity(const Poly& a, const Rational& root) {
  if (a.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
  const Poly linear{Rational(-root), Rational(1)};
  int mult = 0;
  Poly cur = a;
  while (cur.degree() >= 1 && cur.evaluate(root) == 0) {
    cur = exact_quotient(cur, linear);
    ++mult;
  }
  return mult;
}

std::vector<RationalRoot> rational_roots(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  int zero_mult = 0;
  while (zero_mult < a.degree() && a.coeffs()[static_cast<std::size_t>(zero_mult)] == 0) ++zero_mult;
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});

  std::vector<Rational> shifted(a.coeffs().begin() + zero_mult, a.coeffs().end());
  const Poly rest(std::move(shifted));
  if (rest.degree() >= 1) {
    // squarefree part has the same roots and usually smaller coefficients
    const auto sqf = squarefree_decomposition(rest);
    Poly radical(Rational(1));
    for (const auto& f : sqf) radical *= f;
    const auto ints = integerize(radical);
    const auto ps = positive_divisors(ints.front());
    const auto qs = positive_divisors(ints.back());
    std::set<Rational> candidates;
    for (const auto& p : ps)
      for (const auto& q : qs) {
        Rational c(p, q);
        c.canonicalize();
        candidates.insert(c);
        candidates.insert(-c);
      }
    for (const auto& c : candidates)
      if (radical.evaluate(c) == 0) roots.push_back({c, root_multiplicity(rest, c)});
  }
  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& x, const RationalRoot& y) { return x.value < y.value; });
  return roots;
}

EisensteinWitness eisenstein_applies(const Poly& s) {
  if (s.is_zero()) throw std::domain_error("Eisenstein test on the zero polynomial");
  for (const auto& root : rational_roots(s))
    if (root.multiplicity == 1) return {true, root.value};
  return {false, std::nullopt};
}

std::vector<std::vector<Poly>> sylvester_matrix(const LambdaPoly& f, const LambdaPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant with a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) throw std::domain_error("resultant of two polynomials constant in lambda");
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.coeff(n - j);
  return s;
}

Poly resultant(const LambdaPoly& f, const LambdaPoly& g) {
  const auto rows = sylvester_matrix(f, g);
  const auto size = static_cast<Eigen::Index>(rows.size());
  PolyMatrix s(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j)
      s(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return determinant_bareiss(std::move(s));
}

Poly discriminant(const LambdaPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::domain_error("discriminant needs positive lambda-degree");
  Poly res = exact_quotient(resultant(f, derivative(f)), f.leading());
  return (d * (d - 1) / 2) % 2 == 0 ? res : -res;
}

std::optional<Rational> exact_root(const Rational& q, unsigned n) {
  if (n == 0) throw std::invalid_argument("zeroth root");
  if (q < 0 && n % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return q < 0 ? Rational(-r) : r;
}

std::optional<Poly> exact_root(const Poly& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("zeroth root");
  if (n == 1 || a.is_zero()) return a;
  const int deg = a.degree();
  if (deg % static_cast<int>(n) != 0) return std::nullopt;
  const auto lead_root = exact_root(a.leading(), n);
  if (!lead_root) return std::nullopt;
  const int m = deg / static_cast<int>(n);

  // Reversed monic series f(z) = z^deg a(1/z) / lc, f(0) = 1; take f^(1/n)
  // to order m with the power-series recurrence for f^alpha.
  std::vector<Rational> f(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int k = 0; k <= m; ++k) f[static_cast<std::size_t>(k)] = a.coeff(deg - k) / a.leading();
  const Rational alpha(1, n);
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1, Rational(0));
  g[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j)
      acc += ((alpha + 1) * j - k) * f[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
    g[static_cast<std::size_t>(k)] = acc / k;
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int k = 0; k <= m; ++k) coeffs[static_cast<std::size_t>(m - k)] = g[static_cast<std::size_t>(k)] * *lead_root;
  Poly candidate(std::move(coeffs));
  if (pow(candidate, n) != a) return std::nullopt;
  return candidate;
}

}  // namespace hitchin
