#pragma once

#include <vector>

namespace hitchin {

/// deg(pi_* M) = deg M + rank (1 - g_source) - deg(pi) rank (1 - g_target),
/// from chi(pi_* M) = chi(M) and Riemann-Roch on both curves.
int pushforward_degree(int deg_m, int rank_m, int g_source, int g_target, int deg_cover);

/// Numeric ledger of one factorization pi = g o f of the cyclic cover
/// X_s -> P^1 of degree r = m p, where f: X_s -> X has degree m and
/// g: X -> P^1 degree p.
struct TowerPlan {
  int t;
  int r;
  int m;
  int p;
  int d;         // degree of E on P^1
  int g_top;     // genus of X_s
  int g_mid;     // genus of X
  int d_prime;   // degree of the line bundle M on X_s
  int d_dprime;  // degree of f_* M on X

  friend bool operator==(const TowerPlan&, const TowerPlan&) = default;
};

/// Closed forms for every field, each re-derived through pushforward_degree
/// (f then g must land back on d); a disagreement throws std::logic_error.
/// Throws InputError when r != m p, and DomainError when m or p is 1 or t < 2.
TowerPlan plan_tower(int t, int r, int m, int p, int d);

/// One plan per ordered factorization r = m p with m, p >= 2, by increasing m.
std::vector<TowerPlan> enumerate_towers(int t, int r, int d);

/// One curve in an iterated tower X_s = X_0 -> X_1 -> ... -> X_k = P^1.
struct TowerLevel {
  int degree_over_base;  // degree of X_i -> P^1
  int genus;
  int bundle_rank;       // rank of the pushed-forward bundle on X_i
  int bundle_degree;
};

/// Pushes the line bundle of degree d' on X_s down a chain of covers of the
/// given successive degrees (product r, each >= 2). Each intermediate X_i
/// covers P^1 totally ramified over the t r branch points, so Hurwitz fixes its
/// genus. The last level is P^1 with the pair's degree d.
std::vector<TowerLevel> plan_iterated_tower(int t, int r, const std::vector<int>& step_degrees, int d);

}  // namespace hitchin
