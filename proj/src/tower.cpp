#include "hitchin/tower.hpp"

#include <stdexcept>
#include <string>

#include "hitchin/errors.hpp"

namespace hitchin {

int pushforward_degree(int deg_m, int rank_m, int g_source, int g_target, int deg_cover) {
  if (rank_m < 1 || deg_cover < 1 || g_source < 0 || g_target < 0)
    throw InputError("pushforward needs rank, cover degree >= 1 and genera >= 0");
  return deg_m + rank_m * (1 - g_source) - deg_cover * rank_m * (1 - g_target);
}

namespace {

// Genus of a degree-q cover of P^1 totally ramified over b points.
int totally_ramified_genus(int branch_points, int q) {
  const int twice = branch_points * (q - 1) - 2 * q;
  if (twice % 2 != 0) throw std::logic_error("odd Riemann-Hurwitz total");
  return twice / 2 + 1;
}

int halve_exact(long long value, const char* what) {
  if (value % 2 != 0) throw std::logic_error(std::string("non-integral ") + what);
  return static_cast<int>(value / 2);
}

}  // namespace

TowerPlan plan_tower(int t, int r, int m, int p, int d) {
  if (t < 2) throw DomainError("tower plans need t >= 2");
  if (m * p != r) throw InputError("r must equal m p");
  if (m < 2 || p < 2) throw DomainError("not a proper factorization");

  TowerPlan plan{t, r, m, p, d, 0, 0, 0, 0};
  const long long tr = static_cast<long long>(t) * r;
  plan.g_top = halve_exact((tr - 2) * (r - 1), "top genus");
  plan.g_mid = halve_exact(tr * (p - 1), "intermediate genus") + 1 - p;
  plan.d_prime = d + halve_exact((r - 1) * tr, "shifted Jacobian degree");  // (r-1)((tr-2)/2 + 1)
  plan.d_dprime = d + halve_exact(static_cast<long long>(m) * tr * (p - 1), "intermediate degree");

  if (plan.g_top != totally_ramified_genus(t * r, r) || plan.g_mid != totally_ramified_genus(t * r, p))
    throw std::logic_error("closed-form genus disagrees with Hurwitz");
  if (plan.d_prime - d != plan.g_top - 1 + r) throw std::logic_error("shifted Jacobian degree disagrees with pushforward");
  if (pushforward_degree(plan.d_prime, 1, plan.g_top, plan.g_mid, m) != plan.d_dprime)
    throw std::logic_error("d'' disagrees with pushing d' along f");
  if (pushforward_degree(plan.d_dprime, m, plan.g_mid, 0, p) != d)
    throw std::logic_error("pushing d'' along g does not return d");
  if (pushforward_degree(plan.d_prime, 1, plan.g_top, 0, r) != d)
    throw std::logic_error("pushing d' along pi does not return d");
  return plan;
}

std::vector<TowerPlan> enumerate_towers(int t, int r, int d) {
  if (r < 2) throw InputError("cover degree must be at least 2");
  std::vector<TowerPlan> plans;
  for (int m = 2; m <= r / 2; ++m)
    if (r % m == 0) plans.push_back(plan_tower(t, r, m, r / m, d));
  return plans;
}

std::vector<TowerLevel> plan_iterated_tower(int t, int r, const std::vector<int>& step_degrees, int d) {
  if (t < 1 || r < 2) throw InputError("iterated tower needs t >= 1 and r >= 2");
  long long product = 1;
  for (int s : step_degrees) {
    if (s < 2) throw DomainError("not a proper factorization");
    product *= s;
  }
  if (product != r) throw InputError("step degrees must multiply to r");

  const int branch_points = t * r;
  const int g_top = totally_ramified_genus(branch_points, r);
  std::vector<TowerLevel> levels{{r, g_top, 1, d + g_top - 1 + r}};
  int remaining = r;
  for (int step : step_degrees) {
    remaining /= step;
    const TowerLevel& above = levels.back();
    const int genus = remaining == 1 ? 0 : totally_ramified_genus(branch_points, remaining);
    levels.push_back({remaining, genus, above.bundle_rank * step,
                      pushforward_degree(above.bundle_degree, above.bundle_rank, above.genus, genus, step)});
  }
  if (levels.back().bundle_degree != d) throw std::logic_error("iterated pushforward does not return d");
  return levels;
}

}  // namespace hitchin
