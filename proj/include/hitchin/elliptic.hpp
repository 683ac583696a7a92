#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hitchin/pairs.hpp"

namespace hitchin {

enum class BundleShape { indecomposable, decomposable_line_sum };

/// A bundle E on an elliptic curve X, pushed forward along a 2:1 map X -> P^1.
struct EllipticBundleSpec {
  int rank = 1;
  int degree = 0;
  BundleShape shape = BundleShape::indecomposable;
  /// h^0(E); required for indecomposable bundles of degree 0.
  std::optional<int> h0;
  /// Degrees of L_1, L_2 for a decomposable L_1 + L_2.
  std::optional<std::pair<int, int>> line_degrees;
  /// h^0(L_1), h^0(L_2); required when both line degrees are 0.
  std::optional<std::pair<int, int>> line_h0;
};

struct SplittingResult {
  BGType bg;
  int degree_check;  // sum of the splitting = deg E - 2 rank E
};

/// Birkhoff-Grothendieck type of f_* E for the cases worked out by hand:
/// indecomposable of degree -1, 0, 1 in any rank, indecomposable rank 2
/// degree 2, and L_1 + L_2 with both degrees 0 or both 1. Throws InputError
/// for inconsistent specs and DomainError("no general computational
/// strategy") outside that table.
SplittingResult pushforward_splitting(const EllipticBundleSpec& spec);

/// h^0 of an indecomposable bundle is forced to vanish in negative degree.
bool h0_vanishing(int degree);

/// The four splittings of pi_*(L_1 + L_2) for deg L_i = 0 (three h^0
/// patterns) and deg L_i = 1.
std::vector<SplittingResult> decomposable_menu();

}  // namespace hitchin
