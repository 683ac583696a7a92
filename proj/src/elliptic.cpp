#include "hitchin/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "hitchin/errors.hpp"

namespace hitchin {

namespace {

SplittingResult make_result(std::vector<int> numbers) {
  std::sort(numbers.begin(), numbers.end(), std::greater<>());
  const int sum = std::accumulate(numbers.begin(), numbers.end(), 0);
  return {BGType(std::move(numbers)), sum};
}

std::vector<int> indecomposable(int n, int degree, std::optional<int> h0) {
  const auto len = static_cast<std::size_t>(2 * n);
  switch (degree) {
    case 0: {
      if (!h0) throw InputError("degree-0 indecomposable bundle needs h0");
      if (*h0 == 0) return std::vector<int>(len, -1);
      if (*h0 != 1) throw InputError("h0 of a degree-0 indecomposable bundle is 0 or 1");
      std::vector<int> out(len, -1);
      out.front() = 0;
      out.back() = -2;
      return out;
    }
    case 1: {
      std::vector<int> out(len, -1);
      out.front() = 0;
      return out;
    }
    case -1: {
      std::vector<int> out(len, -1);
      out.back() = -2;
      return out;
    }
    case 2:
      if (n == 2) return {0, 0, -1, -1};
      break;
    default:
      break;
  }
  throw DomainError("no general computational strategy for rank " + std::to_string(n) + ", degree " +
                    std::to_string(degree));
}

}  // namespace

SplittingResult pushforward_splitting(const EllipticBundleSpec& spec) {
  if (spec.rank < 1) throw InputError("rank must be positive");

  if (spec.shape == BundleShape::indecomposable) {
    if (spec.line_degrees) throw InputError("line degrees given for an indecomposable bundle");
    if (spec.h0 && spec.degree < 0 && *spec.h0 != 0) throw InputError("negative-degree indecomposable bundles have h0 = 0");
    return make_result(indecomposable(spec.rank, spec.degree, spec.h0));
  }

  if (spec.rank != 2) throw InputError("a line-bundle sum L1 + L2 has rank 2");
  if (!spec.line_degrees) throw InputError("decomposable spec needs line degrees");
  const auto [d1, d2] = *spec.line_degrees;
  if (d1 != d2) throw InputError("semistable line sums need equal degrees");
  if (d1 + d2 != spec.degree) throw InputError("line degrees must add up to the degree");
  if (d1 != 0 && d1 != 1) throw DomainError("no general computational strategy for line degree " + std::to_string(d1));

  // pushforward commutes with direct sums: concatenate the rank-1 answers
  std::optional<int> h0_first;
  std::optional<int> h0_second;
  if (d1 == 0) {
    if (!spec.line_h0) throw InputError("degree-0 line bundles need their h0");
    h0_first = spec.line_h0->first;
    h0_second = spec.line_h0->second;
  }
  std::vector<int> numbers = indecomposable(1, d1, h0_first);
  const std::vector<int> second = indecomposable(1, d2, h0_second);
  numbers.insert(numbers.end(), second.begin(), second.end());
  return make_result(std::move(numbers));
}

bool h0_vanishing(int degree) { return degree < 0; }

std::vector<SplittingResult> decomposable_menu() {
  auto sum = [](int deg, int h0a, int h0b) {
    EllipticBundleSpec spec;
    spec.rank = 2;
    spec.degree = 2 * deg;
    spec.shape = BundleShape::decomposable_line_sum;
    spec.line_degrees = {deg, deg};
    if (deg == 0) spec.line_h0 = {h0a, h0b};
    return pushforward_splitting(spec);
  };
  return {sum(0, 1, 0), sum(0, 1, 1), sum(0, 0, 0), sum(1, 0, 0)};
}

}  // namespace hitchin
