#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/pairs.hpp"

namespace hitchin {

enum class Integrality { yes, no, undecided };
const char* to_string(Integrality v);

/// Branch data of the spectral cover: the discriminant of
/// lambda^r + s_1 lambda^{r-1} + ... + s_r in lambda, a section of O(t r(r-1)).
/// Throws DomainError("no branch data") for r = 1. The all-zero tuple yields
/// the zero section.
Section discriminant_section(const HitchinTuple& s);

struct SmoothnessVerdict {
  bool smooth;
  std::optional<std::string> diagnostic;
};

/// Smooth-locus test: the discriminant has t r(r-1) distinct zeros on P^1.
SmoothnessVerdict smooth_locus(const HitchinTuple& s);
bool smooth_locus_check(const HitchinTuple& s);

struct IntegralityVerdict {
  Integrality verdict;
  std::string reason;
  /// For `no`: lambda-polynomial factors whose product is lambda^r - s.
  std::vector<LambdaPoly> certificate;
};

/// Integrality of the cyclic spectral curve lambda^r = s. Certifies `yes`
/// by an Eisenstein prime on either chart or by genericity of s, `no` by an
/// explicit rational factorization lambda^r - u^d with d | r, d > 1, and
/// answers `undecided` otherwise. Throws std::domain_error for s = 0.
IntegralityVerdict cyclic_integrality(int t, int r, const Section& s);

struct GenusData {
  int euler_char;
  int genus;
};

/// chi(O_{X_s}) = -t r(r-1)/2 + r and g = 1 - chi, for the degree-r spectral
/// curve in Tot(O(t)).
GenusData genus_formula(int t, int r);

/// Riemann-Hurwitz for the generic cyclic cover: t r branch points, each with
/// one ramification point of index r, so g = (t r - 2)(r - 1)/2.
int genus_hurwitz_cyclic(int t, int r);

struct RamificationClass {
  int multiplicity;
  int count;
};

struct SpectralReport {
  int t;
  int r;
  Section discriminant;
  bool discriminant_degenerate;
  bool is_smooth_locus;
  std::optional<std::string> smoothness_diagnostic;
  Integrality is_integral;
  std::string integrality_reason;
  std::vector<LambdaPoly> integrality_certificate;
  int euler_char;
  int genus;
  /// Known only for simply branched (smooth locus) and generic cyclic covers.
  std::vector<RamificationClass> ramification;
};

/// Full analysis of the spectral curve of s (r >= 2).
SpectralReport spectral_report(const HitchinTuple& s);

}  // namespace hitchin
