#pragma once

// JSON wire format. Rationals travel as "p/q" strings, sections as
// {"k": int, "coeffs": [...]}, permutations as image arrays. Readers throw
// InputError on anything malformed.

#include <json.hpp>

#include "hitchin/elliptic.hpp"
#include "hitchin/pairs.hpp"
#include "hitchin/perm_groups.hpp"
#include "hitchin/spectral.hpp"
#include "hitchin/tower.hpp"

namespace hitchin::wire {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Array of Q[x] coefficients, index = power of lambda.
Json to_json(const LambdaPoly& p);

Json to_json(const Section& s);
Section section_from_json(const Json& j);
/// Same, with the twist required to equal `expected_twist`.
Section section_from_json(const Json& j, int expected_twist);

Json to_json(const BGType& bg);
BGType bg_from_json(const Json& j);

Json to_json(const HitchinTuple& s);
HitchinTuple hitchin_tuple_from_json(const Json& j);

Json to_json(const TwistedPair& p);
TwistedPair pair_from_json(const Json& j);

Json to_json(const CyclicChain& c);
CyclicChain chain_from_json(const Json& j);

FactoredSection factored_section_from_json(const Json& j);

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);
Json to_json(const BlockSystem& b);

Json to_json(const SpectralReport& r);
Json to_json(const TowerPlan& plan);
Json to_json(const TowerLevel& level);
Json to_json(const SplittingResult& s);
EllipticBundleSpec elliptic_spec_from_json(const Json& j);

/// Integer field `key` of object `j`; InputError when missing or not an integer.
int get_int(const Json& j, const char* key);

}  // namespace hitchin::wire
