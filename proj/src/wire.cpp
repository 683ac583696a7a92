#include "hitchin/wire.hpp"

#include <limits>
#include <string>

#include "hitchin/errors.hpp"

namespace hitchin::wire {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InputError(what + " out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

std::vector<int> int_array(const Json& j, const std::string& what) {
  std::vector<int> out;
  for (const Json& e : as_array(j, what)) out.push_back(as_int(e, what + " entry"));
  return out;
}

}  // namespace

int get_int(const Json& j, const char* key) { return as_int(field(j, key), std::string("'") + key + "'"); }

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InputError("rationals are \"p/q\" strings or integers");
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const Rational& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const Json& e : as_array(j, "coefficient list")) coeffs.push_back(rational_from_json(e));
  return Poly(std::move(coeffs));
}

Json to_json(const LambdaPoly& p) {
  Json out = Json::array();
  for (const Poly& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Section& s) { return Json{{"k", s.twist()}, {"coeffs", to_json(s.rep())}}; }

Section section_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("sections are {\"k\": int, \"coeffs\": [...]}");
  return Section(get_int(j, "k"), poly_from_json(field(j, "coeffs")));
}

Section section_from_json(const Json& j, int expected_twist) {
  // a bare coefficient list takes the expected twist
  if (j.is_array()) return Section(expected_twist, poly_from_json(j));
  Section s = section_from_json(j);
  if (s.twist() != expected_twist)
    throw InputError("section has twist " + std::to_string(s.twist()) + ", expected " + std::to_string(expected_twist));
  return s;
}

Json to_json(const BGType& bg) { return bg.numbers(); }

BGType bg_from_json(const Json& j) { return BGType(int_array(j, "'bg'")); }

Json to_json(const HitchinTuple& s) {
  Json coeffs = Json::array();
  for (const Section& c : s.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"t", s.t()}, {"s", coeffs}};
}

HitchinTuple hitchin_tuple_from_json(const Json& j) {
  const int t = get_int(j, "t");
  std::vector<Section> s;
  int i = 1;
  for (const Json& e : as_array(field(j, "s"), "'s'")) s.push_back(section_from_json(e, t * i++));
  if (j.contains("r") && get_int(j, "r") != static_cast<int>(s.size()))
    throw InputError("'r' does not match the number of coefficients");
  return HitchinTuple(t, std::move(s));
}

Json to_json(const TwistedPair& p) {
  Json rows = Json::array();
  for (int i = 0; i < p.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.rank(); ++j) row.push_back(to_json(p.entry(i, j)));
    rows.push_back(row);
  }
  return Json{{"t", p.t()}, {"bg", to_json(p.bg())}, {"phi", rows}};
}

TwistedPair pair_from_json(const Json& j) {
  const int t = get_int(j, "t");
  BGType bg = bg_from_json(field(j, "bg"));
  const Json& rows = as_array(field(j, "phi"), "'phi'");
  const int r = bg.rank();
  if (static_cast<int>(rows.size()) != r) throw InputError("'phi' must have rank-many rows");
  PolyMatrix phi = zero_matrix<Poly>(r, r);
  for (int a = 0; a < r; ++a) {
    const Json& row = as_array(rows[static_cast<std::size_t>(a)], "'phi' row");
    if (static_cast<int>(row.size()) != r) throw InputError("'phi' must be square");
    for (int b = 0; b < r; ++b)
      phi(a, b) = section_from_json(row[static_cast<std::size_t>(b)], bg[a] - bg[b] + t).rep();
  }
  return TwistedPair(t, std::move(bg), std::move(phi));
}

Json to_json(const CyclicChain& c) {
  Json u = Json::array();
  for (const Section& s : c.sections()) u.push_back(to_json(s));
  return Json{{"t", c.t()}, {"bg", to_json(c.bg())}, {"u", u}};
}

CyclicChain chain_from_json(const Json& j) {
  const int t = get_int(j, "t");
  BGType bg = bg_from_json(field(j, "bg"));
  const std::vector<int> twists = CyclicChain::slot_twists(bg, t);
  const Json& arr = as_array(field(j, "u"), "'u'");
  if (arr.size() != twists.size()) throw InputError("'u' must have rank-many sections");
  std::vector<Section> u;
  for (std::size_t i = 0; i < arr.size(); ++i) u.push_back(section_from_json(arr[i], twists[i]));
  return CyclicChain(t, std::move(bg), std::move(u));
}

FactoredSection factored_section_from_json(const Json& j) {
  FactoredSection s;
  s.twist = get_int(j, "k");
  s.unit = j.contains("unit") ? rational_from_json(j["unit"]) : Rational(1);
  if (j.contains("factors")) {
    for (const Json& f : as_array(j["factors"], "'factors'")) {
      Poly p = poly_from_json(field(f, "poly"));
      const int mult = f.contains("multiplicity") ? get_int(f, "multiplicity") : 1;
      if (mult < 1) throw InputError("factor multiplicity must be positive");
      if (p.degree() < 1) throw InputError("factors must be non-constant");
      s.factors.emplace_back(std::move(p), mult);
    }
  }
  if (j.contains("infinity_deficit") && get_int(j, "infinity_deficit") != s.infinity_deficit())
    throw InputError("'infinity_deficit' disagrees with k minus the finite degree");
  if (s.infinity_deficit() < 0) throw InputError("factors exceed the twist");
  return s;
}

Json to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(int_array(j, "permutation"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json to_json(const BlockSystem& b) { return b.blocks; }

Json to_json(const SpectralReport& r) {
  Json certificate = Json::array();
  for (const LambdaPoly& f : r.integrality_certificate) certificate.push_back(to_json(f));
  Json ramification = Json::array();
  for (const RamificationClass& c : r.ramification)
    ramification.push_back({{"multiplicity", c.multiplicity}, {"count", c.count}});
  Json out{{"t", r.t},
           {"r", r.r},
           {"discriminant", to_json(r.discriminant)},
           {"discriminant_degenerate", r.discriminant_degenerate},
           {"is_smooth_locus", r.is_smooth_locus},
           {"smoothness_diagnostic", nullptr},
           {"is_integral", to_string(r.is_integral)},
           {"integrality_reason", r.integrality_reason},
           {"integrality_certificate", certificate},
           {"euler_char", r.euler_char},
           {"genus", r.genus},
           {"ramification", ramification},
           {"smooth", r.is_smooth_locus},
           {"integral", to_string(r.is_integral)}};
  if (r.smoothness_diagnostic) out["smoothness_diagnostic"] = *r.smoothness_diagnostic;
  return out;
}

Json to_json(const TowerPlan& p) {
  return Json{{"t", p.t},           {"r", p.r},         {"m", p.m},
              {"p", p.p},           {"d", p.d},         {"g_top", p.g_top},
              {"g_mid", p.g_mid},   {"d_prime", p.d_prime}, {"d_dprime", p.d_dprime},
              {"d1", p.d_prime},    {"d2", p.d_dprime}};
}

Json to_json(const TowerLevel& level) {
  return Json{{"degree_over_base", level.degree_over_base},
              {"genus", level.genus},
              {"bundle_rank", level.bundle_rank},
              {"bundle_degree", level.bundle_degree}};
}

Json to_json(const SplittingResult& s) { return Json{{"bg", to_json(s.bg)}, {"degree_check", s.degree_check}}; }

EllipticBundleSpec elliptic_spec_from_json(const Json& j) {
  EllipticBundleSpec spec;
  spec.rank = get_int(j, "rank");
  spec.degree = get_int(j, "degree");
  const std::string shape = j.contains("shape") ? j["shape"].get<std::string>() : "indecomposable";
  if (shape == "indecomposable")
    spec.shape = BundleShape::indecomposable;
  else if (shape == "decomposable_line_sum")
    spec.shape = BundleShape::decomposable_line_sum;
  else
    throw InputError("'shape' is indecomposable or decomposable_line_sum");
  if (j.contains("h0")) spec.h0 = get_int(j, "h0");
  auto pair_of = [&](const char* key) -> std::optional<std::pair<int, int>> {
    if (!j.contains(key)) return std::nullopt;
    const std::vector<int> v = int_array(j[key], std::string("'") + key + "'");
    if (v.size() != 2) throw InputError(std::string("'") + key + "' holds two integers");
    return std::pair{v[0], v[1]};
  };
  spec.line_degrees = pair_of("line_degrees");
  spec.line_h0 = pair_of("line_h0");
  return spec;
}

}  // namespace hitchin::wire
