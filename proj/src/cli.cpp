#include "hitchin/cli.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include "hitchin/errors.hpp"

namespace hitchin::cli {

using wire::Json;
using wire::to_json;

namespace {

struct CommandInfo {
  Command command;
  const char* name;
  std::initializer_list<const char*> required;
  std::initializer_list<const char*> optional;
};

const std::array<CommandInfo, 9> kCommands{{
    {Command::pair_charpoly, "pair-charpoly", {"t", "bg", "phi"}, {}},
    {Command::pair_companion, "pair-companion", {"t", "s"}, {"r"}},
    {Command::chain_build, "chain-build", {"t", "bg", "s"}, {}},
    {Command::chain_stability, "chain-stability", {"t", "bg", "u"}, {}},
    {Command::spectral_report, "spectral-report", {"t", "s"}, {"r"}},
    {Command::galois_blocks, "galois-blocks", {"generators"}, {"degree"}},
    {Command::cover_factor, "cover-factor", {"r"}, {}},
    {Command::tower_plan, "tower-plan", {"t", "r", "d"}, {"m", "p", "steps"}},
    {Command::elliptic_push, "elliptic-push", {}, {"rank", "degree", "shape", "h0", "line_degrees", "line_h0", "menu"}},
}};

const CommandInfo& info(Command c) {
  return *std::find_if(kCommands.begin(), kCommands.end(), [c](const CommandInfo& i) { return i.command == c; });
}

void validate_keys(const CommandInfo& spec, const Json& payload) {
  if (!payload.is_object()) throw InputError("payload must be a JSON object");
  for (const char* key : spec.required)
    if (!payload.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  for (const auto& [key, value] : payload.items()) {
    auto known = [&key](const char* k) { return key == k; };
    if (std::none_of(spec.required.begin(), spec.required.end(), known) &&
        std::none_of(spec.optional.begin(), spec.optional.end(), known))
      throw InputError("unknown field '" + key + "' for " + spec.name);
  }
}

Json sections_json(const HitchinTuple& s) {
  Json out = Json::array();
  for (const Section& c : s.coefficients()) out.push_back(to_json(c));
  return out;
}

Json pair_charpoly(const Json& payload) {
  const TwistedPair pair = wire::pair_from_json(payload);
  const HitchinTuple newton = char_coefficients_newton(pair);
  const HitchinTuple det = char_coefficients_det(pair);
  Json second_chart = Json::array();
  for (const Section& c : newton.coefficients()) second_chart.push_back(to_json(flip_chart(c)));
  return Json{{"pair", to_json(pair)},
              {"degree", pair.bg().degree()},
              {"slope", to_json(slope(pair.bg()))},
              {"char_coefficients", sections_json(newton)},
              {"char_coefficients_det", sections_json(det)},
              {"routes_agree", newton == det},
              {"second_chart", second_chart},
              {"cayley_hamilton", cayley_hamilton_check(pair)},
              {"grothendieck_constraint", grothendieck_constraint(pair.bg(), pair.t())},
              {"nitsure_dimension", nitsure_dimension(pair.rank(), pair.t())}};
}

Json pair_companion(const Json& payload) {
  const HitchinTuple s = wire::hitchin_tuple_from_json(payload);
  const TwistedPair pair = companion(s);
  const HitchinTuple back = char_coefficients_newton(pair);
  return Json{{"pair", to_json(pair)},
              {"bg", to_json(pair.bg())},
              {"char_coefficients", sections_json(back)},
              {"round_trip", back == s},
              {"cayley_hamilton", cayley_hamilton_check(pair)},
              {"grothendieck_constraint", grothendieck_constraint(pair.bg(), pair.t())}};
}

Json stability_json(const ChainStabilityReport& report) {
  Json summands = Json::array();
  for (const InvariantSummand& s : report.invariant_summands)
    summands.push_back({{"first", s.first}, {"last", s.last}, {"slope", to_json(s.slope)}});
  return Json{{"verdict", to_string(report.verdict)}, {"slope", to_json(report.slope)}, {"invariant_summands", summands}};
}

Json chain_build(const Json& payload) {
  const int t = wire::get_int(payload, "t");
  const BGType bg = wire::bg_from_json(payload["bg"]);
  const FactoredSection s = wire::factored_section_from_json(payload["s"]);
  const CyclicChain chain = cyclic_chain_build(bg, t, s);
  const TwistedPair pair = chain.to_pair();
  const HitchinTuple char_coeffs = char_coefficients_newton(pair);

  // det(lambda - phi) = lambda^r - s
  std::vector<Section> expected;
  for (int i = 1; i < bg.rank(); ++i) expected.push_back(Section::zero(t * i));
  expected.push_back(Section(t * bg.rank(), -s.expand().rep()));

  return Json{{"chain", to_json(chain)},
              {"slot_twists", CyclicChain::slot_twists(bg, t)},
              {"section", to_json(s.expand())},
              {"infinity_deficit", s.infinity_deficit()},
              {"determinant", to_json(chain.determinant_section())},
              {"pair", to_json(pair)},
              {"char_coefficients", sections_json(char_coeffs)},
              {"char_matches", char_coeffs == HitchinTuple(t, expected)},
              {"grothendieck_constraint", grothendieck_constraint(bg, t)},
              {"stability", stability_json(analyze_chain_stability(chain))}};
}

Json chain_stability_cmd(const Json& payload) {
  const CyclicChain chain = wire::chain_from_json(payload);
  Json out = stability_json(analyze_chain_stability(chain));
  out["chain"] = to_json(chain);
  out["determinant"] = to_json(chain.determinant_section());
  out["grothendieck_constraint"] = grothendieck_constraint(chain.bg(), chain.t());
  return out;
}

Json spectral_report_cmd(const Json& payload) {
  const HitchinTuple s = wire::hitchin_tuple_from_json(payload);
  Json out = to_json(spectral_report(s));
  out["spectral_polynomial"] = to_json(s.spectral_polynomial());
  out["genus_pair"] = {{"formula", out["genus"]},
                       {"hurwitz_cyclic", s.rank() >= 2 ? Json(genus_hurwitz_cyclic(s.t(), s.rank())) : Json(nullptr)}};
  return out;
}

Json galois_blocks(const Json& payload) {
  if (!payload["generators"].is_array()) throw InputError("'generators' must be an array");
  std::vector<Permutation> gens;
  for (const Json& g : payload["generators"]) gens.push_back(wire::permutation_from_json(g));
  const PermGroup group = payload.contains("degree") ? PermGroup(wire::get_int(payload, "degree"), gens)
                                                     : PermGroup(gens);
  Json out{{"degree", group.degree()}, {"generators", Json::array()}};
  for (const Permutation& g : group.generators()) out["generators"].push_back(to_json(g));

  constexpr std::size_t kOrderBound = 40320;
  try {
    out["order"] = group_elements(group, kOrderBound).size();
  } catch (const DomainError&) {
    out["order"] = nullptr;
  }

  const bool transitive = is_transitive(group);
  out["transitive"] = transitive;
  out["orbit_of_0"] = orbit(group, 0);
  out["imprimitive"] = nullptr;
  out["witness"] = nullptr;
  out["minimal_blocks"] = Json::array();
  if (transitive) {
    const ImprimitivityVerdict verdict = is_imprimitive(group);
    out["imprimitive"] = verdict.imprimitive;
    if (verdict.witness) out["witness"] = to_json(*verdict.witness);
    for (int b = 1; b < group.degree(); ++b) {
      const auto blocks = minimal_blocks(group, 0, b);
      out["minimal_blocks"].push_back({{"a", 0}, {"b", b}, {"blocks", blocks ? to_json(*blocks) : Json(nullptr)}});
    }
  }
  const CyclicClassification c = cyclic_transitive_classification(group, group.degree());
  out["cyclic_order_r_transitive"] = c.is_cyclic_order_r_transitive;
  out["r_cycle_generated"] = c.is_r_cycle_generated;
  return out;
}

Json cover_factor(const Json& payload) {
  const int r = wire::get_int(payload, "r");
  const CoverFactorization f = cyclic_cover_factorizable(r);
  Json factorizations = Json::array();
  for (const auto& [m, p] : f.factorizations) factorizations.push_back({{"m", m}, {"p", p}});
  return Json{{"r", r},
              {"galois_generator", to_json(Permutation::cycle(r))},
              {"factorizable", f.factorizable},
              {"factorizations", factorizations},
              {"witness", f.witness ? to_json(*f.witness) : Json(nullptr)}};
}

Json tower_plan(const Json& payload) {
  const int t = wire::get_int(payload, "t");
  const int r = wire::get_int(payload, "r");
  const int d = wire::get_int(payload, "d");
  const bool has_m = payload.contains("m");
  const bool has_p = payload.contains("p");
  if (payload.contains("steps")) {
    if (has_m || has_p) throw InputError("'steps' excludes 'm' and 'p'");
    std::vector<int> steps;
    for (const Json& s : payload["steps"]) {
      if (!s.is_number_integer()) throw InputError("'steps' entries must be integers");
      steps.push_back(s.get<int>());
    }
    Json levels = Json::array();
    for (const TowerLevel& level : plan_iterated_tower(t, r, steps, d)) levels.push_back(to_json(level));
    return Json{{"t", t}, {"r", r}, {"d", d}, {"steps", steps}, {"levels", levels}};
  }
  if (has_m != has_p) throw InputError("'m' and 'p' go together");
  if (has_m) return to_json(plan_tower(t, r, wire::get_int(payload, "m"), wire::get_int(payload, "p"), d));
  Json plans = Json::array();
  for (const TowerPlan& plan : enumerate_towers(t, r, d)) plans.push_back(to_json(plan));
  return Json{{"t", t}, {"r", r}, {"d", d}, {"plans", plans}};
}

Json splitting_json(const SplittingResult& s) {
  Json out = to_json(s);
  out["grothendieck_constraint"] = grothendieck_constraint(s.bg, 2);
  return out;
}

Json elliptic_push(const Json& payload) {
  if (payload.contains("menu")) {
    if (!payload["menu"].is_boolean()) throw InputError("'menu' must be a boolean");
    if (payload.size() != 1) throw InputError("'menu' takes no other fields");
    Json menu = Json::array();
    for (const SplittingResult& s : decomposable_menu()) menu.push_back(splitting_json(s));
    return Json{{"menu", menu}};
  }
  const EllipticBundleSpec spec = wire::elliptic_spec_from_json(payload);
  Json out = splitting_json(pushforward_splitting(spec));
  out["expected_degree"] = spec.degree - 2 * spec.rank;
  out["h0_vanishing"] = h0_vanishing(spec.degree);
  return out;
}

Json dispatch(Command c, const Json& payload) {
  switch (c) {
    case Command::pair_charpoly: return pair_charpoly(payload);
    case Command::pair_companion: return pair_companion(payload);
    case Command::chain_build: return chain_build(payload);
    case Command::chain_stability: return chain_stability_cmd(payload);
    case Command::spectral_report: return spectral_report_cmd(payload);
    case Command::galois_blocks: return galois_blocks(payload);
    case Command::cover_factor: return cover_factor(payload);
    case Command::tower_plan: return tower_plan(payload);
    case Command::elliptic_push: return elliptic_push(payload);
  }
  throw std::logic_error("unhandled command");
}

Report failure(Command c, const char* kind, const std::string& message, int code) {
  return {Json{{"command", command_name(c)}, {"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}},
          code};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const CommandInfo& i : kCommands)
    if (name == i.name) return i.command;
  return std::nullopt;
}

const char* command_name(Command c) { return info(c).name; }

Report run(const Request& request) {
  try {
    validate_keys(info(request.command), request.payload);
    Json result = dispatch(request.command, request.payload);
    return {Json{{"command", command_name(request.command)}, {"status", "ok"}, {"result", std::move(result)}}, 0};
  } catch (const InputError& e) {
    return failure(request.command, "input", e.what(), 1);
  } catch (const Json::exception& e) {
    return failure(request.command, "input", e.what(), 1);
  } catch (const DomainError& e) {
    return failure(request.command, "domain", e.what(), 2);
  } catch (const std::domain_error& e) {
    return failure(request.command, "domain", e.what(), 2);
  }
}

}  // namespace hitchin::cli
