#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hitchin/wire.hpp"

namespace hitchin::cli {

enum class Command {
  pair_charpoly,
  pair_companion,
  chain_build,
  chain_stability,
  spectral_report,
  galois_blocks,
  cover_factor,
  tower_plan,
  elliptic_push,
};

/// "pair-charpoly" etc.; nullopt for an unknown name.
std::optional<Command> parse_command(std::string_view name);
const char* command_name(Command c);

struct Request {
  Command command;
  wire::Json payload;
};

struct Report {
  wire::Json document;  // {"command", "status": "ok"|"error", "result" | "error"}
  int exit_code;        // 0 ok, 1 malformed input, 2 domain error
};

/// Validates the payload keys, runs the analysis and never throws for
/// user-facing failures; internal invariant breaches propagate.
Report run(const Request& request);

}  // namespace hitchin::cli
