// hitchin: exact computations for twisted pairs on P^1.
//
//   hitchin <command> [--payload JSON | --payload-file PATH] [--<field> JSON ...]
//
// Without --payload or field flags the payload is read from stdin. Field
// flags are JSON values and override payload keys of the same name.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hitchin/cli.hpp"

namespace {

using hitchin::wire::Json;

struct CommandFlags {
  const char* name;
  const char* help;
  std::vector<const char*> fields;
};

const std::vector<CommandFlags> kFlags{
    {"pair-charpoly", "characteristic coefficients of a twisted pair, both routes", {"t", "bg", "phi"}},
    {"pair-companion", "companion pair realizing a Hitchin tuple", {"t", "r", "s"}},
    {"chain-build", "cyclic chain with determinant a factored section", {"t", "bg", "s"}},
    {"chain-stability", "stability verdict for a cyclic chain", {"t", "bg", "u"}},
    {"spectral-report", "discriminant, smoothness, integrality and genus of a spectral curve", {"t", "r", "s"}},
    {"galois-blocks", "block systems of a permutation group", {"degree", "generators"}},
    {"cover-factor", "factorizations of the cyclic cover of degree r", {"r"}},
    {"tower-plan", "genus and degree ledger of a tower of covers", {"t", "r", "m", "p", "d", "steps"}},
    {"elliptic-push", "splitting type of a pushforward from an elliptic curve",
     {"rank", "degree", "shape", "h0", "line_degrees", "line_h0", "menu"}},
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// Bare words that are not JSON (e.g. --shape indecomposable) become strings.
Json flag_value(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  return parsed.is_discarded() ? Json(text) : parsed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for twisted pairs, spectral curves and their covers"};
  app.require_subcommand(1);

  std::string payload_text;
  std::string payload_file;
  std::map<std::string, std::map<std::string, std::string>> field_text;

  for (const CommandFlags& c : kFlags) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--payload", payload_text, "payload as a JSON object");
    sub->add_option("--payload-file", payload_file, "file holding the payload ('-' for stdin)");
    for (const char* f : c.fields)
      sub->add_option(std::string("--") + f, field_text[c.name][f], std::string("payload field '") + f + "' as JSON");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const auto command = hitchin::cli::parse_command(name);

  Json payload = Json::object();
  try {
    bool have_fields = false;
    for (const auto& [f, text] : field_text[name])
      if (sub->count("--" + f) > 0) have_fields = true;

    std::string source;
    if (!payload_text.empty()) {
      source = payload_text;
    } else if (!payload_file.empty()) {
      if (payload_file == "-") {
        source = slurp(std::cin);
      } else {
        std::ifstream in(payload_file);
        if (!in) {
          std::cerr << "cannot open " << payload_file << "\n";
          return 1;
        }
        source = slurp(in);
      }
    } else if (!have_fields) {
      source = slurp(std::cin);
    }
    if (!source.empty()) payload = Json::parse(source);

    for (const auto& [f, text] : field_text[name])
      if (sub->count("--" + f) > 0) payload[f] = flag_value(text);
  } catch (const Json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    std::cout << Json{{"command", name}, {"status", "error"}, {"error", {{"kind", "input"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 1;
  }

  const hitchin::cli::Report report = hitchin::cli::run({*command, payload});
  std::cout << report.document.dump(2) << "\n";
  if (report.exit_code != 0) std::cerr << report.document["error"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}
