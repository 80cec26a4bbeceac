#pragma once

// Command implementations behind both the C API and the CLI: each one builds
// a ReportEnvelope (canonical JSON; Markdown is a derived view).  Identical
// inputs and seeds must produce byte-identical JSON, so payload assembly
// only ever walks deterministically ordered containers.

#include <json.hpp>
#include <string>

#include "basics.hpp"

namespace ellmod {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// envelope skeleton shared by every command
Json make_envelope(const std::string& command, Json input_echo, Json payload);

struct CommandOutput {
  Json envelope;
  std::string render(const std::string& format) const;  // "json" or "md"
};

// --type tokens ("all" or comma-separated like "A3,G2,B"), rank bound
CommandOutput cmd_wps_table(const std::string& types, int max_rank);

// field: "q" or "p:<prime>"; curve: "b2,b3"; points: "x,y;x,y;O"
CommandOutput cmd_strata(const std::string& type, const std::string& field,
                         const std::string& curve, const std::string& points);

CommandOutput cmd_abel_jacobi(const std::string& field, const std::string& curve,
                              const std::string& points);

// explicit_coeffs: empty for a seeded instance, else a JSON object
// {"b2": [...], "b3": [...], "a": {"1": [...], "x": [...], ...}} with
// rational strings or integers as entries.
CommandOutput cmd_spectral_report(int n, int k, uint64_t seed, const std::string& explicit_coeffs,
                                  bool selfcheck);

// Runs the acceptance suite; builds the payload twice to confirm
// byte-determinism.  all_pass reflects criteria plus the determinism check.
struct SelftestOutput {
  Json envelope;
  bool all_pass = false;
  std::string first_failure;
};
SelftestOutput cmd_selftest(uint64_t seed);

}  // namespace ellmod
