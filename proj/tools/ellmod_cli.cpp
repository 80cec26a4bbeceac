// Command-line front end.  Deliberately thin: parses flags, calls the C API
// of libellmod, prints the returned report, and maps status codes to exit
// codes (0 ok, 1 input error, 2 internal invariant, 3 selftest failure).

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "ellmod/ellmod.h"

namespace {

int finish(ellmod_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    ellmod_string_free(out);
  }
  if (st != ELLMOD_OK) std::fprintf(stderr, "error: %s\n", ellmod_last_error());
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ellmod " + std::string(ellmod_version()) +
               " — exact moduli tables for bundles on elliptic fibrations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format: json or md")->capture_default_str();

  // wps-table
  auto* wps = app.add_subcommand("wps-table", "weighted-projective signatures per type");
  wps->fallthrough();
  std::string types = "all";
  int max_rank = 8;
  wps->add_option("--type", types, "'all', a series letter, or tokens like A3,G2")
      ->capture_default_str();
  wps->add_option("--rank", max_rank, "maximum rank")->capture_default_str();

  // strata
  auto* strata = app.add_subcommand("strata", "kernel subsystem of a T-bundle point");
  strata->fallthrough();
  std::string s_type, s_field = "q", s_curve, s_points;
  strata->add_option("--type", s_type, "Cartan type, e.g. G2")->required();
  strata->add_option("--field", s_field, "'q' or 'p:<prime>'")->capture_default_str();
  strata->add_option("--curve", s_curve, "b2,b3 of y^2 = x^3 + b2 x + b3")->required();
  strata->add_option("--points", s_points, "images 'x,y;x,y;...' ('O' for the origin)")
      ->required();

  // abel-jacobi
  auto* aj = app.add_subcommand("abel-jacobi", "SL(n) quotient image of a divisor");
  aj->fallthrough();
  std::string a_field = "q", a_curve, a_points;
  aj->add_option("--field", a_field, "'q' or 'p:<prime>'")->capture_default_str();
  aj->add_option("--curve", a_curve, "b2,b3")->required();
  aj->add_option("--points", a_points, "divisor points 'x,y;x,y;...'")->required();

  // spectral-report
  auto* spec = app.add_subcommand("spectral-report", "SL(n) spectral cover over P^1");
  spec->fallthrough();
  int n = 2, k = 1;
  uint64_t seed = 1;
  std::string coeffs;
  bool selfcheck = false;
  spec->add_option("--n", n, "spectral degree (2..4)")->capture_default_str();
  spec->add_option("--k", k, "deg L on the base (1..3)")->capture_default_str();
  spec->add_option("--seed", seed, "seed for the random instance")->capture_default_str();
  spec->add_option("--coeffs", coeffs, "explicit coefficient JSON instead of a seeded instance");
  spec->add_flag("--selfcheck", selfcheck, "run two-chart and coherence cross-checks");

  // selftest
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->fallthrough();
  uint64_t self_seed = 1;
  self->add_option("--seed", self_seed, "seed for the randomized criteria")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  char* out = nullptr;
  ellmod_status st = ELLMOD_ERR_INPUT;
  if (wps->parsed()) {
    st = ellmod_cmd_wps_table(types.c_str(), max_rank, format.c_str(), &out);
  } else if (strata->parsed()) {
    st = ellmod_cmd_strata(s_type.c_str(), s_field.c_str(), s_curve.c_str(), s_points.c_str(),
                           format.c_str(), &out);
  } else if (aj->parsed()) {
    st = ellmod_cmd_abel_jacobi(a_field.c_str(), a_curve.c_str(), a_points.c_str(),
                                format.c_str(), &out);
  } else if (spec->parsed()) {
    st = ellmod_cmd_spectral_report(n, k, seed, coeffs.empty() ? nullptr : coeffs.c_str(),
                                    selfcheck ? 1 : 0, format.c_str(), &out);
  } else if (self->parsed()) {
    st = ellmod_cmd_selftest(self_seed, &out);
  }
  return finish(st, out);
}
