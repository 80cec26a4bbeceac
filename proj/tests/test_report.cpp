#include <doctest.h>

#include "report.hpp"

using namespace ellmod;

TEST_CASE("wps-table rows and identities") {
  auto out = cmd_wps_table("A", 3);
  const Json& rows = out.envelope.at("payload").at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("degrees") == Json::array({0, 2}));
  CHECK(rows[1].at("degrees") == Json::array({0, 2, 3}));
  CHECK(rows[2].at("degrees") == Json::array({0, 2, 3, 4}));
  for (const auto& row : rows)
    for (const auto& w : row.at("weights")) CHECK(w.get<int64_t>() == 1);

  auto b3 = cmd_wps_table("B3", 8);
  const Json& row = b3.envelope.at("payload").at("rows").at(0);
  CHECK(row.at("weights") == Json::array({1, 1, 2, 1}));
  CHECK(row.at("degrees") == Json::array({0, 2, 4, 6}));

  auto all = cmd_wps_table("all", 8);
  CHECK(all.envelope.at("payload").at("identities_all_pass").get<bool>());
  // A1..A8, B2..B8, C2..C8, D3..D8, E6..E8, F4, G2
  CHECK(all.envelope.at("payload").at("row_count").get<int>() == 33);
  // E8 rows carry the family flag
  bool saw_e8 = false;
  for (const auto& r : all.envelope.at("payload").at("rows"))
    if (r.at("type") == "E8") {
      saw_e8 = true;
      CHECK(r.at("family_pairing_unknown").get<bool>());
    }
  CHECK(saw_e8);

  CHECK_THROWS_AS(cmd_wps_table("Z9", 8), InputError);
}

TEST_CASE("strata command") {
  // exotic A2^long: T = (4,4) has order 3 on y^2 = x^3 - x over F_11, and the
  // fundamental-weight images (2T, O) kill exactly the six long roots
  auto out = cmd_strata("G2", "p:11", "-1,0", "4,7;O");
  const Json& p = out.envelope.at("payload");
  CHECK(p.at("subsystem_type") == "A2^long");
  CHECK_FALSE(p.at("is_levi").get<bool>());
  CHECK(p.at("h0_adP").get<int>() == 8);
  CHECK(p.at("nilpotent_dim").get<int>() == 6);

  // all-zero images give the full system
  auto full = cmd_strata("G2", "p:11", "-1,0", "O;O");
  CHECK(full.envelope.at("payload").at("subsystem_type") == "G2");
  CHECK(full.envelope.at("payload").at("kernel_root_count").get<int>() == 12);

  // generic images over F_1009
  auto gen = cmd_strata("G2", "p:1009", "3,5", "5,542;510,907");
  CHECK(gen.envelope.at("payload").at("subsystem_type") == "0");
  CHECK(gen.envelope.at("payload").at("h0_adP").get<int>() == 2);
  CHECK(gen.envelope.at("payload").at("nilpotent_dim").get<int>() == 0);

  // a point off the curve is an input error
  CHECK_THROWS_AS(cmd_strata("G2", "p:11", "-1,0", "1,1;O"), InputError);
  CHECK_THROWS_AS(cmd_strata("G2", "p:11", "-1,0", "O"), InputError);  // wrong count
}

TEST_CASE("abel-jacobi command") {
  auto out = cmd_abel_jacobi("q", "-1,1", "1,1;1,-1");
  const Json& p = out.envelope.at("payload");
  CHECK(p.at("rr_basis") == Json::array({"1", "x"}));
  for (const auto& r : p.at("vanishing_residuals")) CHECK(r.get<std::string>() == "0");

  // three collinear points: y = 1 on y^2 = x^3 - x + 1
  auto line = cmd_abel_jacobi("q", "-1,1", "1,1;0,1;-1,1");
  CHECK(line.envelope.at("payload").at("image") == Json::array({"1", "0", "-1"}));

  // invalid triple: error message carries the nonzero sum
  try {
    cmd_abel_jacobi("q", "-1,1", "1,1;0,1");
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("does not sum") != std::string::npos);
  }
}

TEST_CASE("spectral-report command is deterministic and round-trips") {
  auto a = cmd_spectral_report(2, 1, 20250801, "", true);
  auto b = cmd_spectral_report(2, 1, 20250801, "", true);
  CHECK(a.envelope.dump() == b.envelope.dump());
  CHECK(a.envelope.at("payload").at("branch_degree").get<int>() == 14);
  CHECK(a.envelope.at("payload").at("genus").get<int>() == 6);
  CHECK(a.envelope.at("payload").at("selfcheck_ok").get<bool>());

  // JSON round-trip: parse(dump) == original
  Json reparsed = Json::parse(a.envelope.dump());
  CHECK(reparsed == a.envelope);
  CHECK(reparsed.dump() == a.envelope.dump());

  // explicit coefficients with degree drops: y^2 = x^3 + s x + 1 with the
  // section 1 + (2+s) x.  The family degenerates over s = infinity, so the
  // report declines the genus claim: three finite branch points are visible
  // but the infinity certificate fails.
  std::string coeffs = R"({"b2": [0, 1], "b3": [1], "a": {"1": [1], "x": [2, 1]}})";
  auto c = cmd_spectral_report(2, 1, 0, coeffs, false);
  CHECK(c.envelope.at("payload").at("n").get<int>() == 2);
  CHECK(c.envelope.at("input").at("coefficients_explicit").get<bool>());
  CHECK(c.envelope.at("payload").at("branch_degree").get<int>() == 3);
  CHECK(c.envelope.at("payload").at("branch_squarefree").get<bool>());
  CHECK_FALSE(c.envelope.at("payload").at("no_infinity_branching").get<bool>());
  CHECK_FALSE(c.envelope.at("payload").at("genus_asserted").get<bool>());
  CHECK_FALSE(c.envelope.at("payload").contains("genus"));

  // malformed coefficient JSON is an input error
  CHECK_THROWS_AS(cmd_spectral_report(2, 1, 0, "{", false), InputError);
  CHECK_THROWS_AS(cmd_spectral_report(5, 1, 0, "", false), InputError);
}

TEST_CASE("markdown rendering") {
  auto out = cmd_wps_table("G2", 8);
  std::string md = out.render("md");
  CHECK(md.find("| type |") != std::string::npos);
  CHECK(md.find("G2") != std::string::npos);
  std::string js = out.render("json");
  CHECK(js.find("\"command\": \"wps-table\"") != std::string::npos);
  CHECK_THROWS_AS(out.render("xml"), InputError);

  // nested payloads render as an indented list
  auto strata = cmd_strata("G2", "p:11", "-1,0", "O;O");
  std::string smd = strata.render("md");
  CHECK(smd.find("- subsystem_type: \"G2\"") != std::string::npos);
  CHECK(smd.find("- is_levi: true") != std::string::npos);
}

TEST_CASE("envelope carries conventions and version") {
  auto out = cmd_wps_table("A1", 8);
  CHECK(out.envelope.at("version").get<std::string>() == kVersion);
  CHECK(out.envelope.at("conventions").contains("weight_degree_pairing"));
  CHECK(out.envelope.at("conventions").contains("discriminant_sign"));
}
