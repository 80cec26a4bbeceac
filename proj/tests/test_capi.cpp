// Exercises the shared-library surface exactly as an external client would:
// through ellmod.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "ellmod/ellmod.h"

TEST_CASE("version and error state") {
  CHECK(std::string(ellmod_version()) == "0.1.0");
  ellmod_rootsys* rs = nullptr;
  CHECK(ellmod_rootsys_create('Z', 3, &rs) == ELLMOD_ERR_INPUT);
  CHECK(std::string(ellmod_last_error()).find("inadmissible") != std::string::npos);
  CHECK(rs == nullptr);
}

TEST_CASE("root system handles") {
  ellmod_rootsys* rs = nullptr;
  REQUIRE(ellmod_rootsys_create('G', 2, &rs) == ELLMOD_OK);
  REQUIRE(rs != nullptr);

  int64_t roots = 0;
  CHECK(ellmod_rootsys_root_count(rs, &roots) == ELLMOD_OK);
  CHECK(roots == 12);

  int64_t det = 0;
  CHECK(ellmod_rootsys_cartan_det(rs, &det) == ELLMOD_OK);
  CHECK(det == 1);

  int64_t buf[16];
  int written = 0;
  CHECK(ellmod_rootsys_wps_weights(rs, buf, 16, &written) == ELLMOD_OK);
  REQUIRE(written == 3);
  CHECK(buf[0] == 1);
  CHECK(buf[1] == 2);
  CHECK(buf[2] == 1);

  CHECK(ellmod_rootsys_invariant_degrees(rs, buf, 16, &written) == ELLMOD_OK);
  REQUIRE(written == 3);
  CHECK(buf[0] == 0);
  CHECK(buf[1] == 2);
  CHECK(buf[2] == 6);

  // undersized buffer is an input error, not a crash
  CHECK(ellmod_rootsys_wps_weights(rs, buf, 1, &written) == ELLMOD_ERR_INPUT);

  ellmod_rootsys_free(rs);
}

TEST_CASE("curve handles") {
  ellmod_curve* c = nullptr;
  REQUIRE(ellmod_curve_create("q", "-1", "0", &c) == ELLMOD_OK);
  int torsion = 0;
  CHECK(ellmod_curve_two_torsion_count(c, &torsion) == ELLMOD_OK);
  CHECK(torsion == 4);
  int64_t n = 0;
  CHECK(ellmod_curve_point_count(c, &n) == ELLMOD_ERR_INPUT);  // rational field
  ellmod_curve_free(c);

  REQUIRE(ellmod_curve_create("p:11", "-1", "0", &c) == ELLMOD_OK);
  CHECK(ellmod_curve_point_count(c, &n) == ELLMOD_OK);
  CHECK(n == 12);
  ellmod_curve_free(c);

  CHECK(ellmod_curve_create("q", "0", "0", &c) == ELLMOD_ERR_INPUT);  // singular
  CHECK(ellmod_curve_create("p:4", "1", "1", &c) == ELLMOD_ERR_INPUT);  // not prime
}

TEST_CASE("wps-table command through the C API") {
  char* out = nullptr;
  REQUIRE(ellmod_cmd_wps_table("A3,B3", 8, "json", &out) == ELLMOD_OK);
  REQUIRE(out != nullptr);
  std::string s(out);
  CHECK(s.find("\"command\": \"wps-table\"") != std::string::npos);
  CHECK(s.find("A3") != std::string::npos);
  CHECK(s.find("B3") != std::string::npos);
  ellmod_string_free(out);

  out = nullptr;
  CHECK(ellmod_cmd_wps_table("bogus", 8, "json", &out) == ELLMOD_ERR_INPUT);
  CHECK(out == nullptr);
}

TEST_CASE("abel-jacobi command through the C API") {
  char* out = nullptr;
  REQUIRE(ellmod_cmd_abel_jacobi("q", "-1,1", "1,1;1,-1", "json", &out) == ELLMOD_OK);
  std::string s(out);
  CHECK(s.find("vanishing_residuals") != std::string::npos);
  ellmod_string_free(out);

  out = nullptr;
  CHECK(ellmod_cmd_abel_jacobi("q", "-1,1", "1,1;0,1", "json", &out) == ELLMOD_ERR_INPUT);
  CHECK(std::string(ellmod_last_error()).find("does not sum") != std::string::npos);
}

TEST_CASE("spectral-report determinism through the C API") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ellmod_cmd_spectral_report(2, 1, 42, nullptr, 0, "json", &a) == ELLMOD_OK);
  REQUIRE(ellmod_cmd_spectral_report(2, 1, 42, nullptr, 0, "json", &b) == ELLMOD_OK);
  CHECK(std::strcmp(a, b) == 0);
  ellmod_string_free(a);
  ellmod_string_free(b);
}
