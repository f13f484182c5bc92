#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sphstar/report.hpp"

using namespace sphstar;

TEST_CASE("absolute and relative checks") {
  const auto a = make_check("kernels", "2,2", "k1", "triple", "z=(1,0)", cplx(1.0, 1e-9), cplx(1.0), 1e-8);
  CHECK(a.pass);
  CHECK(a.abs_err == doctest::Approx(1e-9));
  const auto r = make_check("kernels", "2,2", "k2", "triple", "", cplx(1001.0), cplx(1000.0), 1e-4, true);
  CHECK_FALSE(r.pass);
  const auto r2 = make_check("kernels", "2,2", "k3", "triple", "", cplx(1000.05), cplx(1000.0), 1e-4, true);
  CHECK(r2.pass);
  const auto nan = make_check("kernels", "2,2", "k4", "triple", "", cplx(NAN), cplx(1.0), 1.0);
  CHECK_FALSE(nan.pass);
  CHECK(make_lower_bound("star", "3,4", "s1", "slope", "", 1.95, 1.8).pass);
  CHECK_FALSE(make_lower_bound("star", "3,4", "s1", "slope", "", 1.5, 1.8).pass);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e300, 0.0})
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("CSV layout and round trip") {
  std::vector<CheckRecord> rows = {
      make_check("kernels", "2,2", "triple.series", "kernel, Bessel form", "z=(1,0); w=\"x\"", cplx(1.5, -0.25),
                 cplx(1.5, 0.0), 1e-9),
      make_lower_bound("star", "3,4", "slope", "second order", "hbar=0.2,0.1,0.05", 1.99, 1.8)};
  std::stringstream ss;
  write_csv(ss, rows);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  CHECK(header.rfind("suite,case,check_id,measured_re,measured_im,expected_re,expected_im,abs_err,tol,pass", 0) ==
        0);
  const auto back = read_csv(ss);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].suite == rows[i].suite);
    CHECK(back[i].case_name == rows[i].case_name);
    CHECK(back[i].check_id == rows[i].check_id);
    CHECK(back[i].property == rows[i].property);
    CHECK(back[i].inputs == rows[i].inputs);
    CHECK(back[i].measured == rows[i].measured);
    CHECK(back[i].expected == rows[i].expected);
    CHECK(back[i].abs_err == rows[i].abs_err);
    CHECK(back[i].tol == rows[i].tol);
    CHECK(back[i].pass == rows[i].pass);
  }
}

TEST_CASE("JSON mirrors the CSV fields") {
  std::vector<CheckRecord> rows = {
      make_check("sphere", "2,2", "lower", "lowering", "l=1", cplx(0.5, 0.0), cplx(0.5, 0.0), 0.0)};
  std::stringstream ss;
  write_json(ss, rows);
  const auto j = nlohmann::json::parse(ss.str());
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["suite"] == "sphere");
  CHECK(j[0]["case"] == "2,2");
  CHECK(j[0]["measured_re"] == 0.5);
  CHECK(j[0]["pass"] == true);
  CHECK(j[0].contains("property"));
}

TEST_CASE("malformed CSV is rejected") {
  std::stringstream bad("suite,case\nx,y\n");
  CHECK_THROWS(read_csv(bad));
}
