#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "vmrt/cli.hpp"
#include "vmrt/poly_io.hpp"
#include "vmrt/vmrt.hpp"

using namespace vmrt;
using cli::Command;
using cli::RunConfig;
using json = nlohmann::json;

namespace {

std::string write_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "vmrt_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text << "\n";
  return path.string();
}

RunConfig config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  cfg.json = true;
  return cfg;
}

}  // namespace

TEST_CASE("eco-cert reports the square root") {
  RunConfig cfg = config(Command::EcoCert);
  cfg.coeffs = "4,6,4,1";
  auto r = cli::run(cfg);
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["sigma"] == json::array({"2", "1"}));
  CHECK(j["seed"].is_null());

  cfg.coeffs = "0,0,0,1";
  j = json::parse(cli::run(cfg).out);
  CHECK(j["pass"] == false);
  CHECK(j["residuals"] == json::array({"0", "1"}));

  cfg.coeffs = "1,2,3";
  r = cli::run(cfg);
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["error"] == "OddLength");

  cfg.coeffs = "1,two";
  CHECK(cli::run(cfg).exit_code == 1);
}

TEST_CASE("variation on the explicit family") {
  RunConfig cfg = config(Command::Variation);
  cfg.family = "m2";
  cfg.n = 4;
  cfg.seed = 9;
  auto r = cli::run(cfg);
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rank_dmu"] == 4);
  CHECK(j["dim_orbit"] == 16);
  CHECK(j["dim_intersection"] == 0);
  CHECK(j["maximal"] == true);
  CHECK(j["seed"] == 9);
  // fixed field order
  CHECK(r.out.find("\"n\"") < r.out.find("\"rank_dmu\""));
  CHECK(r.out.find("\"maximal\"") < r.out.find("\"seed\""));

  cfg.family = "mge3";
  cfg.m = 2;
  CHECK(cli::run(cfg).exit_code == 2);
  cfg.family = "bogus";
  CHECK(cli::run(cfg).exit_code == 1);
}

TEST_CASE("variation on a general f, with recentering") {
  RunConfig cfg = config(Command::Variation);
  cfg.f_path = write_file("family.poly",
                          "t0^4 + t0*t1^3 + t0*t2^3 + t0*t3^3 + t0*t4^3 + t1^4 + t2^4 + t3^4 + t4^4\n"
                          "# mixed term\n + t1*t2*t3*t4");
  auto j = json::parse(cli::run(cfg).out);
  CHECK(j["maximal"] == true);

  cfg.f_path = write_file("scaled.poly", "2*t0^4 + t1^4 + t2^4 + t3^4");
  auto r = cli::run(cfg);
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["error"] == "NormalizationViolated");
  cfg.point = "0,0,0";
  CHECK(cli::run(cfg).exit_code == 0);
}

TEST_CASE("eqs, eco-line and converse agree with the library") {
  const std::string b3 = write_file("b3.poly", "z1^3 + 2*z2^3 - z3^3 + z1*z2*z3");
  const std::string b4 = write_file("b4.poly", "z1^4 + z2^4 + 3*z3^4 - z1^2*z2*z3 + z2^2*z3^2");
  RunConfig conv = config(Command::Converse);
  conv.b_paths = {b3, b4};
  auto r = cli::run(conv);
  REQUIRE(r.exit_code == 0);
  const std::string f_text = json::parse(r.out)["f"];
  // printed polynomials re-parse to the same polynomial
  CHECK(format(parse_polynomial(f_text, ambient_vars(3))) == f_text);

  RunConfig eqs = config(Command::Eqs);
  eqs.f_path = write_file("converse.poly", f_text);
  eqs.point = "0,0,0";
  auto j = json::parse(cli::run(eqs).out);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 3);
  CHECK(j["equations"][0]["degree"] == 3);
  CHECK(j["equations"][0]["poly"] == "z1^3 + 2*z2^3 + z1*z2*z3 - z3^3");
  CHECK(parse_polynomial(j["equations"][1]["poly"].get<std::string>(), direction_vars(3)) ==
        parse_polynomial("z1^4 + z2^4 + 3*z3^4 - z1^2*z2*z3 + z2^2*z3^2", direction_vars(3)));

  RunConfig line = config(Command::EcoLine);
  line.f_path = write_file("square.poly", "t0^4 + 2*t0^2*t1^2 + t1^4 + t2^4 - t2^4 + t3^2*t0^2 - t3^2*t0^2");
  line.point = "1,2,3";
  line.dir = "1,0,0";
  j = json::parse(cli::run(line).out);
  CHECK(j["eco_line"] == true);
  CHECK(j["equations_vanish"] == true);

  eqs.point = "0,0";
  CHECK(cli::run(eqs).exit_code == 2);
  eqs.f_path = write_file("bad.poly", "t0^4 + q1");
  eqs.point = "0,0,0";
  CHECK(cli::run(eqs).exit_code == 1);
  eqs.f_path = "/nonexistent/f.poly";
  CHECK(cli::run(eqs).exit_code == 1);
}

TEST_CASE("base point on the branch divisor is a structured error") {
  RunConfig cfg = config(Command::Eqs);
  cfg.f_path = write_file("branch.poly", "t0^3*t1 + t1^4 + t2^4 + t3^4");
  cfg.point = "0,0,0";
  cfg.seed = 5;
  auto r = cli::run(cfg);
  CHECK(r.exit_code == 2);
  auto j = json::parse(r.out);
  CHECK(j["error"] == "BasePointOnBranch");
  CHECK(j["seed"] == 5);

  cfg.json = false;
  r = cli::run(cfg);
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("BasePointOnBranch") != std::string::npos);
}

TEST_CASE("count needs a seed and is deterministic") {
  RunConfig cfg = config(Command::Count);
  cfg.f_path = write_file("quartic.poly",
                          "t0^4 + t0*t1^3 + t1^4 + 2*t0*t2^3 + t2^4 + t0*t1*t2*t3 - t1^2*t2*t3 + t2^2*t3^2 - t0*t3^3 + 3*t3^4");
  cfg.point = "1/3,2,5";
  CHECK(cli::run(cfg).exit_code == 1);
  cfg.seed = 7;
  auto first = cli::run(cfg);
  REQUIRE(first.exit_code == 0);
  auto j = json::parse(first.out);
  CHECK(j["degree"] == 12);
  CHECK(j["squarefree"] == true);
  CHECK(cli::run(cfg).out == first.out);

  // sampled base point
  cfg.point.reset();
  auto sampled = cli::run(cfg);
  REQUIRE(sampled.exit_code == 0);
  CHECK(json::parse(sampled.out)["degree"] == 12);
  CHECK(cli::run(cfg).out == sampled.out);
}
