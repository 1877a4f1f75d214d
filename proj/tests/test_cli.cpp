#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "stratcx/cli_app.hpp"
#include "stratcx/folan.hpp"
#include "stratcx/json_io.hpp"

using namespace stratcx;
using cli::run_cli;

namespace {

json_io::json parse(const std::string& text) { return json_io::json::parse(text); }

std::string write_pencil_file(const std::string& path, int r) {
  std::vector<int> e0(r + 1, 0), e1(r + 1, 0);
  e0[0] = 1;
  e1[1] = 1;
  const auto w = folan::fixture_pencil_monomial(r, e0, 1, e1, 1);
  json_io::save_file(path, json_io::form_to_json(w));
  return path;
}

} // namespace

TEST_CASE("strata subcommand") {
  const auto res = run_cli({"strata", "--dims", "1,1,1"});
  REQUIRE(res.exit_code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("tool") == "stratcx");
  CHECK(j.at("config").at("dims") == json_io::json::array({1, 1, 1}));
  CHECK(j.at("rows").size() == 3);
  CHECK(j.at("maximal_count") == 2);

  const auto csv = run_cli({"strata", "--dims", "1,1", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("ranks,stratum_dim") == 0);

  CHECK(run_cli({"strata", "--dims", "oops"}).exit_code == cli::kExitUsage);
  CHECK(run_cli({"strata"}).exit_code == cli::kExitUsage);
}

TEST_CASE("exact subcommand") {
  const auto res = run_cli({"exact", "--dims", "1,2,1"});
  REQUIRE(res.exit_code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("chi") == json_io::json::array({1, 1}));
  CHECK(j.at("stratum_dim") == 3);
  CHECK(j.at("half_sum_squares") == 3);
  CHECK(j.at("divisors").size() == 2);
  for (const auto& d : j.at("divisors")) CHECK(d.at("codim_in_exact") == 1);

  const auto bad = run_cli({"exact", "--dims", "2,1"});
  CHECK(bad.exit_code == cli::kExitMath);
  CHECK(bad.err.find("chi_1") != std::string::npos);
}

TEST_CASE("random-complex subcommand") {
  const auto res = run_cli({"random-complex", "--dims", "2,2,2", "--ranks", "1,1", "--seed", "9"});
  REQUIRE(res.exit_code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("measured_ranks") == json_io::json::array({1, 1}));
  const auto c = json_io::complex_from_json(j.at("complex"));
  CHECK(cxlin::verify_complex(c));

  CHECK(run_cli({"random-complex", "--dims", "1,1,1", "--ranks", "1,1", "--seed", "1"}).exit_code ==
        cli::kExitMath);
}

TEST_CASE("analyze subcommand on an integrable and a non-integrable form") {
  const std::string path = "cli_pencil_r3.json";
  write_pencil_file(path, 3);
  const auto res = run_cli({"analyze", "--form", path});
  REQUIRE(res.exit_code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("integrable") == true);
  CHECK(j.at("theorem1").at("membership") == true);
  CHECK(j.at("e") == 2);  // defaults to the form degree
  CHECK(j.at("variant") == "minus");
  CHECK(j.at("dims").size() == 2);

  // non-integrable: report is still emitted, exit code distinguishes
  std::vector<int> e0(4, 0), e1(4, 0), e2(4, 0), e3(4, 0);
  e0[0] = e1[1] = e2[2] = e3[3] = 1;
  const auto contact = folan::fixture_pencil_monomial(3, e0, 1, e1, 1) +
                       folan::fixture_pencil_monomial(3, e2, 1, e3, 1);
  json_io::save_file("cli_contact_r3.json", json_io::form_to_json(contact));
  const auto bad = run_cli({"analyze", "--form", "cli_contact_r3.json"});
  CHECK(bad.exit_code == cli::kExitMath);
  const auto jb = parse(bad.out);
  CHECK(jb.at("integrable") == false);
  CHECK_FALSE(jb.contains("ranks"));

  CHECK(run_cli({"analyze", "--form", "no_such_file.json"}).exit_code == cli::kExitUsage);
  std::remove(path.c_str());
  std::remove("cli_contact_r3.json");
}

TEST_CASE("basis and star subcommands") {
  const auto res = run_cli({"basis", "--r", "3", "--k", "1", "--e", "2"});
  REQUIRE(res.exit_code == 0);
  const auto j = parse(res.out);
  CHECK(j.at("dim") == 6);
  CHECK(j.at("closed_form_dim") == 6);

  const auto res0 = run_cli({"basis", "--r", "3", "--k", "1", "--e", "1"});
  CHECK(parse(res0.out).at("closed_form_dim").is_null());

  write_pencil_file("cli_star_a.json", 3);
  write_pencil_file("cli_star_b.json", 3);
  const auto sres = run_cli({"star", "--a", "cli_star_a.json", "--b", "cli_star_b.json"});
  REQUIRE(sres.exit_code == 0);
  const auto sj = parse(sres.out);
  CHECK(sj.at("k") == 3);
  CHECK(sj.at("twist") == 4);
  CHECK(sj.at("terms").empty());  // w * w = 0 for a pencil
  std::remove("cli_star_a.json");
  std::remove("cli_star_b.json");
}

TEST_CASE("verify subcommand exit codes and determinism") {
  const auto ok = run_cli({"verify", "--suite", "hom", "--trials", "5", "--seed", "3"});
  CHECK(ok.exit_code == 0);
  const auto j = parse(ok.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("config").at("seed") == 3);
  CHECK(j.at("config").at("trials") == 5);

  CHECK(run_cli({"verify", "--suite", "nope"}).exit_code == cli::kExitUsage);

  // identical configs give byte-identical reports
  const auto a = run_cli({"strata", "--dims", "2,2,2"});
  const auto b = run_cli({"strata", "--dims", "2,2,2"});
  CHECK(a.out == b.out);
  const auto v1 = run_cli({"verify", "--suite", "tangent", "--trials", "4", "--seed", "5"});
  const auto v2 = run_cli({"verify", "--suite", "tangent", "--trials", "4", "--seed", "5"});
  CHECK(v1.out == v2.out);
}
