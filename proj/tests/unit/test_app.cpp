#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "polyknot/app.hpp"
#include "polyknot/error.hpp"

using namespace polyknot;
using namespace polyknot::app;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "polyknot_test_app";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Ran {
  int code;
  std::string out;
  std::string err;
};

Ran run_job(const JobConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

// Exit status of the built CLI binary.
int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + POLYKNOT_CLI + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

const Check& check_named(const Reproduction& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("no check named " << name);
  return r.checks.front();
}

}  // namespace

TEST_SUITE("app") {

TEST_CASE("coefficient parsing") {
  CHECK(parse_coefficients("[0, 1, -27]") == RealPoly{0, 1, -27});
  CHECK(parse_coefficients("0 1 -27") == RealPoly{0, 1, -27});
  CHECK(parse_coefficients("0,1,-27") == RealPoly{0, 1, -27});
  CHECK(parse_coefficients("1e3, -2.5") == RealPoly{1000, -2.5});
  CHECK_THROWS_AS(parse_coefficients("1, two"), DataError);
  CHECK_THROWS_AS(parse_coefficients(""), DataError);
}

TEST_CASE("curve parsing") {
  const auto c = parse_curve(R"({"x":[0,1],"y":[0,0,0,1]})");
  CHECK(c.x == RealPoly{0, 1});
  CHECK(c.y == RealPoly{0, 0, 0, 1});
  CHECK_FALSE(c.z.has_value());
  CHECK_THROWS_AS(c.knot(), DomainError);

  const auto k = parse_curve(R"({"x":[0,1,-27,0,1],"y":[0,260,0,-36,0,1]})");
  CHECK(find_double_points(k.plane()).size() == 6);

  try {
    parse_curve(R"({"x":[0,1],"y":[0,2]})");
    FAIL("equal degrees accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("deg x < deg y") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_curve(R"({"x":[0,1],"y":[0,0,1],"z":[0,0,1]})"), DomainError);
  CHECK_THROWS_AS(parse_curve(R"({"x":[0,1]})"), Error);
  CHECK_THROWS_AS(parse_curve("not json"), Error);
  CHECK_THROWS_AS(parse_curve(R"({"x":[0,"a"],"y":[0,0,1]})"), Error);
  CHECK(parse_curve(R"({"x":[0,1],"y":[0,0,1],"z":[0,0,0,1]})").knot().h == RealPoly{0, 0, 0, 1});
}

TEST_CASE("presets") {
  CHECK(preset_names() == std::vector<std::string>{"5_2", "6_2"});
  CHECK(preset("5_2").variants.size() == 2);
  CHECK(preset("6_2").published_pairs.size() == 6);
  CHECK_THROWS_AS(preset("7_1"), DomainError);
}

TEST_CASE("bounds command") {
  JobConfig cfg;
  cfg.command = "bounds";
  cfg.degree = 6;
  const auto r = run_job(cfg);
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["crossing"] == 6);
  CHECK(j["bridge"] == 2);
  CHECK(j["superbridge"] == 3);

  cfg.degree.reset();
  cfg.torus = std::pair{2, 5};
  CHECK(json::parse(run_job(cfg).out)["torus"]["superbridge"] == 4);

  cfg.torus = std::pair{2, 4};
  const auto bad = run_job(cfg);
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("validation") {
  JobConfig cfg;
  cfg.command = "nonsense";
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg.command = "sweep";
  cfg.sweep_n = 0;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg.sweep_n = 10;
  cfg.tol = -1;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  CHECK(run_job(cfg).code == 1);
}

TEST_CASE("crossings and lift commands") {
  JobConfig cfg;
  cfg.command = "crossings";
  cfg.x = "-1 0 1";
  cfg.y = "0 -1 0 1";
  auto r = run_job(cfg);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["double_points"].size() == 1);

  cfg.command = "lift";
  cfg.pattern = "U";
  cfg.degree = 3;
  r = run_job(cfg);
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.dump().find("-100") != std::string::npos);

  cfg.pattern = "UU";
  CHECK(run_job(cfg).code == 1);
}

TEST_CASE("jones and identify from a PD code") {
  JobConfig cfg;
  cfg.command = "identify";
  cfg.pd = "X(3,1,4,6) X(1,5,2,4) X(5,3,6,2)";
  const auto r = run_job(cfg);
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["invariants"]["jones"] == "-q^4+q^3+q");
  CHECK(j["match"]["name"] == "3_1");
}

TEST_CASE("reproduce 5_2") {
  const auto r = reproduce(preset("5_2"));
  CHECK(check_named(r, "double points").pass);
  CHECK(check_named(r, "lift determinant").pass);
  CHECK(check_named(r, "bracket").pass);
  CHECK(check_named(r, "writhe").pass);
  CHECK(check_named(r, "normalized f").pass);
  CHECK(check_named(r, "jones").pass);
  CHECK(check_named(r, "identification").pass);
  CHECK(r.report["conventions"]["projection_variant"].get<std::string>().rfind("(t-2)(t+4)(t^2-11)", 0) == 0);
  CHECK(r.lifted.has_value());
}

TEST_CASE("reproduce reports are byte-identical and failures exit 2") {
  const auto a = scratch("a.json"), b = scratch("b.json");
  fs::remove(a);
  fs::remove(b);
  JobConfig cfg;
  cfg.command = "reproduce";
  cfg.preset = "5_2";
  cfg.sweep_n = 2000;
  cfg.out_path = a.string();
  const auto first = run_job(cfg);
  cfg.out_path = b.string();
  const auto second = run_job(cfg);
  // The published coefficients are not reproducible, so the run reports a
  // failed check.
  CHECK(first.code == 2);
  CHECK(second.code == 2);
  REQUIRE(fs::exists(a));
  CHECK(slurp(a) == slurp(b));
  CHECK(json::parse(slurp(a))["preset"] == "5_2");
}

TEST_CASE("errors write nothing") {
  const auto p = scratch("never.json");
  fs::remove(p);
  JobConfig cfg;
  cfg.command = "crossings";
  cfg.x = "0 0 1";
  cfg.y = "0 0 1";
  cfg.out_path = p.string();
  CHECK(run_job(cfg).code == 1);
  CHECK_FALSE(fs::exists(p));
}

TEST_CASE("command-line binary") {
  const auto svg = scratch("52.svg");
  fs::remove(svg);
  CHECK(cli("bounds --degree 6") == 0);
  CHECK(cli("bounds --degree 2") == 1);
  CHECK(cli("crossings --x \"88,-22,-19,2,1\" --y \"0,96,0,-22,0,1\"") == 0);
  CHECK(cli("plot --x \"88,-22,-19,2,1\" --y \"0,96,0,-22,0,1\" --range -4.5,4.3 --svg " + svg.string()) == 0);
  CHECK(slurp(svg).find("<circle") != std::string::npos);
  CHECK(cli("jones --pd \"X(6,3,1,4) X(4,1,5,2) X(2,5,3,6)\"") == 0);
  CHECK(cli("sweep --x 0,1 --y 0,0,0,1 --z 0,0,0,0,0,1 --sweep-n 200") == 0);
  CHECK(cli("reproduce 9_9") == 1);
  CHECK(cli("nonsense") != 0);
  CHECK(cli("crossings --x 0,1 --y 0,2") == 1);
}

}  // TEST_SUITE
