#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "argp/io.hpp"
#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "argp");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = argp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

argp::io::json parse(const Result& r) { return argp::io::json::parse(r.out); }

}  // namespace

TEST_CASE("crossings report") {
  const Result r = run({"crossings", "--poly", R"({"real_coeffs": [0, 0, 1]})", "--line", "imag-axis"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  CHECK(j.at("count") == 4);
  CHECK(j.contains("config_echo"));
}

TEST_CASE("winding and zero classification") {
  const Result w = run({"winding", "--poly", R"({"real_coeffs": [0, 0, 0, 1]})"});
  REQUIRE(w.code == 0);
  CHECK(parse(w).at("winding") == 3);

  const Result z = run({"count-zeros", "--poly", R"({"real_coeffs": [0, -1, 1]})"});
  REQUIRE(z.code == 0);
  CHECK(parse(z).at("m") == 1);
  CHECK(parse(z).at("lambda") == 1);
}

TEST_CASE("verify subcommands") {
  const Result a = run({"verify", "--poly", R"({"real_coeffs": [1, 4, 6, 4, 1]})"});
  CHECK(a.code == 0);
  CHECK(parse(a).at("holds") == true);

  const Result b = run({"verify-piecewise", "--poly", R"({"coeffs": [[-1, -1], 1]})", "--curve", "square(0, 2)",
                        "--line", R"({"angle": 1.0})"});
  CHECK(b.code == 0);
  CHECK(parse(b).at("bound") == 1);

  const Result d = run({"detour", "--poly", R"({"real_coeffs": [-1, 1]})", "--epsilon", "0.1"});
  CHECK(d.code == 0);
  CHECK(parse(d).at("holds") == true);
}

TEST_CASE("trig-check") {
  const Result r = run({"trig-check", "--coeffs", "1,2"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  CHECK(j.at("Z_P") == 2);
  CHECK(j.at("Z_Q") == 0);
  CHECK(j.at("bound_holds") == true);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"crossings"}).code == 2);
  CHECK(run({"crossings", "--poly", "{not json"}).code == 2);
  CHECK(run({"crossings", "--poly", R"({"real_coeffs": [1]})", "--curve", "ellipse(1)"}).code == 2);
  CHECK(run({"trig-check", "--coeffs", "0,1"}).code == 2);
  CHECK(run({"trig-check", "--coeffs", "1,x"}).code == 2);
  CHECK(run({"verify", "--poly", R"({"real_coeffs": [0, 1]})", "--curve", "square(0, 2)"}).code == 2);
  CHECK(run({"detour", "--poly", R"({"real_coeffs": [-2, 1]})"}).code == 2);
}

TEST_CASE("numerical refusals") {
  const Result r = run({"winding", "--poly", R"({"real_coeffs": [-1, 1]})"});
  CHECK(r.code == 3);
  CHECK(!r.err.empty());
}

TEST_CASE("emit-samples") {
  const auto path = std::filesystem::temp_directory_path() / "argp_emit_test.csv";
  const Result r = run({"emit-samples", "--poly", R"({"real_coeffs": [0, 1]})", "--rows", "16", "--csv", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line == "t,re_gamma,im_gamma,re_f,im_f,h");
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  CHECK(rows == 16);
  std::filesystem::remove(path);
}

TEST_CASE("harness runs are deterministic") {
  const std::string config = R"({"trials": 6, "max_degree": 4, "curve_family": "square", "seed": 9})";
  const Result a = run({"harness", "--config", config});
  const Result b = run({"harness", "--config", config});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Result c = run({"harness", "--config", config, "--seed", "10"});
  CHECK(c.code == 0);
}
