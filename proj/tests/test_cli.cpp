#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "saddle/matrix_io.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "saddle");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = saddle::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const saddle::MatrixSource& m) {
  const auto path = fs::temp_directory_path() / ("saddle_cli_" + name);
  std::ofstream f(path);
  saddle::write_matrix(f, m);
  return path.string();
}

std::string write_tmp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("saddle_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("ssp on the example matrices") {
  const auto saddle9 = write_tmp("saddle9.txt", fixtures::saddle9());
  for (const char* algo : {"auto", "baseline", "simple", "fast", "alt"}) {
    const auto r = run({"ssp", saddle9, "--algo", algo, "--verify"});
    REQUIRE(r.code == 0);
    const auto j = r.j();
    CHECK(j["result"] == "ssp_found");
    CHECK(j["row"] == 5);
    CHECK(j["col"] == 5);
    CHECK(j["value"] == 0.0);
    CHECK(j["verified"] == true);
    CHECK(j["queries"].get<int>() > 0);
    CHECK(j.contains("elapsed_ms"));
  }
  const auto m3 = write_tmp("m3.txt", fixtures::m3());
  CHECK(run({"ssp", m3}).j()["result"] == "no_ssp");
  CHECK(run({"test-value", m3, "--value", "4"}).j()["verdict"] == "absent");
  CHECK(run({"test-value", m3, "--value", "-10"}).j()["verdict"] == "greater");
  CHECK(run({"test-value", saddle9, "--value", "0"}).j()["verdict"] == "found");
}

TEST_CASE("psp, sp-value, sp-locate, oracle") {
  const auto m3 = write_tmp("m3b.txt", fixtures::m3());
  auto j = run({"psp", m3, "--algo", "baseline", "--verify"}).j();
  CHECK(j["row"] == 2);
  CHECK(j["value"] == 4.0);
  CHECK(j["verified"] == true);
  CHECK(j["queries"] == 5);
  CHECK(run({"psp", m3, "--algo", "alt"}).code == 2);

  const auto saddle9 = write_tmp("saddle9b.txt", fixtures::saddle9());
  j = run({"sp-value", saddle9}).j();
  CHECK(j["value"] == 0.0);
  CHECK(j["assumes_sp_exists"] == true);

  j = run({"sp-locate", saddle9, "--value", "0"}).j();
  REQUIRE(j["saddlepoints"].size() == 1);
  CHECK(j["saddlepoints"][0]["row"] == 5);

  j = run({"oracle", m3}).j();
  CHECK(j["C"] == 2.0);
  CHECK(j["R"] == 6.0);
  CHECK(j["ssp"].is_null());
  CHECK(j["psp_count"] == 5);
}

TEST_CASE("gen output parses back and is deterministic") {
  const auto a = run({"gen", "--family", "planted-sp", "--m", "6", "--n", "8", "--seed", "4",
                      "--multiplicity", "3"});
  REQUIRE(a.code == 0);
  const auto b = run({"gen", "--family", "planted-sp", "--m", "6", "--n", "8", "--seed", "4",
                      "--multiplicity", "3"});
  CHECK(a.out == b.out);
  const auto path = write_tmp("gen.txt", a.out);
  const auto j = run({"sp-locate", path, "--value", "0"}).j();
  CHECK(j["saddlepoints"].size() == 3);

  CHECK(run({"gen", "--family", "planted-sp", "--m", "2", "--n", "2", "--multiplicity", "3"}).code == 2);
  CHECK(run({"gen", "--family", "bogus", "--m", "2", "--n", "2"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
  const auto bad = write_tmp("bad.txt", std::string("2 2\n1 2\n3\n"));
  auto r = run({"ssp", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("expected 2 values") != std::string::npos);
  CHECK(run({"ssp", "/nonexistent/matrix.txt"}).code == 2);
  CHECK(run({"ssp", bad, "--algo", "quick"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bench writes the CSV schema") {
  const auto path = (fs::temp_directory_path() / "saddle_cli_bench.csv").string();
  const auto r = run({"bench", "--sizes", "64,128", "--families", "random,planted-ssp", "--algos",
                      "baseline,fast,alt", "--seed", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("budget violations: 0") != std::string::npos);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "algorithm,m,n,seed,family,queries,comparisons,elapsed_ns,outcome");
  std::size_t rows = 0;
  for (std::string line; std::getline(f, line);) ++rows;
  CHECK(rows == 2 * 2 * 3);
}
