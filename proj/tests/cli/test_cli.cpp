#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(ALPHASPEC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("alphaspec-cli-" + name);
}

}  // namespace

TEST_CASE("spectrum of S_6 + e matches the cubic root") {
  const auto r = cli("spectrum --family Snpe:6 --alpha 0");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["graph6"] == "E{a?");
  CHECK(j["rho"].get<double>() == doctest::Approx(2.51413692934));
  CHECK(j["perron"].size() == 6);
}

TEST_CASE("scan-alpha on a cycle is constant 2") {
  const auto r = cli("scan-alpha --family Cn:10 --steps 20");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha,rho");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.substr(line.find(',') + 1) == "2");
    ++rows;
  }
  CHECK(rows == 21);
}

TEST_CASE("enumerate emits valid graph6 and counts") {
  CHECK(cli("enumerate --class trees -n 10 --format count").out == "106\n");
  CHECK(cli("enumerate --class unicyclic -n 7 --format count").out == "33\n");
  const auto r = cli("enumerate --class connected -n 4");
  CHECK(r.out == "CF\nCL\nCN\nC]\nC^\nC~\n");
}

TEST_CASE("bounds as CSV and JSON") {
  const auto csv = cli("bounds --family Sn:4 --csv");
  REQUIRE(csv.status == 0);
  CHECK(csv.out.find("Cs,0,rowsum,2,true,upper,false,rho,1.73205080757,1.73205080757,0,true,dominating-clique") !=
        std::string::npos);
  const auto j = nlohmann::json::parse(cli("bounds --family Sn:4").out);
  CHECK(j["comparisons"]["consistent"] == true);
  CHECK(j["bounds"].size() >= 10);
}

TEST_CASE("graph sources: file with several graphs") {
  const auto file = tmp("graphs.g6");
  std::ofstream(file) << "A_\nBw\n\nC~\n";
  const auto j = nlohmann::json::parse(cli("indices --file " + file.string()).out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0]["energy"].get<double>() == doctest::Approx(2.0));
  std::filesystem::remove(file);
}

TEST_CASE("verify: the documented example and exit codes") {
  const auto json = tmp("report.json");
  const auto r = cli("verify --theorem 3.7 --n 8 --alphas 0,0.5 --json " + json.string());
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(slurp(json));
  CHECK(j["status"] == "PASS");
  int diameter_witnesses = 0;
  for (const auto& w : j["extremal_witnesses"]) diameter_witnesses += w["role"] == "diameter-max";
  CHECK(diameter_witnesses == 2 * 5);
  // On two vertices the edgeless graph ties with K_2.
  CHECK(cli("verify --theorem 4.1 --n 2 --alphas 0 -q").status == 1);
  std::filesystem::remove(json);
}

TEST_CASE("identical configurations give byte-identical artifacts") {
  const auto a = tmp("a.json"), b = tmp("b.json"), dir = tmp("ckpt");
  std::filesystem::remove_all(dir);
  cli("verify -t 2.1 --alphas 0,0.9 -q --seed 3 --json " + a.string());
  cli("verify -t 2.1 --alphas 0,0.9 -q --seed 3 -w 3 --checkpoint " + dir.string() + " --json " + b.string());
  CHECK(slurp(a) == slurp(b));
  cli("verify -t 2.1 --alphas 0,0.9 -q --seed 3 --checkpoint " + dir.string() + " --json " + b.string());
  CHECK(slurp(a) == slurp(b));
  cli("verify -t 2.1 --alphas 0,0.9 -q --seed 4 --json " + b.string());
  CHECK(slurp(a) != slurp(b));
  std::filesystem::remove_all(dir);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(cli("").status == 2);
  CHECK(cli("spectrum --alpha 2 -g A_").status == 2);
  CHECK(cli("spectrum -g '!!'").status == 2);
  CHECK(cli("spectrum --family Xx:3").status == 2);
  CHECK(cli("spectrum -g A_ --family Sn:3").status == 2);
  CHECK(cli("verify --theorem 9.9").status == 2);
  CHECK(cli("verify --theorem 3.4 --alphas 1").status == 2);
  CHECK(cli("verify --theorem 3.4 --n 7..3").status == 2);
  CHECK(cli("enumerate --class all -n 9").status == 2);
  CHECK(cli("no-such-command").status == 2);
}
