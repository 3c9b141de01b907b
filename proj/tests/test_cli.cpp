#include "cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dpp");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = dpp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

/// Runs the installed binary through the shell and captures stdout.
std::string run_binary(const std::string &env, const std::string &args) {
  const std::string command = env + " '" DPP_TOOL_PATH "' " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(command.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
    out.append(buf.data(), got);
  return out;
}

std::string write_temp(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST_CASE("prob") {
  auto r = run({"prob", "--kernel", "diag(0.5,0.25)", "--subset", "0", "--mode", "inclusion"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"value\":0.5}\n");

  auto e = run({"prob", "--kernel", "diag(0.5,0.25)", "--subset", "0", "--mode", "elementary"});
  CHECK(nlohmann::json::parse(e.out)["value"].get<double>() == doctest::Approx(0.375));

  auto v = run({"prob", "--kernel", "diag(0.5,0.25)", "--subset", "0,1", "--mode", "void"});
  CHECK(nlohmann::json::parse(v.out)["value"].get<double>() == doctest::Approx(0.375));

  CHECK(run({"prob", "--kernel", "diag(0.5,0.25)", "--subset", "5", "--mode", "inclusion"})
            .status == 1);
  CHECK(run({"prob", "--kernel", "diag(0.5,0.25)", "--subset", "0", "--mode", "bogus"}).status ==
        2);
}

TEST_CASE("validate and pmf") {
  auto r = run({"validate", "--kernel", "diag(0.5,0.25)"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["n"] == 2);

  CHECK(run({"validate", "--kernel", "diag(1.5,0)"}).status == 1);
  CHECK(run({"validate", "--kernel", "diag(nan,0)"}).status == 2);
  CHECK(run({"validate", "--kernel", "/nonexistent.json"}).status == 2);

  auto p = nlohmann::json::parse(run({"pmf", "--kernel", "diag(0.5,0.25)"}).out);
  CHECK(p["pmf"]["0,1"].get<double>() == doctest::Approx(0.125));

  std::string big = "diag(";
  for (int i = 0; i < 21; ++i)
    big += i ? ",0.5" : "0.5";
  big += ")";
  CHECK(run({"pmf", "--kernel", big}).status == 3);
}

TEST_CASE("sample and counts") {
  auto r = run({"sample", "--kernel", "diag(1,0)", "--draws", "100", "--seed", "1"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["counts"]["0"] == 100);
  CHECK(j["draws"] == 100);
  CHECK(run({"sample", "--kernel", "diag(1,0)", "--draws", "0"}).status == 1);
  CHECK(run({"sample", "--kernel", "diag(1,0)"}).status == 2);

  auto c = nlohmann::json::parse(run({"counts", "--kernel", "diag(0.5,0.25)"}).out);
  CHECK(c["pmf"][0].get<double>() == doctest::Approx(0.375));
  CHECK(c["moments"]["variance"].get<double>() == doctest::Approx(0.4375));
}

TEST_CASE("fock-check") {
  auto kernel = write_temp("dpp_cli_kernel.csv", "0.5,0.1,0\n0.1,0.4,0.2\n0,0.2,0.3\n");
  auto r = run({"fock-check", "--kernel", kernel, "--m", "2", "--basis", "random"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["diagonal_passed"] == true);
  CHECK(j["key_identity"]["passed"] == true);
  std::filesystem::remove(kernel);
}

TEST_CASE("experiments") {
  auto cue = run({"experiment", "cue", "--n", "8", "--arc-length", "3.14159", "--replicates",
                  "200", "--seed", "3"});
  CHECK(cue.status == 0);
  CHECK(nlohmann::json::parse(cue.out)["replicates"] == 200);

  auto graph = write_temp("dpp_cli_graph.json", R"({"vertices":3,"edges":[[0,1],[1,2],[0,2]]})");
  auto ust = run({"experiment", "ust", "--graph", graph, "--draws", "2000"});
  CHECK(ust.status == 0);
  CHECK(nlohmann::json::parse(ust.out)["exact"]["tree_count"] == 3);
  auto bad = write_temp("dpp_cli_bad.json", R"({"vertices":3,"edges":[[0,1]]})");
  CHECK(run({"experiment", "ust", "--graph", bad, "--draws", "10"}).status == 1);
  std::filesystem::remove(graph);
  std::filesystem::remove(bad);
}

TEST_CASE("parse errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"nosuch"}).status == 2);
  CHECK(run({"prob", "--kernel", "diag(0.5)"}).status == 2);
}

TEST_CASE("global flags go before or after the subcommand") {
  auto before = run({"--quiet", "validate", "--kernel", "diag(0.5)"});
  auto after = run({"validate", "--kernel", "diag(0.5)", "--quiet"});
  CHECK(before.status == 0);
  CHECK(after.status == 0);
  CHECK(before.out == after.out);

  const auto path = (std::filesystem::temp_directory_path() / "dpp_cli_out.json").string();
  auto written = run({"pmf", "--kernel", "diag(0.5)", "-o", path});
  CHECK(written.status == 0);
  CHECK(written.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["n"] == 1);
  std::filesystem::remove(path);
}

TEST_CASE("binary output is independent of DPP_THREADS") {
  const std::string args = "sample --kernel 'diag(0.5,0.25,0.75)' --draws 50000 --seed 42";
  const std::string one = run_binary("DPP_THREADS=1", args);
  const std::string four = run_binary("DPP_THREADS=4", args);
  CHECK(!one.empty());
  CHECK(one == four);
  CHECK(one == run(std::vector<std::string>{"sample", "--kernel", "diag(0.5,0.25,0.75)",
                                            "--draws", "50000", "--seed", "42"})
                   .out);
}
