#include "dpp/error.hpp"
#include "dpp/io.hpp"
#include "dpp/kernel.hpp"
#include "dpp/measure.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace dpp;
using io::Json;

namespace {

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::string temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST_CASE("kernel JSON") {
  Matrix m = io::parse_kernel_json(
      R"({"n": 2, "entries": [[[0.5, 0], [0.1, -0.2]], [[0.1, 0.2], [0.25, 0]]]})");
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == Complex(0.1, -0.2));
  CHECK(m(1, 0) == Complex(0.1, 0.2));
  Matrix plain = io::parse_kernel_json(R"({"n": 1, "entries": [[0.5]]})");
  CHECK(plain(0, 0) == Complex(0.5, 0.0));

  Matrix back = io::parse_kernel_json(io::kernel_to_json(m).dump());
  CHECK(back == m);

  CHECK(code_of([] { io::parse_kernel_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_kernel_json(R"({"n": 2, "entries": [[[1,0]]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_kernel_json(R"({"n": 1, "entries": [["a"]]})"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("kernel CSV and shorthand") {
  Matrix m = io::parse_kernel_csv("0.5, 0.1\n0.1, 0.25\n");
  CHECK(m(0, 1) == Complex(0.1, 0.0));
  CHECK(m(1, 1) == Complex(0.25, 0.0));
  CHECK(code_of([] { io::parse_kernel_csv("1,2\n3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_kernel_csv("nan,0\n0,1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_kernel_csv("inf,0\n0,1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_kernel_csv("1e999,0\n0,1\n"); }) == ErrorCode::ParseError);

  Matrix d = io::parse_diag_shorthand("diag(0.5, 0.25)");
  CHECK(d.rows() == 2);
  CHECK(d(0, 0) == Complex(0.5, 0.0));
  CHECK(d(0, 1) == Complex(0.0, 0.0));
  CHECK(code_of([] { io::parse_diag_shorthand("diag(0.5,)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_diag_shorthand("diag 0.5"); }) == ErrorCode::ParseError);
}

TEST_CASE("kernel loading dispatch") {
  CHECK(io::load_kernel("diag(1,0)").rows() == 2);
  const auto csv = temp_file("dpp_io_kernel.csv", "1,0\n0,0\n");
  CHECK(io::load_kernel(csv)(0, 0) == Complex(1.0, 0.0));
  const auto json = temp_file("dpp_io_kernel.json", R"({"n":1,"entries":[[[0.3,0]]]})");
  CHECK(io::load_kernel(json)(0, 0) == Complex(0.3, 0.0));
  CHECK(code_of([] { io::load_kernel("/nonexistent/kernel.json"); }) == ErrorCode::IoError);
  std::filesystem::remove(csv);
  std::filesystem::remove(json);
}

TEST_CASE("graph JSON") {
  SimpleGraph g = io::parse_graph_json(R"({"vertices": 3, "edges": [[0,1],[2,1],[0,2]]})");
  CHECK(g.vertices() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[1] == std::pair{1, 2});
  CHECK(code_of([] { io::parse_graph_json(R"({"vertices": 3})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph_json(R"({"vertices": 3, "edges": [[0,1]]})"); }) ==
        ErrorCode::Disconnected);
}

TEST_CASE("subset JSON") {
  CHECK(io::subset_to_json(Subset{0, 2}).dump() == "[0,2]");
  CHECK(io::subset_from_json(Json::parse("[1,3]")) == Subset{1, 3});
  CHECK(io::subset_from_json(Json::parse("[]")).empty());
  CHECK(code_of([] { io::subset_from_json(Json::parse("[3,1]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::subset_from_json(Json::parse("{}")); }) == ErrorCode::ParseError);
}

TEST_CASE("pmf and histogram JSON") {
  ExactPmf pmf = full_pmf(diagonal_kernel({0.5, 0.25}));
  Json j = io::pmf_to_json(pmf);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"", "0", "1", "0,1"});
  // Values survive a dump/parse round trip bit for bit.
  Json reparsed = Json::parse(j.dump());
  CHECK(reparsed["0"].get<double>() == pmf(Subset{0}));
  CHECK(reparsed["0,1"].get<double>() == pmf(Subset{0, 1}));

  Histogram h{3, 10, 4, {{Subset{0, 2}, 3}, {Subset{1}, 5}, {Subset{}, 2}}};
  Json hj = io::histogram_to_json(h);
  CHECK(hj.dump() == R"({"n":3,"draws":10,"seed":4,"counts":{"":2,"1":5,"0,2":3}})");
}
