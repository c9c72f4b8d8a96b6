#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jointspec/cli/commands.hpp"
#include "jointspec/cli/graph_io.hpp"
#include "jointspec/cli/report.hpp"
#include "support.hpp"

using namespace jointspec;
using namespace testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "jointspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("jointspec_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

WeightedGraph parse(const std::string& text, cli::GraphFormat f = cli::GraphFormat::edge_list) {
  std::istringstream in(text);
  return cli::parse_graph(in, f);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("edge-list parsing") {
  CHECK(parse("1 2\n") == P2());
  CHECK(parse("1 2\n2 3\n1 3\n") == K3());
  CHECK(parse("# comment\n\n1 2  # trailing\n") == P2());
  const auto w = parse("1 2 0.5\n2 1 0.25\n");
  CHECK(w(0, 1) == doctest::Approx(0.75));
  CHECK(parse("2\n0 1\n1 0\n", cli::GraphFormat::dense) == P2());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH(parse("1 2\n1 x\n"), doctest::Contains(":2:"));
  CHECK_THROWS_WITH(parse("1 2\n0 3\n"), doctest::Contains(":2:"));
  CHECK_THROWS_WITH(parse("1 2 3 4\n"), doctest::Contains(":1:"));
  CHECK_THROWS_WITH(parse("2\n0 1\n0.5 0\n", cli::GraphFormat::dense), doctest::Contains("symmetric"));
  CHECK_THROWS_AS(parse("2\n0 1\n", cli::GraphFormat::dense), cli::ParseError);
}

TEST_CASE("dense dump round trip") {
  Rng rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const WeightedGraph g(graphs::random_integer_symmetric(5, -2, 3, rng));
    const auto edge = parse(cli::dump_edge_list(g));
    if (edge.size() != g.size()) continue;  // trailing isolated vertices are not representable
    CHECK(parse(cli::dump_dense(edge), cli::GraphFormat::dense) == edge);
  }
  const auto g = parse("1 2 1.5\n2 3\n3 3 -2\n");
  CHECK(parse(cli::dump_dense(g), cli::GraphFormat::dense) == g);
}

TEST_CASE("moments prints the exact value") {
  const auto path = temp_file("p2.txt", "1 2\n");
  const auto r = run({"moments", "--graph", path, "--k", "1,1"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out == "-1\n");
}

TEST_CASE("measure lists two half-weight atoms for P2") {
  const auto path = temp_file("p2m.txt", "1 2\n");
  const auto r = run({"measure", "--graph", path, "--out", "csv"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("name,lhs,rhs,abs_gap,tol,pass\n") == 0);
  CHECK(r.out.find("\"atom (-1, 1)\",0.49999999999999") != std::string::npos);
  CHECK(r.out.find("\"atom (1, -1)\",0.49999999999999") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and name caps") {
  CHECK(run({"moments", "--gen", "path:2", "--k", "1,1", "--bogus"}).code == cli::kUsageError);
  CHECK(run({"moments", "--gen", "path:2"}).code == cli::kUsageError);
  const auto big = run({"measure", "--gen", "path:10"});
  CHECK(big.code == cli::kUsageError);
  CHECK(big.err.find("9") != std::string::npos);
  const auto trunc = run({"hikes", "--gen", "complete:3", "--trunc", "11"});
  CHECK(trunc.code == cli::kUsageError);
  CHECK(trunc.err.find("10") != std::string::npos);
  CHECK(run({"verify", "--random", "--tol", "nope=1"}).code == cli::kUsageError);
  CHECK(run({"clt", "--gen", "path:3", "--merge", "4"}).code == cli::kUsageError);
  const auto bad = run({"moments", "--graph", temp_file("bad.txt", "1 2\nfoo\n"), "--k", "1,1"});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find(":2:") != std::string::npos);
}

TEST_CASE("help documents the CSV schema") {
  const auto r = run({"--help"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("name,lhs,rhs,abs_gap,tol,pass") != std::string::npos);
}

TEST_CASE("clt and obata reports") {
  const auto r = run({"clt", "--gen", "complete:3", "--merge", "1", "--k", "2"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto o = run({"obata", "--gen", "star:3", "--root", "1", "--out", "csv"});
  CHECK(o.code == cli::kPass);
}

TEST_CASE("hikes reconciles exactly") {
  const auto r = run({"hikes", "--gen", "complete:3", "--subset", "1", "--trunc", "8"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("zeta = 1/det(I-zA)  1    0    3    2    9    12   31    54   117\n") != std::string::npos);
  CHECK(r.out.find("coefficient checks agree") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--random", "--suite", "moment_oracle", "--suite", "mgf", "--trials", "5", "--seed", "3"},
           {"hikes", "--gen", "gnp:5:0.5", "--seed", "9", "--out", "csv"},
           {"measure", "--gen", "gnp:5:0.6", "--seed", "4"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify on a user graph") {
  const auto r = run({"verify", "--gen", "cycle:5", "--suite", "moment_oracle", "--suite", "reconciliation"});
  CHECK(r.code == cli::kPass);
  CHECK(r.out.find("2/2 suites passed") != std::string::npos);
}

}
