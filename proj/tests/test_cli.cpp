#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spantree/cli.hpp"
#include "spantree/recognition.hpp"

using namespace spantree;

namespace {

const std::string dir = FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::vector<std::string> corpus = {"fig1a", "fig1b_k4", "fig1c_k23", "fig1d", "fig1e",
                                         "fig1f", "fig8",     "two_k2",    "c5"};

} // namespace

TEST_CASE("count on figure fixtures") {
  CHECK(first_line(run({"count", dir + "/fig1a.txt"}).out) == "11");
  CHECK(first_line(run({"count", dir + "/fig1d.txt"}).out) == "8");
  CHECK(first_line(run({"count", dir + "/fig1e.txt"}).out) == "8");

  const Result f = run({"count", "--ferrers", "3,2,2,1"});
  CHECK(f.code == 0);
  CHECK(f.out == "12\nmethod: formula (ferrers)\n");
  CHECK(first_line(run({"count", "--complete", "4"}).out) == "16");
  CHECK(first_line(run({"count", "--multipartite", "2,3"}).out) == "12");
  CHECK(first_line(run({"count", "--multipartite", "2,3", "--method", "matrix-tree"}).out) == "12");
}

TEST_CASE("golden outputs") {
  for (const auto& name : corpus) {
    CAPTURE(name);
    CHECK(run({"classify", dir + "/" + name + ".txt"}).out == slurp(dir + "/" + name + ".classify"));
    CHECK(run({"count", dir + "/" + name + ".txt", "--verify"}).out == slurp(dir + "/" + name + ".count"));
  }
}

TEST_CASE("methods agree on the corpus") {
  for (const auto& name : corpus) {
    const std::string file = dir + "/" + name + ".txt";
    CAPTURE(name);
    const std::string reference = first_line(run({"count", file, "--method", "matrix-tree"}).out);
    for (const char* method : {"auto", "perturbation", "oracle"})
      CHECK(first_line(run({"count", file, "--method", method}).out) == reference);
    const Result formula = run({"count", file, "--method", "formula"});
    if (formula.code == 0) CHECK(first_line(formula.out) == reference);
    else CHECK(formula.code == cli::capability_exceeded);

    const std::string poly = first_line(run({"weighted", file, "--method", "matrix-tree"}).out);
    for (const char* method : {"auto", "perturbation", "oracle"})
      CHECK(first_line(run({"weighted", file, "--method", method}).out) == poly);
  }
}

TEST_CASE("json output round trips") {
  for (const auto& name : corpus) {
    const std::string file = dir + "/" + name + ".txt";
    CAPTURE(name);
    const Result r = run({"classify", file, "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"input", "classification", "method", "witnesses", "construction_order"})
      CHECK(j.contains(key));
    const Graph g = read_edge_list_file(file);
    if (j["construction_order"].is_null()) {
      CHECK(j["classification"]["special_2threshold"] == false);
      CHECK(j["witnesses"]["special_2threshold"].is_object());
      continue;
    }
    const auto order = j["construction_order"]["order"].get<std::vector<Vertex>>();
    const VertexSet u(j["construction_order"]["u"].get<std::vector<Vertex>>());
    CHECK_FALSE(check_construction_order(g, make_construction_order(g, order, u)));
  }

  const auto count = nlohmann::json::parse(run({"count", dir + "/fig1a.txt", "--json", "--verify"}).out);
  CHECK(count["count"] == "11");
  CHECK(count["verify"]["agrees"] == true);
  const auto weighted = nlohmann::json::parse(run({"weighted", dir + "/fig1d.txt", "--json"}).out);
  CHECK(weighted["count"] == "8");
  CHECK(weighted["method"] == "formula");
  CHECK(weighted["polynomial"].is_string());
}

TEST_CASE("classify reports witnesses") {
  const Result r = run({"classify", dir + "/two_k2.txt", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["classification"]["special_2threshold"] == false);
  CHECK(j["witnesses"]["special_2threshold"]["pattern"] == "2K2");
  CHECK(j["witnesses"]["special_2threshold"]["vertices"] == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"count"}).code == cli::usage_error);
  CHECK(run({"count", "/nonexistent.txt"}).code == cli::usage_error);
  CHECK(run({"count", "--ferrers", "1,2"}).code == cli::usage_error);
  CHECK(run({"count", "--ferrers", "x"}).code == cli::usage_error);
  CHECK(run({"count", dir + "/fig1a.txt", "--complete", "3"}).code == cli::usage_error);
  CHECK(run({"count", dir + "/fig1a.txt", "--method", "magic"}).code == cli::usage_error);
  CHECK(run({"count", dir + "/c5.txt", "--method", "formula"}).code == cli::capability_exceeded);
  CHECK(run({"count", "--complete", "8", "--method", "oracle"}).code == cli::capability_exceeded);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("oracle limit from the environment") {
  setenv("SPANTREE_ORACLE_LIMIT", "40", 1);
  CHECK(first_line(run({"count", "--complete", "8", "--method", "oracle"}).out) == "262144");
  setenv("SPANTREE_ORACLE_LIMIT", "3", 1);
  CHECK(run({"count", dir + "/fig1a.txt", "--verify"}).code == cli::capability_exceeded);
  setenv("SPANTREE_ORACLE_LIMIT", "lots", 1);
  CHECK(run({"count", dir + "/fig1a.txt", "--method", "oracle"}).code == cli::usage_error);
  unsetenv("SPANTREE_ORACLE_LIMIT");
}
