#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"

using echlat::cli::command_table;
using echlat::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ECHLAT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"embeds_1_4_2_2.json", {"embeds", "--source", "1,4", "--target", "2,2", "--json"}},
      {"embeds_1_2_ball.json", {"embeds", "--source", "1,2", "--target", "19/10,19/10", "--json"}},
      {"staircase_3_2.csv", {"staircase", "--k", "3", "--l", "2", "--samples", "20", "--K", "2000", "--exact"}},
      {"staircase_2_1.svg", {"staircase", "--k", "2", "--l", "1", "--samples", "20", "--K", "2000", "--format", "svg"}},
      {"diophantine_1_1.txt", {"diophantine", "--k", "1", "--l", "1", "--bound", "50"}},
      {"capacities_1_2.json", {"capacities", "--a", "1", "--b", "2", "--count", "8", "--json"}},
      {"verify_reciprocity.txt", {"verify", "--suite", "reciprocity", "--trials", "50", "--seed", "7"}},
  };
  for (const auto& [file, args] : cases) {
    CAPTURE(file);
    const Result r = call(args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(file));
  }
}

TEST_CASE("identical flags give identical output") {
  const std::vector<std::vector<std::string>> cases = {
      {"verify", "--suite", "all", "--trials", "20", "--seed", "99"},
      {"period-scan", "--k", "3", "--l", "2", "--bound", "14", "--threads", "1"},
      {"staircase", "--k", "1", "--l", "1", "--samples", "10", "--K", "1000", "--format", "json"},
  };
  for (const auto& args : cases) {
    const Result a = call(args);
    const Result b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // scan output is canonical regardless of thread count
  const Result one = call({"period-scan", "--k", "3", "--l", "2", "--bound", "14", "--threads", "1"});
  const Result four = call({"period-scan", "--k", "3", "--l", "2", "--bound", "14", "--threads", "4"});
  CHECK(one.out == four.out);
}

TEST_CASE("every operation is reachable and every example runs") {
  const std::set<std::string> required = {
      "quad_compare", "quasi_eval", "minimal_period", "lattice_count", "triangle_count", "ehrhart_quasipoly",
      "ehrhart_equivalent", "fd_sum_numeric", "fd_pair_sum_exact", "check_rademacher", "check_rademacher_zero",
      "check_convolution", "ech_capacity", "capacity_count", "seq_sum", "weight_sequence", "check_decomposition",
      "r_seq", "stair_points", "phi", "c_closed_form", "diophantine_solutions", "period_collapse_scan",
      "volume_threshold", "fn_index", "check_step_indices", "check_count_bound", "embeds", "capacity_ratio", "c_fun",
      "staircase_table"};
  std::set<std::string> covered;
  std::set<std::string> names;
  for (const auto& c : command_table()) {
    names.insert(c.name);
    covered.insert(c.operations.begin(), c.operations.end());
    CAPTURE(c.name);
    REQUIRE(!c.example.empty());
    CHECK(c.example.front() == c.name);
    const Result r = call(c.example);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
  }
  for (const auto& op : required) {
    CAPTURE(op);
    CHECK(covered.count(op) == 1);
  }
  CHECK(names == std::set<std::string>{"capacities", "count", "embeds", "cfun", "staircase", "ehrhart", "period-scan",
                                       "diophantine", "weights", "seqsum", "verify"});
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({"embeds", "--source", "1,4"}).code == 1);
  CHECK(call({"embeds", "--source", "1,4", "--target", "2,2", "--bogus"}).code == 1);
  CHECK(call({"embeds", "--source", "0,4", "--target", "2,2"}).code == 1);
  CHECK(call({"capacities", "--a", "x/y", "--b", "1"}).code == 1);
  CHECK(call({"staircase", "--k", "3", "--l", "1"}).code == 1);
  CHECK(call({"cfun", "--a", "1/2", "--b", "1"}).code == 1);
  CHECK(call({"verify", "--suite", "nope"}).code == 1);
  CHECK(call({"verify", "--suite", "reciprocity", "--trials", "200", "--seed", "7"}).code == 0);
  CHECK(call({"staircase", "--k", "3", "--l", "2", "--samples", "200", "--format", "csv"}).code == 0);
}

TEST_CASE("command output") {
  const Result emb = call({"embeds", "--source", "1,4", "--target", "2,2", "--json"});
  CHECK(emb.out == "{\"embeds\":true}\n");
  const Result sc = call({"staircase", "--k", "3", "--l", "2", "--samples", "20", "--K", "2000"});
  std::istringstream lines(sc.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "a,closed_form,oracle_lower,oracle_upper,volume");
  const Result weights = call({"weights", "--a", "3/2"});
  CHECK(weights.out.find("1 1/2 1/2") != std::string::npos);
}
