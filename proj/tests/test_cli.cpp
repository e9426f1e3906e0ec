#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "raypf/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = raypf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "raypf_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parsed records with the metadata stripped; unparseable lines are skipped.
std::vector<json> records(const fs::path& p) {
  std::vector<json> out;
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) {
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded()) continue;
    rec.erase("meta");
    out.push_back(rec);
  }
  return out;
}

}  // namespace

TEST_CASE("gen emits CSV") {
  const auto r = run({"gen", "--n", "4", "--k", "1", "--a", "1", "--b", "2", "--len", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "j,value\n0,4\n1,10\n2,6\n3,1\n4,0\n");
}

TEST_CASE("gen emits JSON with decimal strings") {
  const auto r = run({"gen", "--n", "0", "--k", "0", "--a", "2", "--b", "1", "--len", "40", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("values").size() == 40);
  CHECK(doc.at("values")[3] == "20");
  CHECK(doc.at("values")[39] == "27217014869199032015600");  // C(78, 39)
}

TEST_CASE("lgv passes on the worked example") {
  const auto r = run({"lgv", "--n", "4", "--k", "1", "--a", "1", "--b", "2", "--window", "5", "--order", "2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("status") == "pass");
}

TEST_CASE("lgv writes a DOT file") {
  const auto path = scratch("net.dot");
  const auto r = run({"lgv", "--n", "4", "--k", "1", "--a", "1", "--b", "2", "--window", "3", "--dot",
                      path.string()});
  CHECK(r.code == 0);
  const std::string dot = slurp(path);
  CHECK(dot.rfind("digraph lattice {", 0) == 0);
  CHECK(dot.find("\"s0\"") != std::string::npos);
}

TEST_CASE("classify emits the profile") {
  const auto r = run({"classify", "--n", "0", "--k", "0", "--a", "2", "--b", "1", "--jmax", "20"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("m") == 0);
  CHECK(doc.at("monotoneOK") == true);
  CHECK(doc.at("jMax") == 20);
  CHECK(doc.at("signs")[0].at("sign") == -1);
  CHECK(doc.at("signs")[0].at("count") == 21);
  CHECK(doc.contains("x_star"));
  CHECK(doc.contains("watson_ratio"));
}

TEST_CASE("pf-check reports a witness and exit status 1") {
  const auto r = run({"pf-check", "--seq", "1,0,1", "--order", "2", "--window", "3"});
  CHECK(r.code == 1);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("status") == "fail");
  CHECK(doc.at("result").at("witness").at("value") == "-1");
}

TEST_CASE("budget exhaustion is a usage-level error") {
  const auto r = run({"pf-check", "--n", "4", "--k", "1", "--a", "1", "--b", "2", "--order", "4", "--window",
                      "8", "--budget", "10"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out).at("status") == "budget_exceeded");

  ::setenv("RAYPF_BUDGET", "10", 1);
  const auto env = run({"pf-check", "--n", "4", "--k", "1", "--a", "1", "--b", "2"});
  ::unsetenv("RAYPF_BUDGET");
  CHECK(env.code == 2);
  CHECK(run({"pf-check", "--n", "4", "--k", "1", "--a", "1", "--b", "2"}).code == 0);
}

TEST_CASE("roots") {
  CHECK(run({"roots", "--n", "4", "--k", "1", "--a", "1", "--b", "2"}).code == 0);
  CHECK(run({"roots", "--seq", "1,0,1"}).code == 1);
  CHECK(run({"roots", "--n", "0", "--k", "0", "--a", "2", "--b", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"gen", "--n", "4", "--k", "1", "--a", "1", "--b", "2", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "--n", "1", "--k", "2", "--a", "1", "--b", "2"}).code == 2);
  CHECK(run({"gen", "--n", "4", "--k", "1", "--a", "1", "--b", "2", "--format", "xml"}).code == 2);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"analytic", "--n", "10", "--k", "0", "--a", "3", "--b", "1"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == run(args).out);
  const auto doc = json::parse(first.out);
  CHECK(doc.at("x_star").is_number());
  CHECK(doc.contains("watson_ratio"));
  CHECK(doc.at("g_sign_changes").get<int>() <= doc.at("h_sign_changes").get<int>());
}

TEST_CASE("sweep appends, resumes and repairs") {
  const auto results = scratch("sweep.jsonl");
  const auto spec = scratch("spec.json");
  {
    std::ofstream s(spec);
    s << json{{"n", {0, 4}}, {"k", {0, 4}}, {"a", {1, 3}}, {"b", {2, 4}}, {"regime", "pf"},
              {"checks", {"roots", "pf-check"}}, {"window", 6}, {"max_order", 3},
              {"output", results.string()}}
             .dump();
  }
  const auto first = run({"sweep", "--spec", spec.string()});
  CHECK(first.code == 0);
  const auto summary = json::parse(first.out);
  const auto computed = summary.at("computed").get<int>();
  CHECK(computed > 0);
  CHECK(summary.at("skipped") == 0);
  const auto recs = records(results);
  CHECK(recs.size() == static_cast<std::size_t>(computed));

  const auto again = json::parse(run({"sweep", "--spec", spec.string()}).out);
  CHECK(again.at("computed") == 0);
  CHECK(again.at("skipped") == computed);
  CHECK(records(results).size() == recs.size());

  // Drop the last two records and leave a torn line; the rerun fills them back in.
  std::string text = slurp(results);
  for (int i = 0; i < 3; ++i) text.erase(text.rfind('\n', text.size() - 2) + 1);
  const auto partial = text + "{\"key\":";
  { std::ofstream(results, std::ios::trunc) << partial; }
  const auto resumed = json::parse(run({"sweep", "--spec", spec.string()}).out);
  CHECK(resumed.at("computed") == 3);
  CHECK(resumed.at("skipped") == computed - 3);
  CHECK(records(results) == recs);
}
