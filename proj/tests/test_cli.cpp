#include "casorati/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace casorati;

namespace {

int runArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "casorati");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("casorati_test_" + name)).string();
}

Json load(const std::string& path) {
  std::ifstream in(path);
  Json j;
  in >> j;
  return j;
}

Json withoutTimestamp(Json j) {
  j.erase("timestamp");
  return j;
}

}  // namespace

TEST_CASE("configuration errors exit with 2") {
  CHECK(runArgs({"bogus"}) == kExitConfig);
  CHECK(runArgs({"identities", "--no-such-flag"}) == kExitConfig);
  CHECK(runArgs({}) == kExitConfig);
  CHECK(runArgs({"all", "--dv", "0"}) == kExitConfig);
  CHECK(runArgs({"rdqm", "--beta", "x"}) == kExitConfig);
  CHECK(runArgs({"rdqm", "--c", "3/2"}) == kExitConfig);
  CHECK(runArgs({"rdqm", "--dv", "-1.7,-0.6"}) == kExitConfig);
  CHECK(runArgs({"identities", "--ids", "nope"}) == kExitConfig);
  CHECK(runArgs({"idqm", "--config", tmp("missing.cfg")}) == kExitConfig);
  CHECK(runArgs({"--replay", tmp("missing.json")}) == kExitConfig);
}

TEST_CASE("reports are reproducible and thread independent") {
  const std::string a = tmp("a.json");
  const std::string b = tmp("b.json");
  CHECK(runArgs({"identities", "--trials", "3", "--ids", "Wg.theorem,Wc.corollary", "--seed", "5", "--threads", "1",
                 "--out", a}) == kExitPass);
  CHECK(runArgs({"identities", "--trials", "3", "--ids", "Wg.theorem,Wc.corollary", "--seed", "5", "--threads", "3",
                 "--out", b}) == kExitPass);
  const Json ja = load(a);
  CHECK(ja["schema"] == 1);
  CHECK(ja["summary"]["total"] == 6);
  CHECK(ja["timestamp"]["checkSeconds"].size() == 6);
  CHECK(withoutTimestamp(ja).dump() == withoutTimestamp(load(b)).dump());
}

TEST_CASE("config file values, overridden by flags") {
  const std::string cfg = tmp("run.cfg");
  {
    std::ofstream f(cfg);
    f << "# idqm sweep\ntrials = 4\nseed = 9\ngamma = 1/2\n";
  }
  const std::string out = tmp("cfg.json");
  CHECK(runArgs({"idqm", "--config", cfg, "--trials", "2", "--out", out}) == kExitPass);
  const Json j = load(out);
  CHECK(j["config"]["idqm"]["trials"] == 2);
  CHECK(j["config"]["idqm"]["seed"] == 9);
  CHECK(j["config"]["idqm"]["gammas"] == Json::array({"1/2"}));
  {
    std::ofstream f(cfg);
    f << "unknown_key = 3\n";
  }
  CHECK(runArgs({"idqm", "--config", cfg}) == kExitConfig);
}

TEST_CASE("pipeline examples") {
  const std::string out = tmp("oqm.json");
  CHECK(runArgs({"oqm", "--dv", "0", "--de", "1,2", "--n", "0", "--out", out}) == kExitPass);
  const Json j = load(out);
  CHECK(j["checks"][0]["id"] == "oqm.twoPath");
  CHECK(j["checks"][0]["params"]["pathsEqual"] == true);
  const std::string r = tmp("rdqm.json");
  CHECK(runArgs({"rdqm", "--beta", "2", "--c", "1/3", "--dv=-0.6,-1.7", "--de=1,2", "--n", "0", "--window", "48",
                 "--compare-max", "30", "--truncation", "60", "--out", r}) == kExitPass);
  CHECK(load(r)["config"]["rdqm"]["dv"] == Json::array({"-3/5", "-17/10"}));
}

TEST_CASE("inconclusive-only runs exit with 3") {
  CHECK(runArgs({"rdqm", "--window", "48", "--compare-max", "30", "--truncation", "10", "--out", tmp("inc.json")}) ==
        kExitInconclusive);
}

TEST_CASE("failures replay, in any order") {
  const std::string out = tmp("fault.json");
  CHECK(runArgs({"idqm", "--trials", "4", "--fault-entry", "0,0,1", "--out", out}) == kExitFail);
  const Json report = load(out);
  Json witnesses = Json::array();
  std::vector<std::string> verdicts;
  for (const auto& c : report["checks"])
    if (c.contains("witness")) {
      witnesses.push_back(c["witness"]);
      verdicts.push_back(c["verdict"]);
    }
  REQUIRE(!witnesses.empty());
  std::reverse(witnesses.begin(), witnesses.end());
  std::reverse(verdicts.begin(), verdicts.end());
  const std::string wfile = tmp("witnesses.json");
  {
    std::ofstream f(wfile);
    f << witnesses.dump();
  }
  const std::string replayed = tmp("replayed.json");
  CHECK(runArgs({"--replay", wfile, "--out", replayed}) == kExitFail);
  const Json again = load(replayed);
  REQUIRE(again["checks"].size() == verdicts.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) CHECK(again["checks"][i]["verdict"] == verdicts[i]);
  CHECK(runArgs({"--replay", out, "--out", replayed}) == kExitFail);
}

TEST_CASE("csv output") {
  const std::string csv = tmp("spec.csv");
  CHECK(runArgs({"rdqm", "--window", "48", "--compare-max", "30", "--truncation", "60", "--n", "0", "--csv", csv,
                 "--out", tmp("csv.json")}) == kExitPass);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "check,index,value,expected");
  CHECK(std::filesystem::exists(tmp("spec_phiD_n0.csv")));
}

TEST_CASE("summary exit codes") {
  Summary s;
  CHECK(s.exitCode() == kExitPass);
  s.inconclusive = 1;
  CHECK(s.exitCode() == kExitInconclusive);
  s.error = 1;
  CHECK(s.exitCode() == kExitFail);
}
