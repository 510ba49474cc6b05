// One line per acceptance criterion; exit status 0 only if all eight hold.
#include "casorati/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace casorati;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  bool ok;
  std::string detail;
};

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

long countPass(const std::vector<CheckReport>& rs) {
  long n = 0;
  for (const auto& r : rs) n += r.passed();
  return n;
}

std::string firstFailure(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return "; first failure " + r.identityId + " trial " + std::to_string(r.trial) + ": " + r.message;
  return "";
}

// every non-passing report must carry a witness whose replay gives the same verdict
bool replays(const std::vector<CheckReport>& rs, long& failed) {
  failed = 0;
  for (const auto& r : rs) {
    if (r.passed()) continue;
    ++failed;
    if (r.witness.is_null()) return false;
    const CheckReport again = replayWitness(r.witness);
    if (again.verdict != r.verdict || again.lhs != r.lhs || again.rhs != r.rhs) return false;
  }
  return failed > 0;
}

std::vector<CheckReport> identityRun(const std::vector<std::string>& ids, long trials, const Faults& faults) {
  SamplerConfig cfg;
  cfg.trials = trials;
  std::vector<IdentityInstance> jobs;
  for (const auto& id : ids)
    for (long t = 0; t < (id == "sumFormula" ? 1 : trials); ++t) {
      IdentityInstance in = sampleInstance(cfg, id, t);
      in.faults = faults;
      jobs.push_back(std::move(in));
    }
  return runInstances(jobs, 1);
}

Line identitySuite() {
  const auto t0 = Clock::now();
  const auto rs = identityRun(primaryIdentityIds(), 200, {});
  const double s = seconds(t0);
  const long pass = countPass(rs);
  const bool ok = pass == static_cast<long>(rs.size()) && rs.size() == 18 * 200 && s <= 120.0;
  return {ok, std::to_string(pass) + "/" + std::to_string(rs.size()) + " exact trials over 18 checkers, " + fmt(s) +
                  " s on one thread (limit 120 s)" + firstFailure(rs)};
}

Line specializations() {
  const auto rs = identityRun({"eq.W", "eq.Wg", "eq.Wc"}, 200, {});
  const long pass = countPass(rs);
  Faults shifted;
  shifted.eq3Shift = 0;
  const auto bad = identityRun({"eq.Wc"}, 50, shifted);
  const long caught = static_cast<long>(bad.size()) - countPass(bad);
  const bool ok = pass == static_cast<long>(rs.size()) && caught > 0;
  return {ok, std::to_string(pass) + "/" + std::to_string(rs.size()) +
                  " m=2 instances match the theorems byte for byte; dropping the x+1 shift breaks " +
                  std::to_string(caught) + "/50" + firstFailure(rs)};
}

Line sumFormula() {
  const CheckReport r = checkSumFormula(10);
  return {r.passed(), "j <= 10, 0 <= s <= j-1: " + verdictName(r.verdict) + (r.message.empty() ? "" : " (" + r.message + ")")};
}

Line classicalLimit() {
  const auto rs = identityRun({"classicalLimit"}, 50, {});
  const long pass = countPass(rs);
  return {pass == 50, std::to_string(pass) + "/50 random triples show order >= 1 over 4 halvings from gamma = 1" +
                          firstFailure(rs)};
}

Line oqm() {
  const auto t0 = Clock::now();
  OqmConfig cfg;
  const auto rs = runOqmSuite(cfg);
  const double s = seconds(t0);
  bool schr = true;
  bool paths = true;
  bool census = true;
  for (const auto& r : rs) {
    if (r.identityId == "oqm.twoPath") {
      schr = schr && r.params.value("schrodinger", false);
      paths = paths && r.params.value("pathsEqual", false);
    } else {
      census = census && r.passed();
    }
  }
  const bool ok = schr && paths && census && countPass(rs) == static_cast<long>(rs.size()) && s <= 60.0;
  std::ostringstream d;
  d << "dV in {{},{0},{1},{0,1}}, dE={1,2}, n in {0,3,4}: Schrodinger " << (schr ? "exact" : "FAILED")
    << ", two paths " << (paths ? "equal" : "DIFFER") << ", census " << (census ? "identical" : "DIFFERS") << ", "
    << fmt(s) << " s (limit 60 s)" << firstFailure(rs);
  return {ok, d.str()};
}

Line rdqm() {
  const auto t0 = Clock::now();
  RdqmConfig cfg;  // beta 2, c 1/3, 256 bits, window 80, N 60, dv {-3/5,-17/10}, dE {1,2}, n {0,3}
  cfg.precisionBits = 256;
  const auto rs = runRdqmSuite(cfg);
  const double s = seconds(t0);
  std::string model = "?", dev = "", spec = "?", chain = "";
  bool a = false, b = true, c = true, d = false, e = true;
  long twoPaths = 0, chains = 0;
  for (const auto& r : rs) {
    if (r.identityId == "rdqm.model") {
      a = r.passed();
      model = r.params.value("worstResidual", "?");
    } else if (r.identityId == "rdqm.twoPath") {
      ++twoPaths;
      b = b && r.passed();
      c = c && r.params.value("signIdentityAllOrders", false);
      dev += (dev.empty() ? "" : ", ") + r.params.value("maxRelDeviation", std::string("?"));
    } else if (r.identityId == "rdqm.spectrum") {
      d = r.passed();
      spec = r.params.value("maxDeviation", "?") + ", sensitivity " + r.params.value("truncationSensitivity", "?");
    } else if (r.identityId == "rdqm.chainReplay" || r.identityId == "rdqm.stepReplay") {
      e = e && r.passed();
      if (r.identityId == "rdqm.chainReplay") {
        ++chains;
        chain += (chain.empty() ? "" : ", ") + r.params.value("maxRelDeviation", std::string("?"));
      }
    }
  }
  b = b && twoPaths == 2;
  e = e && chains == 2;
  const bool ok = a && b && c && d && e && s <= 300.0;
  std::ostringstream out;
  out << "(a) residual " << model << (a ? "" : " FAIL") << "; (b) two-path " << dev << (b ? "" : " FAIL")
      << "; (c) sign identity " << (c ? "holds" : "FAILS") << "; (d) spectrum deviation " << spec
      << (d ? "" : " FAIL") << "; (e) replay " << chain << (e ? "" : " FAIL") << "; " << fmt(s)
      << " s (limit 300 s)" << firstFailure(rs);
  return {ok, out.str()};
}

Line idqm() {
  IdqmConfig cfg;  // 50 trials, l,m <= 2, deg V <= 2, gamma in {1, 1/2}
  const auto rs = runIdqmSuite(cfg, 1);
  const long pass = countPass(rs);
  return {pass == 150 && rs.size() == 150,
          std::to_string(pass) + "/150 exact (prefactor, potential product, two paths; 50 trials each)" +
              firstFailure(rs)};
}

Line negativeControls() {
  std::ostringstream d;
  bool ok = true;
  auto control = [&](const std::string& name, const std::vector<CheckReport>& rs) {
    long failed = 0;
    const bool good = replays(rs, failed);
    ok = ok && good;
    d << name << " " << failed << " failing, " << (good ? "replayed" : "NOT replayable") << "; ";
  };
  Faults entry;
  entry.entry = EntryFault{0, 0, Gaussian(1)};
  control("identity entry", identityRun({"W.theorem", "Wg.corollary", "Wc.theorem"}, 10, entry));
  OqmConfig o;
  o.faults = entry;
  control("oqm entry", runOqmSuite(o));
  IdqmConfig q;
  q.trials = 10;
  q.faults = entry;
  control("idqm entry", runIdqmSuite(q, 1));
  RdqmConfig r;
  r.faults.flipEpsilon = true;
  control("rdqm eps flip", runRdqmSuite(r));
  Faults shift;
  shift.eq3Shift = 0;
  control("x+1 shift", identityRun({"eq.Wc"}, 10, shift));
  std::string s = d.str();
  s.resize(s.size() - 2);
  return {ok, s};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
      {"identity suite", identitySuite}, {"m=2 specializations", specializations}, {"sum formula", sumFormula},
      {"classical limit", classicalLimit}, {"oQM pipeline", oqm},                  {"rdQM pipeline", rdqm},
      {"idQM algebra", idqm},              {"negative controls", negativeControls}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line l;
    try {
      l = criteria[i].second();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    failures += !l.ok;
    std::printf("criterion %zu %s %s: %s\n", i + 1, l.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), l.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
