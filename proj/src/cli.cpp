#include "casorati/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#ifndef CASORATI_VERSION
#define CASORATI_VERSION "0.0.0"
#endif

namespace casorati {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

long parseLong(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ConfigError(what + ": not an integer: '" + s + "'");
  return v;
}

std::vector<long> longList(const std::string& s, const std::string& what) {
  std::vector<long> v;
  for (const auto& t : splitList(s)) v.push_back(parseLong(t, what));
  return v;
}

Rational rationalArg(const std::string& s, const std::string& what) {
  try {
    return parseRational(s);
  } catch (const std::exception&) {
    throw ConfigError(what + ": not a rational: '" + s + "'");
  }
}

std::vector<Rational> rationalList(const std::string& s, const std::string& what) {
  std::vector<Rational> v;
  for (const auto& t : splitList(s)) v.push_back(rationalArg(t, what));
  return v;
}

void checkDecimal(const std::string& s, const std::string& what) {
  try {
    (void)BigFloat::fromString(s, 64);
  } catch (const std::exception&) {
    throw ConfigError(what + ": not a decimal: '" + s + "'");
  }
}

std::string utcNow() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Raw option text; parsed after CLI11 so config-file values get the same
// validation as flags.
struct Options {
  std::string command;
  std::string out;
  std::string csv;
  std::string replay;
  long trials = -1;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string ids;
  std::size_t budgetBits = kDefaultBudgetBits;
  std::string beta = "2";
  std::string c = "1/3";
  std::string gamma;
  long precision = 0;
  long window = 80;
  long truncation = 60;
  std::string dv;
  std::string de;
  std::string n;
  long compareMax = 40;
  std::string tolerance = "1e-25";
  std::string faultEntry;
  bool flipEpsilon = false;
  long eq3Shift = 1;
};

Faults faultsFrom(const Options& o) {
  Faults f;
  if (!o.faultEntry.empty()) {
    const auto parts = splitList(o.faultEntry);
    if (parts.size() != 3) throw ConfigError("--fault-entry expects row,col,delta");
    EntryFault e;
    const long row = parseLong(parts[0], "--fault-entry row");
    const long col = parseLong(parts[1], "--fault-entry col");
    if (row < 0 || col < 0) throw ConfigError("--fault-entry: negative index");
    e.row = static_cast<std::size_t>(row);
    e.col = static_cast<std::size_t>(col);
    try {
      e.delta = Gaussian::parse(parts[2]);
    } catch (const std::exception&) {
      throw ConfigError("--fault-entry: bad delta '" + parts[2] + "'");
    }
    f.entry = e;
  }
  f.flipEpsilon = o.flipEpsilon;
  f.eq3Shift = o.eq3Shift;
  return f;
}

struct Plan {
  bool identities = false;
  bool oqm = false;
  bool idqm = false;
  bool rdqm = false;
  SamplerConfig sampler;
  std::vector<std::string> ids;
  Faults faults;
  OqmConfig oqmConfig;
  IdqmConfig idqmConfig;
  RdqmConfig rdqmConfig;
};

Plan makePlan(const Options& o) {
  Plan p;
  const std::string& cmd = o.command;
  const bool all = cmd == "all";
  p.identities = all || cmd == "identities";
  p.oqm = all || cmd == "oqm";
  p.idqm = all || cmd == "idqm";
  p.rdqm = all || cmd == "rdqm";
  if (all && (!o.dv.empty() || !o.de.empty() || !o.n.empty()))
    throw ConfigError("--dv, --de and --n select one pipeline and cannot be used with 'all'");
  if (o.trials == 0 || o.trials < -1) throw ConfigError("--trials must be positive");
  if (o.precision < 0 || (o.precision > 0 && o.precision < 64)) throw ConfigError("--precision must be at least 64");
  p.faults = faultsFrom(o);

  p.sampler.masterSeed = o.seed;
  p.sampler.budgetBits = o.budgetBits;
  if (o.trials > 0) p.sampler.trials = o.trials;
  if (!o.gamma.empty()) p.sampler.gammas = rationalList(o.gamma, "--gamma");
  for (const auto& g : p.sampler.gammas)
    if (sgn(g) <= 0) throw ConfigError("--gamma values must be positive");
  if (o.ids.empty()) {
    p.ids = primaryIdentityIds();
    for (const auto& id : auxiliaryIdentityIds()) p.ids.push_back(id);
  } else {
    p.ids = splitList(o.ids);
    for (const auto& id : p.ids)
      if (!isIdentityId(id)) throw ConfigError("--ids: unknown identity '" + id + "'");
  }

  p.oqmConfig.faults = p.faults;
  if (p.oqm && !all) {
    if (!o.dv.empty()) p.oqmConfig.dvSets = {longList(o.dv, "--dv")};
    if (!o.de.empty()) p.oqmConfig.de = longList(o.de, "--de");
    if (!o.n.empty()) p.oqmConfig.ns = longList(o.n, "--n");
    for (const auto& s : p.oqmConfig.dvSets)
      for (long v : s)
        if (v < 0) throw ConfigError("--dv: virtual indices are non-negative");
    IndexSet{p.oqmConfig.dvSets.front(), p.oqmConfig.de}.validate();
  }

  p.idqmConfig.masterSeed = o.seed;
  p.idqmConfig.faults = p.faults;
  if (o.trials > 0) p.idqmConfig.trials = o.trials;
  if (!o.gamma.empty()) p.idqmConfig.gammas = p.sampler.gammas;

  RdqmConfig& r = p.rdqmConfig;
  r.beta = rationalArg(o.beta, "--beta");
  r.c = rationalArg(o.c, "--c");
  if (sgn(r.beta) <= 0) throw ConfigError("--beta must be positive");
  if (sgn(r.c) <= 0 || r.c >= 1) throw ConfigError("--c must lie in (0, 1)");
  r.precisionBits = o.precision > 0 ? o.precision : precisionFromEnvironment();
  if (o.window < 2) throw ConfigError("--window must be at least 2");
  if (o.truncation < 1) throw ConfigError("--truncation must be positive");
  r.window = o.window;
  r.truncation = o.truncation;
  r.compareMax = o.compareMax;
  checkDecimal(o.tolerance, "--tolerance");
  r.tolerance = o.tolerance;
  r.faults = p.faults;
  if (p.rdqm && !all) {
    if (!o.dv.empty()) r.dv = rationalList(o.dv, "--dv");
    if (!o.de.empty()) r.de = longList(o.de, "--de");
    if (!o.n.empty()) r.ns = longList(o.n, "--n");
    for (std::size_t i = 0; i < r.dv.size(); ++i) {
      if (sgn(r.dv[i]) >= 0) throw ConfigError("--dv: virtual energies must be negative");
      if (i > 0 && r.dv[i] >= r.dv[i - 1]) throw ConfigError("--dv: virtual energies must be strictly decreasing");
    }
    for (long e : r.de)
      if (e < 0) throw ConfigError("--de: indices are non-negative");
  }
  if (p.rdqm && r.compareMax >= r.window) throw ConfigError("--compare-max must be below --window");
  return p;
}

Json configEcho(const Options& o, const Plan& p) {
  Json j{{"command", o.command}, {"seed", o.seed}, {"budgetBits", o.budgetBits}, {"faults", toJson(p.faults)}};
  if (p.identities) {
    Json ids = p.ids;
    Json gammas = Json::array();
    for (const auto& g : p.sampler.gammas) gammas.push_back(toString(g));
    j["identities"] = {{"trials", p.sampler.trials}, {"ids", ids}, {"gammas", gammas}};
  }
  if (p.oqm) j["oqm"] = toJson(p.oqmConfig);
  if (p.idqm) j["idqm"] = toJson(p.idqmConfig);
  if (p.rdqm) j["rdqm"] = toJson(p.rdqmConfig);
  return j;
}

std::vector<CheckReport> execute(const Plan& p, unsigned threads) {
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  if (p.identities) {
    std::vector<IdentityInstance> jobs;
    for (const auto& id : p.ids) {
      const long trials = id == "sumFormula" ? 1 : p.sampler.trials;
      for (long t = 0; t < trials; ++t) {
        IdentityInstance in = sampleInstance(p.sampler, id, t);
        in.faults = p.faults;
        jobs.push_back(std::move(in));
      }
    }
    auto rs = runInstances(jobs, threads);
    sortReports(rs);
    append(std::move(rs));
  }
  if (p.oqm) append(runOqmSuite(p.oqmConfig));
  if (p.idqm) append(runIdqmSuite(p.idqmConfig, threads));
  if (p.rdqm) append(runRdqmSuite(p.rdqmConfig));
  return out;
}

void writeCsv(const std::string& path, const Plan& p, const std::vector<CheckReport>& checks) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << "check,index,value,expected\n";
  bool any = false;
  for (const auto& r : checks) {
    if (r.identityId != "rdqm.spectrum" || !r.params.contains("eigenvalues")) continue;
    const auto& vals = r.params["eigenvalues"];
    const auto& exp = r.params["expected"];
    for (std::size_t i = 0; i < vals.size(); ++i)
      f << r.identityId << "," << i << "," << vals[i].get<std::string>() << ","
        << (i < exp.size() ? exp[i].dump() : std::string()) << "\n";
    any = true;
  }
  if (!any || !p.rdqm) return;
  // deformed eigenfunctions on the window, one file per n
  const RdqmConfig& c = p.rdqmConfig;
  const RdqmModel model = buildModel(c);
  const auto seeds = makeSeeds(model, c.dv, c.de);
  const std::filesystem::path base(path);
  for (long n : c.ns) {
    std::filesystem::path g = base;
    g.replace_filename(base.stem().string() + "_phiD_n" + std::to_string(n) + base.extension().string());
    std::ofstream gf(g);
    if (!gf) throw ConfigError("cannot write " + g.string());
    writeGridCsv(gf, "phiD_" + std::to_string(n), deformedEigenfunctions(model, seeds, n), c.precisionBits);
  }
}

std::vector<CheckReport> replayFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  // a bare witness, a list of witnesses, or a whole report
  std::vector<Json> witnesses;
  if (j.is_object() && j.contains("checks")) {
    for (const auto& c : j["checks"])
      if (c.contains("witness") && !c["witness"].is_null()) witnesses.push_back(c["witness"]);
  } else if (j.is_array()) {
    for (const auto& w : j) witnesses.push_back(w);
  } else {
    witnesses.push_back(j);
  }
  std::vector<CheckReport> out;
  for (const auto& w : witnesses) {
    if (!w.is_object() || !w.contains("id")) throw ConfigError(path + ": witness without an id");
    try {
      out.push_back(replayWitness(w));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(path + ": malformed witness: " + e.what());
    }
  }
  return out;
}

void emit(const Json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write " + out);
  f << text;
}

}  // namespace

int Summary::exitCode() const {
  if (fail > 0 || error > 0) return kExitFail;
  if (inconclusive > 0) return kExitInconclusive;
  return kExitPass;
}

Summary summarize(const std::vector<CheckReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::Inconclusive: ++s.inconclusive; break;
      case Verdict::Error: ++s.error; break;
    }
  }
  return s;
}

Json toJson(const CheckReport& r) {
  Json j{{"id", r.identityId}, {"verdict", verdictName(r.verdict)}, {"params", r.params}};
  if (r.trial >= 0) j["trial"] = r.trial;
  if (!r.lhs.empty()) j["lhs"] = r.lhs;
  if (!r.rhs.empty()) j["rhs"] = r.rhs;
  if (!r.message.empty()) j["message"] = r.message;
  if (!r.witness.is_null()) {
    Json w = r.witness;
    if (w.is_object() && !w.contains("id")) w["id"] = r.identityId;
    j["witness"] = w;
  }
  return j;
}

Json buildReport(const std::string& command, const Json& config, const std::vector<CheckReport>& checks,
                 double wallSeconds) {
  const Summary s = summarize(checks);
  Json list = Json::array();
  Json seconds = Json::array();
  for (const auto& r : checks) {
    list.push_back(toJson(r));
    seconds.push_back(r.seconds);
  }
  return Json{{"schema", 1},
              {"version", CASORATI_VERSION},
              {"command", command},
              {"config", config},
              {"checks", list},
              {"summary",
               {{"total", s.total},
                {"pass", s.pass},
                {"fail", s.fail},
                {"inconclusive", s.inconclusive},
                {"error", s.error},
                {"exitCode", s.exitCode()}}},
              {"timestamp", {{"utc", utcNow()}, {"wallSeconds", wallSeconds}, {"checkSeconds", seconds}}}};
}

int run(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Exact and high-precision checks of multi-step Darboux transformations", "casorati"};
  app.set_config("--config", "", "flat key = value file; flags given on the command line win");
  app.allow_config_extras(CLI::config_extras_mode::error);
  Options o;
  app.add_option("command", o.command, "identities | oqm | idqm | rdqm | all")
      ->check(CLI::IsMember({"identities", "oqm", "idqm", "rdqm", "all"}));
  app.add_option("--out", o.out, "JSON report path (default: stdout)");
  app.add_option("--csv", o.csv, "CSV path for spectra and deformed eigenfunctions");
  app.add_option("--replay", o.replay, "re-run the checks described by a witness or report file");
  app.add_option("--trials", o.trials, "random trials per identity / idQM check");
  app.add_option("--seed", o.seed, "master seed");
  app.add_option("--threads", o.threads, "worker threads (default: hardware)");
  app.add_option("--ids", o.ids, "comma-separated identity ids");
  app.add_option("--budget-bits", o.budgetBits, "coefficient size limit per identity check");
  app.add_option("--beta", o.beta, "Meixner beta");
  app.add_option("--c", o.c, "Meixner c in (0,1)");
  app.add_option("--gamma", o.gamma, "comma-separated imaginary shifts");
  app.add_option("--precision", o.precision, "MPFR bits (default: CASORATI_PRECISION_BITS or 256)");
  app.add_option("--window", o.window, "largest grid point x");
  app.add_option("--truncation", o.truncation, "truncation size N of the deformed Hamiltonian");
  app.add_option("--dv", o.dv, "virtual seeds: indices (oqm) or energies (rdqm), comma-separated");
  app.add_option("--de", o.de, "deleted eigenstates, comma-separated");
  app.add_option("--n", o.n, "eigenfunction indices to check, comma-separated");
  app.add_option("--compare-max", o.compareMax, "last grid point compared by the rdQM two-path check");
  app.add_option("--tolerance", o.tolerance, "relative tolerance for rdQM comparisons");
  app.add_option("--fault-entry", o.faultEntry, "negative control: row,col,delta added to one Casoratian entry");
  app.add_flag("--flip-epsilon", o.flipEpsilon, "negative control: flip the sign factor");
  app.add_option("--eq3-shift", o.eq3Shift, "negative control: shift of the W_C[f](x+1) factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (o.command.empty() && o.replay.empty()) throw ConfigError("a command or --replay is required");
    const unsigned threads = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<CheckReport> checks;
    Json report;
    if (!o.replay.empty()) {
      checks = replayFile(o.replay);
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;
      report = buildReport("replay", Json{{"replay", o.replay}}, checks, wall.count());
    } else {
      const Plan plan = makePlan(o);
      checks = execute(plan, threads);
      if (!o.csv.empty()) writeCsv(o.csv, plan, checks);
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;
      report = buildReport(o.command, configEcho(o, plan), checks, wall.count());
    }
    emit(report, o.out);
    const Summary s = summarize(checks);
    std::cerr << s.total << " checks: " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive
              << " inconclusive, " << s.error << " error\n";
    return s.exitCode();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace casorati
