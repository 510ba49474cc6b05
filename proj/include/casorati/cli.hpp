#pragma once

#include "casorati/suites.hpp"

#include <string>
#include <vector>

namespace casorati {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitConfig = 2, kExitInconclusive = 3 };

struct Summary {
  long total = 0;
  long pass = 0;
  long fail = 0;
  long inconclusive = 0;
  long error = 0;

  int exitCode() const;
};
Summary summarize(const std::vector<CheckReport>& reports);

// Deterministic part of a report entry; run time goes to the timestamp block.
Json toJson(const CheckReport& r);

// Full report. `timestamp` is the only field that varies between identical
// runs.
Json buildReport(const std::string& command, const Json& config, const std::vector<CheckReport>& checks,
                 double wallSeconds);

// argv[1] is the subcommand: identities | oqm | idqm | rdqm | all.
int run(int argc, char** argv);

}  // namespace casorati
