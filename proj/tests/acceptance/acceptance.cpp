// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dimjac/cli/app.hpp"
#include "dimjac/verify/suites.hpp"

namespace {

using dimjac::verify::CheckResult;

std::string cli(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = dimjac::cli::run(args, out, err);
  return out.str();
}

// The cup-fill criterion also goes through the command line, inside the
// same time budget.
CheckResult cup_fill_cli(const std::string& data_dir) {
  CheckResult r;
  const std::string expr = "(300 cm^3)/(4.3 L/min)";
  const std::string kitchen = data_dir + "/kitchen.json", si = data_dir + "/si.json";
  int code = 0;
  ++r.cases;
  if (cli({"eval", "--rational", "--system", kitchen, expr}, code) != "3/43 min\n" || code != 0)
    r.fail("eval --rational on the kitchen system did not print 3/43 min");
  ++r.cases;
  if (cli({"eval", "--rational", "--system", si, expr, "--unit", "min"}, code) != "3/43 min\n")
    r.fail("eval --rational --unit min on the SI system did not print 3/43 min");
  ++r.cases;
  double minutes = std::stod(cli({"eval", "--system", kitchen, expr}, code));
  if (std::fabs(minutes - 0.0698) > dimjac::verify::kCupMinutesTol)
    r.fail("float eval printed " + std::to_string(minutes) + " min");
  ++r.cases;
  double seconds = std::stod(cli({"eval", "--system", si, expr}, code));
  if (std::fabs(seconds - 4.186) > dimjac::verify::kCupSecondsTol)
    r.fail("float eval printed " + std::to_string(seconds) + " s");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : DIMJAC_DATA_DIR;
  auto suites = dimjac::verify::acceptance_suites(data_dir);
  // Criterion 1 checks the library and the command line together.
  auto library = suites[0].run;
  suites[0].run = [library, data_dir] {
    auto r = library();
    auto detail = r.detail;
    r.merge(cup_fill_cli(data_dir));
    if (r.ok) r.detail = detail + "; command line agrees";
    return r;
  };
  int failed = 0;
  for (const auto& suite : suites) {
    auto report = dimjac::verify::run_suite(suite);
    if (!report.passed()) ++failed;
    std::ostringstream time;
    time << std::fixed << std::setprecision(3) << report.seconds << "s/" << suite.limit_seconds
         << "s";
    std::string detail = report.result.detail;
    if (report.result.ok && !report.passed()) detail = "over the time limit; " + detail;
    std::cout << "criterion " << suite.id << " " << suite.title << ": "
              << (report.passed() ? "PASS" : "FAIL") << " (" << time.str() << ", "
              << report.result.cases << " cases) " << detail << '\n';
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << '\n';
  return failed == 0 ? 0 : 1;
}
