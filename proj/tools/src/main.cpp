#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <hwprobe/error.hpp>

#include "hwprobe_cli/job.hpp"

namespace {

using namespace hwprobe::cli;

constexpr int kOk = 0;
constexpr int kAnomaly = 1;
constexpr int kInputError = 2;

struct Flags {
  std::optional<int> bound;
  std::optional<int> window;
  std::string format = "text";
  std::uint64_t seed = 1;
};

RunOptions runOptions(const Flags& f) {
  RunOptions o;
  o.degreeBound = f.bound;
  o.window = f.window;
  o.seed = f.seed;
  return o;
}

int emitAndExit(const Report& report, const Flags& flags) {
  std::cout << (flags.format == "structured" ? emitStructured(report) : emitText(report));
  return report.hasAnomaly() ? kAnomaly : kOk;
}

int selftest(const Flags& flags) {
  int failures = 0;
  auto check = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  for (const auto& name : catalogNames()) {
    JobSpec spec = catalog(name);
    check(name + ": job round trip", parseJob(printJob(spec)) == spec);
    Report first = runJob(spec, runOptions(flags));
    bool clean = !first.hasAnomaly();
    for (const auto& t : first.tasks) clean = clean && t.status == TaskStatus::Ok;
    check(name + ": every task ok, expectations met, no anomaly", clean);
    Report second = runJob(spec, runOptions(flags));
    check(name + ": structured report deterministic", emitStructured(first) == emitStructured(second));
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest failed") << "\n";
  return failures == 0 ? kOk : kAnomaly;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hwprobe: graded homological algebra over quotients of polynomial rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--bound", flags.bound, "Groebner degree bound (overrides the job)")->check(CLI::PositiveNumber);
  app.add_option("--window", flags.window, "Homological window W (overrides the job)")->check(CLI::PositiveNumber);
  app.add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", flags.seed, "Seed for isomorphism sampling");

  std::string jobFile;
  auto* run = app.add_subcommand("run", "Run a job file");
  run->add_option("jobfile", jobFile, "Job document (JSON)")->required();

  std::string entry;
  bool runEntry = false;
  auto* cat = app.add_subcommand("catalog", "Print or run a built-in job");
  cat->add_option("name", entry, "Catalog entry; omit to list");
  cat->add_flag("--run", runEntry, "Run the entry instead of printing it");

  auto* self = app.add_subcommand("selftest", "Run every catalog job and the report invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*run) {
      std::ifstream in(jobFile);
      if (!in) throw hwprobe::InputError("cannot read job file '" + jobFile + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      return emitAndExit(runJob(parseJob(buffer.str()), runOptions(flags)), flags);
    }
    if (*cat) {
      if (entry.empty()) {
        for (const auto& n : catalogNames()) std::cout << n << "\n";
        return kOk;
      }
      JobSpec spec = catalog(entry);
      if (!runEntry) {
        std::cout << printJob(spec);
        return kOk;
      }
      return emitAndExit(runJob(spec, runOptions(flags)), flags);
    }
    if (*self) return selftest(flags);
  } catch (const hwprobe::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const hwprobe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
