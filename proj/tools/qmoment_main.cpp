// Command-line front end. Everything goes through the C API of the shared
// library; this translation unit has no access to the C++ core.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quivermoment.h"

namespace {

// Exit codes: 0 success / proper, 1 check failure, 2 input error,
// 3 not proper.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotProper = 3;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { qmm_string_free(ptr); }
  const char* get() const { return ptr ? ptr : ""; }
};

struct OwnedProblem {
  qmm_problem* ptr = nullptr;
  ~OwnedProblem() { qmm_problem_free(ptr); }
};

struct OwnedReport {
  qmm_report* ptr = nullptr;
  ~OwnedReport() { qmm_report_free(ptr); }
};

int input_error(const char* what) {
  std::fprintf(stderr, "error: %s: %s\n", what, qmm_last_error());
  return kExitInputError;
}

bool load(const std::string& path, OwnedProblem& problem) {
  return qmm_problem_from_file(path.c_str(), &problem.ptr) == QMM_OK;
}

// File-level seed if present, else the fixed default.
unsigned long long default_seed(const qmm_problem* p) {
  unsigned long long s = 1;
  qmm_problem_seed(p, &s);
  return s;
}

int run_validate(const std::string& path) {
  OwnedProblem problem;
  if (!load(path, problem))
    return input_error(path.c_str());
  OwnedString text;
  int count = 0;
  if (qmm_problem_violations(problem.ptr, &text.ptr, &count) != QMM_OK)
    return input_error(path.c_str());
  if (count == 0) {
    std::printf("OK: %s is a valid problem\n", path.c_str());
    return kExitOk;
  }
  std::fputs(text.get(), stdout);
  std::printf("INVALID: %d violation%s\n", count, count == 1 ? "" : "s");
  return kExitCheckFailed;
}

int run_analyze(const std::string& path, bool json,
                const std::vector<double>& probe_radii, int samples,
                unsigned long long seed, bool seed_given) {
  OwnedProblem problem;
  if (!load(path, problem))
    return input_error(path.c_str());

  OwnedReport report;
  if (qmm_analyze(problem.ptr, &report.ptr) != QMM_OK)
    return input_error(path.c_str());

  OwnedString text;
  qmm_status st;
  if (probe_radii.empty()) {
    st = json ? qmm_report_json(report.ptr, &text.ptr)
              : qmm_report_text(report.ptr, &text.ptr);
  } else {
    qmm_probe_options opts;
    opts.radii = probe_radii.data();
    opts.radii_count = static_cast<int>(probe_radii.size());
    opts.samples_per_radius = samples;
    opts.seed = seed_given ? seed : default_seed(problem.ptr);
    st = json ? qmm_report_json_with_probe(report.ptr, &opts, &text.ptr)
              : qmm_report_text_with_probe(report.ptr, &opts, &text.ptr);
  }
  if (st != QMM_OK)
    return input_error(path.c_str());

  std::fputs(text.get(), stdout);
  return qmm_report_is_proper(report.ptr) ? kExitOk : kExitNotProper;
}

int run_verify(const std::string& path, int trials, unsigned long long seed,
               bool seed_given) {
  OwnedProblem problem;
  if (!load(path, problem))
    return input_error(path.c_str());

  OwnedString text;
  int all_pass = 0;
  const unsigned long long use_seed =
      seed_given ? seed : default_seed(problem.ptr);
  if (qmm_verify(problem.ptr, trials, use_seed, 0.0, &text.ptr, &all_pass) !=
      QMM_OK)
    return input_error(path.c_str());
  std::fputs(text.get(), stdout);
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_moment(const std::string& path, const std::string& rep_path, bool json) {
  OwnedProblem problem;
  if (!load(path, problem))
    return input_error(path.c_str());
  OwnedString text;
  if (qmm_moment_from_file(problem.ptr, rep_path.c_str(), json ? 1 : 0,
                           &text.ptr) != QMM_OK)
    return input_error(rep_path.c_str());
  std::fputs(text.get(), stdout);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment maps for complex representations of finite quivers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qmoment ") + qmm_version());

  std::string path;
  std::string rep_path;
  bool json = false;
  std::vector<double> probe_radii;
  int samples = 64;
  int trials = 100;
  unsigned long long seed = 1;

  auto* validate =
      app.add_subcommand("validate", "check a problem file and list violations");
  validate->add_option("file", path, "problem file")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "decide properness; print a witness family or a certificate");
  analyze->add_option("file", path, "problem file")->required();
  analyze->add_flag("--json", json, "machine-readable output");
  analyze->add_option("--probe", probe_radii,
                      "comma-separated radii: sample ||Phi|| on those spheres")
      ->delimiter(',');
  analyze->add_option("--samples", samples, "probe samples per radius")
      ->check(CLI::PositiveNumber);
  auto* analyze_seed = analyze->add_option("--seed", seed, "probe seed");

  auto* verify = app.add_subcommand(
      "verify", "run the randomized moment-map identity checks");
  verify->add_option("file", path, "problem file")->required();
  verify->add_option("--trials", trials, "number of random trials")
      ->check(CLI::NonNegativeNumber);
  auto* verify_seed = verify->add_option("--seed", seed, "trial seed");

  auto* moment =
      app.add_subcommand("moment", "evaluate L_theta(rho) for a rep-matrix file");
  moment->add_option("file", path, "problem file")->required();
  moment->add_option("--rep", rep_path, "rep-matrix file")->required();
  moment->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help / --version
    app.exit(e);
    return kExitInputError;
  }

  if (validate->parsed())
    return run_validate(path);
  if (analyze->parsed())
    return run_analyze(path, json, probe_radii, samples, seed,
                       analyze_seed->count() > 0);
  if (verify->parsed())
    return run_verify(path, trials, seed, verify_seed->count() > 0);
  if (moment->parsed())
    return run_moment(path, rep_path, json);
  return kExitInputError;
}
