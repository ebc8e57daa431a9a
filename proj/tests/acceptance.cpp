// Runs every acceptance suite at its registered tolerances and prints one
// PASS/FAIL line per criterion. Usage: acceptance [seed] [--out dir]
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <unistd.h>

#include "ustlab/suites.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  ustlab::SuiteOptions opts;
  bool keep = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--out" && i + 1 < argc) {
      opts.out_dir = argv[++i];
      keep = true;
    } else {
      opts.seed = std::stoull(a);
    }
  }
  if (!opts.out_dir) opts.out_dir = fs::temp_directory_path() / ("ustlab-acceptance-" + std::to_string(::getpid()));

  std::vector<std::string> suites;
  for (const auto& name : ustlab::suite_names())
    if (name != "determinism") suites.push_back(name);

  bool ok = true;
  auto report = [&](const ustlab::CriterionResult& r, double secs) {
    ok = ok && r.passed;
    std::cout << ustlab::format_result(r) << "\n    (" << secs << " s)" << std::endl;
  };
  for (const auto& name : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : ustlab::run_suite(name, opts))
      report(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto rerun = ustlab::compare_rerun(suites, opts, *opts.out_dir);
  report(rerun, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  if (!keep) fs::remove_all(*opts.out_dir);
  std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
