#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ustlab {

struct CriterionResult {
  std::string id;    // "AC1" .. "AC11"
  std::string name;  // suite name
  bool passed = false;
  std::vector<std::string> details;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> out_dir;  // CSVs go to out_dir/<suite>/
  std::size_t threads = 0;
};

// Suite names in criterion order, without "all".
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws std::invalid_argument on an
// unknown name.
std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& opts);

// Reruns the named suites into a scratch directory with a different worker
// count and compares every CSV byte for byte against reference_dir, which
// must hold the output of an earlier run with the same seed.
CriterionResult compare_rerun(const std::vector<std::string>& suites, const SuiteOptions& opts,
                              const std::filesystem::path& reference_dir);

std::string format_result(const CriterionResult& r);

}  // namespace ustlab
