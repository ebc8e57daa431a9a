#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ustlab/harness.hpp"

namespace ustlab {

// Every CSV starts with "# seed=<s> config=<hash>" and then a header row.
void write_preamble(std::ostream& out, std::uint64_t seed, std::uint64_t config_hash);

void write_steps_csv(std::ostream& out, const ExperimentConfig& cfg, std::size_t n, const StepStats& st);
void write_curve_csv(std::ostream& out, const ExperimentConfig& cfg, const StepStats& st);
void write_uniformity_csv(std::ostream& out, const ExperimentConfig& cfg, const UniformityReport& rep);

// Ordered metric,value rows. Reals carry 6 fractional digits; counts are exact.
class Report {
 public:
  void add(std::string metric, double value);
  void add(std::string metric, std::uint64_t value);
  void add(std::string metric, std::string value);
  const std::vector<std::pair<std::string, std::string>>& rows() const { return rows_; }
  void write(std::ostream& out, std::uint64_t seed, std::uint64_t config_hash) const;

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string hex_hash(std::uint64_t h);

}  // namespace ustlab
