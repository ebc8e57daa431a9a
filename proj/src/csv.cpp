#include "ustlab/csv.hpp"

#include <cstdio>

namespace ustlab {

std::string hex_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_preamble(std::ostream& out, std::uint64_t seed, std::uint64_t config_hash) {
  out << "# seed=" << seed << " config=" << hex_hash(config_hash) << '\n';
}

void write_steps_csv(std::ostream& out, const ExperimentConfig& cfg, std::size_t n, const StepStats& st) {
  write_preamble(out, cfg.seed, cfg.hash());
  out << "algorithm,graph,n,replica,steps\n";
  const auto algo = algorithm_name(cfg.algorithm);
  const std::string graph = '"' + cfg.graph.label() + '"';
  for (std::size_t k = 0; k < st.steps.size(); ++k)
    out << algo << ',' << graph << ',' << n << ',' << k << ',' << st.steps[k] << '\n';
}

void write_curve_csv(std::ostream& out, const ExperimentConfig& cfg, const StepStats& st) {
  write_preamble(out, cfg.seed, cfg.hash());
  out << "algorithm,k,mean_steps\n";
  const auto algo = algorithm_name(cfg.algorithm);
  for (std::size_t k = 0; k < st.curve.size(); ++k) out << algo << ',' << k + 1 << ',' << fixed(st.curve[k]) << '\n';
}

void write_uniformity_csv(std::ostream& out, const ExperimentConfig& cfg, const UniformityReport& rep) {
  write_preamble(out, cfg.seed, cfg.hash());
  out << "tree_id,observed,expected\n";
  for (std::size_t s = 0; s < rep.observed.size(); ++s)
    out << s << ',' << rep.observed[s] << ',' << fixed(rep.expected[s] * static_cast<double>(rep.samples)) << '\n';
}

void Report::add(std::string metric, double value) { rows_.emplace_back(std::move(metric), fixed(value)); }

void Report::add(std::string metric, std::uint64_t value) {
  rows_.emplace_back(std::move(metric), std::to_string(value));
}

void Report::add(std::string metric, std::string value) { rows_.emplace_back(std::move(metric), std::move(value)); }

void Report::write(std::ostream& out, std::uint64_t seed, std::uint64_t config_hash) const {
  write_preamble(out, seed, config_hash);
  out << "metric,value\n";
  for (const auto& [m, v] : rows_) out << m << ',' << v << '\n';
}

}  // namespace ustlab
