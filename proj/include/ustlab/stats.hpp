#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ustlab {

struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

// Cells with zero expected mass are excluded; any observation in such a cell
// makes the statistic infinite.
ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected_prob);

double tv_distance(std::span<const std::uint64_t> observed, std::span<const double> prob);
double tv_distance(std::span<const double> p, std::span<const double> q);

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
  double se = 0.0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
};

Summary summarize(std::span<const std::uint64_t> values);

std::string fixed(double x, int digits = 6);

std::uint64_t fnv1a(std::string_view text);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace ustlab
