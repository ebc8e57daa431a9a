#include "ustlab/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ustlab {

ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected_prob) {
  if (observed.size() != expected_prob.size()) throw std::invalid_argument("chi_square: size mismatch");
  std::uint64_t total = 0;
  for (auto o : observed) total += o;
  ChiSquare out;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected_prob[i] * static_cast<double>(total);
    const auto o = static_cast<double>(observed[i]);
    if (expected_prob[i] <= 0.0) {
      if (observed[i] > 0) out.statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    ++cells;
    if (std::isfinite(out.statistic)) out.statistic += (o - e) * (o - e) / e;
  }
  out.dof = cells > 0 ? cells - 1 : 0;
  if (!std::isfinite(out.statistic)) out.p_value = 0.0;
  else if (out.dof == 0) out.p_value = 1.0;
  else out.p_value = boost::math::gamma_q(static_cast<double>(out.dof) / 2.0, out.statistic / 2.0);
  return out;
}

double tv_distance(std::span<const std::uint64_t> observed, std::span<const double> prob) {
  if (observed.size() != prob.size()) throw std::invalid_argument("tv_distance: size mismatch");
  std::uint64_t total = 0;
  for (auto o : observed) total += o;
  if (total == 0) throw std::invalid_argument("tv_distance: empty histogram");
  double d = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i)
    d += std::abs(static_cast<double>(observed[i]) / static_cast<double>(total) - prob[i]);
  return d / 2.0;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("tv_distance: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
  return d / 2.0;
}

Summary summarize(std::span<const std::uint64_t> values) {
  Summary s;
  if (values.empty()) return s;
  unsigned __int128 sum = 0;
  s.min = values.front();
  s.max = values.front();
  for (auto v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  const auto n = static_cast<double>(values.size());
  s.mean = static_cast<double>(sum) / n;
  long double ss = 0.0L;
  for (auto v : values) {
    const long double d = static_cast<long double>(v) - s.mean;
    ss += d * d;
  }
  s.sd = values.size() > 1 ? std::sqrt(static_cast<double>(ss / (n - 1.0))) : 0.0;
  s.se = s.sd / std::sqrt(n);
  return s;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = fnv1a(label) ^ (seed + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2));
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 31;
  return h;
}

}  // namespace ustlab
