#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

namespace ustlab {

// Distribution over h = 1..size().
struct Pmf {
  std::vector<double> p;  // p[h-1]
  std::size_t size() const { return p.size(); }
  double operator()(std::size_t h) const { return h >= 1 && h <= p.size() ? p[h - 1] : 0.0; }
  double sum() const;
};

enum class ChainVariant { absorbing, lumped };

// States 1..n-k are indices 0..n-k-1; the absorbing variant adds the stop
// state as the last index.
struct BranchChain {
  std::size_t n = 0;
  std::size_t k = 0;
  ChainVariant variant = ChainVariant::lumped;
  std::vector<std::vector<double>> transition;
  std::size_t states() const { return transition.size(); }
  double operator()(std::size_t from, std::size_t to) const { return transition[from][to]; }
};

Pmf branch_pmf(std::size_t n, std::size_t k);
BranchChain build_chain(std::size_t n, std::size_t k, ChainVariant variant);
Pmf stationary(const BranchChain& chain);
Pmf absorption_profile(const BranchChain& chain);

double max_abs_diff(const Pmf& a, const Pmf& b);
double total_variation(const Pmf& a, const Pmf& b);

void write_pmf_csv(std::ostream& out, const Pmf& pmf);
// States are written 1-based; the stop state is written as "stop".
void write_chain_csv(std::ostream& out, const BranchChain& chain);

}  // namespace ustlab
