#include "ustlab/branch_chain.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ustlab {

namespace {

void check_range(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1 || k >= n)
    throw std::invalid_argument("need 1 <= k < n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

double Pmf::sum() const {
  double s = 0.0;
  for (double x : p) s += x;
  return s;
}

Pmf branch_pmf(std::size_t n, std::size_t k) {
  check_range(n, k);
  const std::size_t hmax = n - k;
  Pmf out;
  out.p.resize(hmax);
  const auto nd = static_cast<double>(n), kd = static_cast<double>(k);
  out.p[0] = (kd + 1.0) / nd;
  for (std::size_t h = 1; h < hmax; ++h) {
    const auto hd = static_cast<double>(h);
    out.p[h] = out.p[h - 1] * (kd + hd + 1.0) * (nd - kd - hd) / ((kd + hd) * nd);
  }
  if (std::abs(out.sum() - 1.0) > 1e-12)
    throw std::runtime_error("branch_pmf normalization failed at n=" + std::to_string(n));
  return out;
}

BranchChain build_chain(std::size_t n, std::size_t k, ChainVariant variant) {
  check_range(n, k);
  const std::size_t hs = n - k;
  const auto nd = static_cast<double>(n), kd = static_cast<double>(k);
  BranchChain c;
  c.n = n;
  c.k = k;
  c.variant = variant;
  if (variant == ChainVariant::absorbing) {
    const std::size_t stop = hs;
    c.transition.assign(hs + 1, std::vector<double>(hs + 1, 0.0));
    for (std::size_t h = 1; h <= hs; ++h) {
      auto& row = c.transition[h - 1];
      row[stop] = kd / nd;
      if (h < hs) row[h] = (nd - kd - static_cast<double>(h)) / nd;
      for (std::size_t l = 1; l <= h; ++l) row[l - 1] += 1.0 / nd;
    }
    c.transition[stop][stop] = 1.0;
    return c;
  }
  // Drop the self-loop of every state, renormalize by n/(n-1) and merge
  // stop into state 1.
  c.transition.assign(hs, std::vector<double>(hs, 0.0));
  const double m = nd - 1.0;
  for (std::size_t h = 1; h <= hs; ++h) {
    auto& row = c.transition[h - 1];
    if (h < hs) row[h] = (nd - kd - static_cast<double>(h)) / m;
    if (h == 1) {
      row[0] = kd / m;
    } else {
      row[0] = (kd + 1.0) / m;
      for (std::size_t l = 2; l < h; ++l) row[l - 1] = 1.0 / m;
    }
  }
  return c;
}

Pmf stationary(const BranchChain& chain) {
  if (chain.variant != ChainVariant::lumped) throw std::invalid_argument("stationary needs the lumped chain");
  const auto s = static_cast<Eigen::Index>(chain.states());
  Eigen::MatrixXd a(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j) a(j, i) = chain(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  a -= Eigen::MatrixXd::Identity(s, s);
  // Replace one balance equation by the normalization.
  a.row(s - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s);
  rhs(s - 1) = 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::VectorXd pi = lu.solve(rhs);
  if (!pi.allFinite()) throw std::runtime_error("stationary solve failed");
  Pmf out;
  out.p.assign(pi.data(), pi.data() + s);
  double resid = 0.0;
  for (Eigen::Index j = 0; j < s; ++j) {
    double x = 0.0;
    for (Eigen::Index i = 0; i < s; ++i) x += pi(i) * chain(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    resid = std::max(resid, std::abs(x - pi(j)));
  }
  if (resid > 1e-12) throw std::runtime_error("stationary residual too large: " + std::to_string(resid));
  return out;
}

Pmf absorption_profile(const BranchChain& chain) {
  if (chain.variant != ChainVariant::absorbing)
    throw std::invalid_argument("absorption_profile needs the absorbing chain");
  const auto s = static_cast<Eigen::Index>(chain.states() - 1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j) a(i, j) -= chain(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  // Row 1 of N = (I-Q)^{-1} solves N^T e1.
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(s);
  e1(0) = 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a.transpose());
  Eigen::VectorXd row = lu.solve(e1);
  if (!row.allFinite()) throw std::runtime_error("absorption solve failed");
  Pmf out;
  out.p.resize(static_cast<std::size_t>(s));
  const std::size_t stop = static_cast<std::size_t>(s);
  for (Eigen::Index h = 0; h < s; ++h) out.p[static_cast<std::size_t>(h)] = row(h) * chain(static_cast<std::size_t>(h), stop);
  return out;
}

double max_abs_diff(const Pmf& a, const Pmf& b) {
  double d = 0.0;
  const std::size_t m = std::max(a.size(), b.size());
  for (std::size_t h = 1; h <= m; ++h) d = std::max(d, std::abs(a(h) - b(h)));
  return d;
}

double total_variation(const Pmf& a, const Pmf& b) {
  double d = 0.0;
  const std::size_t m = std::max(a.size(), b.size());
  for (std::size_t h = 1; h <= m; ++h) d += std::abs(a(h) - b(h));
  return d / 2.0;
}

void write_pmf_csv(std::ostream& out, const Pmf& pmf) {
  out << "h,probability\n";
  for (std::size_t h = 1; h <= pmf.size(); ++h) out << h << ',' << fixed6(pmf(h)) << '\n';
}

void write_chain_csv(std::ostream& out, const BranchChain& chain) {
  out << "from,to,prob\n";
  const std::size_t hs = chain.n - chain.k;
  auto name = [&](std::size_t i) { return i < hs ? std::to_string(i + 1) : std::string("stop"); };
  for (std::size_t i = 0; i < chain.states(); ++i)
    for (std::size_t j = 0; j < chain.states(); ++j)
      if (chain(i, j) != 0.0) out << name(i) << ',' << name(j) << ',' << fixed6(chain(i, j)) << '\n';
}

}  // namespace ustlab
