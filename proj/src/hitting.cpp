#include <Eigen/Dense>
#include <cmath>

#include "ustlab/oracles.hpp"

namespace ustlab {

namespace {

// Grounded Laplacian (D - W) on the vertices outside `removed`, which is
// symmetric positive definite for a connected graph. Self-loops cancel on
// the left; right-hand sides carry the full degree.
struct Grounded {
  std::vector<std::ptrdiff_t> index;  // vertex -> row, or -1
  std::vector<Vertex> vertex;         // row -> vertex
  Eigen::MatrixXd matrix;
};

Grounded grounded_laplacian(const Graph& g, const std::vector<Vertex>& removed) {
  const std::size_t n = g.vertex_count();
  Grounded gr;
  gr.index.assign(n, 0);
  for (Vertex r : removed) gr.index[static_cast<std::size_t>(r)] = -1;
  for (std::size_t v = 0; v < n; ++v) {
    if (gr.index[v] < 0) continue;
    gr.index[v] = static_cast<std::ptrdiff_t>(gr.vertex.size());
    gr.vertex.push_back(static_cast<Vertex>(v));
  }
  const auto s = static_cast<Eigen::Index>(gr.vertex.size());
  gr.matrix = Eigen::MatrixXd::Zero(s, s);
  for (Eigen::Index row = 0; row < s; ++row) {
    const Vertex v = gr.vertex[static_cast<std::size_t>(row)];
    for (const auto& nb : g.neighbors(v)) {
      if (nb.to == v) continue;
      gr.matrix(row, row) += nb.weight;
      auto col = gr.index[static_cast<std::size_t>(nb.to)];
      if (col >= 0) gr.matrix(row, col) -= nb.weight;
    }
  }
  return gr;
}

Eigen::LLT<Eigen::MatrixXd> factor(const Grounded& gr) {
  Eigen::LLT<Eigen::MatrixXd> llt(gr.matrix);
  if (llt.info() != Eigen::Success) throw std::runtime_error("hitting-time system is not positive definite");
  return llt;
}

std::vector<double> stationary_law(const Graph& g) {
  std::vector<double> pi(g.vertex_count());
  for (std::size_t v = 0; v < pi.size(); ++v) pi[v] = g.degree(static_cast<Vertex>(v)) / g.total_degree();
  return pi;
}

// E_i(h_e) with a return step for i in e.
double return_time(const Graph& g, Vertex i, const std::vector<double>& hit) {
  double acc = 0.0;
  for (const auto& nb : g.neighbors(i)) acc += nb.weight * hit[static_cast<std::size_t>(nb.to)];
  return 1.0 + acc / g.degree(i);
}

}  // namespace

HittingStats hitting_stats(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw GraphError("hitting_stats needs at least two vertices");
  if (n > 4096) throw GraphError("hitting_stats supports at most 4096 vertices");
  const auto m = g.edge_count();
  const double work = static_cast<double>(m) * std::pow(static_cast<double>(n), 3.0);
  if (work > 2.0e11) throw GraphError("per-edge hitting systems too large; use transitive_hitting");

  HittingStats hs;
  hs.n = n;
  hs.stationary = stationary_law(g);
  const auto& pi = hs.stationary;
  const auto N = static_cast<Eigen::Index>(n);

  // Fundamental matrix Z = (I - P + 1 pi^T)^{-1}; E_i(h_j) = (Z_jj - Z_ij) / pi_j.
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    const double d = g.degree(static_cast<Vertex>(i));
    for (const auto& nb : g.neighbors(static_cast<Vertex>(i))) a(i, nb.to) -= nb.weight / d;
    for (Eigen::Index j = 0; j < N; ++j) a(i, j) += pi[static_cast<std::size_t>(j)];
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  Eigen::MatrixXd z = lu.inverse();
  if (!z.allFinite()) throw std::runtime_error("fundamental matrix solve failed");
  hs.vertex = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto I = static_cast<Eigen::Index>(i), J = static_cast<Eigen::Index>(j);
      hs.vertex(i, j) = (z(J, J) - z(I, J)) / pi[j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hs.kemeny += pi[i] * pi[j] * hs.vertex(i, j);
  hs.omega = hs.kemeny + 1.0;

  hs.edges = g.edges();
  hs.edge = Matrix(n, m);
  hs.first_v = Matrix(n, m);
  const double nu = 1.0 / static_cast<double>(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Vertex u = hs.edges[e].u, v = hs.edges[e].v;
    auto gr = grounded_laplacian(g, {u, v});
    const auto s = static_cast<Eigen::Index>(gr.vertex.size());
    Eigen::MatrixXd rhs(s, 2);
    for (Eigen::Index r = 0; r < s; ++r) {
      const Vertex x = gr.vertex[static_cast<std::size_t>(r)];
      rhs(r, 0) = g.degree(x);
      rhs(r, 1) = g.weight(x, v);
    }
    Eigen::MatrixXd sol = s > 0 ? Eigen::MatrixXd(factor(gr).solve(rhs)) : Eigen::MatrixXd(0, 2);
    std::vector<double> hit(n, 0.0);
    for (Eigen::Index r = 0; r < s; ++r) {
      const auto x = static_cast<std::size_t>(gr.vertex[static_cast<std::size_t>(r)]);
      hit[x] = sol(r, 0);
      hs.edge(x, e) = sol(r, 0);
      hs.first_v(x, e) = sol(r, 1);
    }
    hs.first_v(static_cast<std::size_t>(v), e) = 1.0;
    hs.first_v(static_cast<std::size_t>(u), e) = 0.0;
    double zero = 0.0;
    for (std::size_t i = 0; i < n; ++i) zero += pi[i] * hit[i];
    hs.phi_zero += nu * zero;
    hs.phi += nu * (zero + pi[static_cast<std::size_t>(u)] * return_time(g, u, hit) +
                    pi[static_cast<std::size_t>(v)] * return_time(g, v, hit));
  }
  return hs;
}

TransitiveHitting transitive_hitting(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() == 0) throw GraphError("transitive_hitting needs at least three vertices");
  if (n > 4096) throw GraphError("transitive_hitting supports at most 4096 vertices");
  const auto pi = stationary_law(g);
  TransitiveHitting th;
  th.edge = g.edges().front();
  const Vertex u = th.edge.u, v = th.edge.v;

  {
    auto gr = grounded_laplacian(g, {u});
    const auto s = static_cast<Eigen::Index>(gr.vertex.size());
    Eigen::VectorXd rhs(s);
    for (Eigen::Index r = 0; r < s; ++r) rhs(r) = g.degree(gr.vertex[static_cast<std::size_t>(r)]);
    Eigen::VectorXd x = factor(gr).solve(rhs);
    for (Eigen::Index r = 0; r < s; ++r) th.kemeny += pi[static_cast<std::size_t>(gr.vertex[static_cast<std::size_t>(r)])] * x(r);
    th.adjacent_hitting = x(gr.index[static_cast<std::size_t>(v)]);
    th.omega = th.kemeny + 1.0;
  }
  {
    auto gr = grounded_laplacian(g, {u, v});
    const auto s = static_cast<Eigen::Index>(gr.vertex.size());
    Eigen::MatrixXd rhs(s, 2);
    for (Eigen::Index r = 0; r < s; ++r) {
      const Vertex x = gr.vertex[static_cast<std::size_t>(r)];
      rhs(r, 0) = g.degree(x);
      rhs(r, 1) = g.weight(x, v);
    }
    Eigen::MatrixXd sol = factor(gr).solve(rhs);
    std::vector<double> hit(n, 0.0);
    for (Eigen::Index r = 0; r < s; ++r) {
      const auto x = static_cast<std::size_t>(gr.vertex[static_cast<std::size_t>(r)]);
      hit[x] = sol(r, 0);
      th.phi_zero += pi[x] * sol(r, 0);
      th.first_hit_mass += pi[x] * sol(r, 1);
    }
    th.first_hit_mass += pi[static_cast<std::size_t>(v)];
    th.phi = th.phi_zero + pi[static_cast<std::size_t>(u)] * return_time(g, u, hit) +
             pi[static_cast<std::size_t>(v)] * return_time(g, v, hit);
  }
  return th;
}

SpeedupResiduals speedup_residual(const HittingStats& h) {
  SpeedupResiduals r;
  r.omega_minus_phi = h.omega - h.phi;
  const std::size_t m = h.edges.size();
  double rhs = 0.0;
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t e = 0; e < m; ++e) {
    const auto u = static_cast<std::size_t>(h.edges[e].u), v = static_cast<std::size_t>(h.edges[e].v);
    double mass_v = 0.0;
    for (std::size_t i = 0; i < h.n; ++i) mass_v += h.stationary[i] * h.first_v(i, e);
    const double mass_u = 1.0 - mass_v;
    rhs += 0.5 * (h.vertex(v, u) * mass_v + h.vertex(u, v) * mass_u) / static_cast<double>(m);
    lo = std::min({lo, h.vertex(v, u), h.vertex(u, v)});
    hi = std::max({hi, h.vertex(v, u), h.vertex(u, v)});
  }
  r.general_rhs = rhs;
  r.general = std::abs(r.omega_minus_phi - rhs);
  if (m > 0 && hi - lo <= 1e-9 * std::max(1.0, hi)) r.transitive = std::abs(r.omega_minus_phi - hi / 2.0);
  return r;
}

SpeedupResiduals speedup_residual(const Graph& g) { return speedup_residual(hitting_stats(g)); }

}  // namespace ustlab
