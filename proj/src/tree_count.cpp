#include <Eigen/Dense>
#include <cmath>

#include "ustlab/oracles.hpp"

namespace ustlab {

namespace {

// Reduced Laplacian with vertex 0 removed; self-loops ignored.
template <class T, class Convert>
std::vector<std::vector<T>> reduced_laplacian(const Graph& g, Convert convert) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<T>> l(n - 1, std::vector<T>(n - 1, T(0)));
  for (const auto& e : g.weighted_edges()) {
    if (e.u == e.v) continue;
    const T w = convert(e.weight);
    auto a = static_cast<std::size_t>(e.u), b = static_cast<std::size_t>(e.v);
    if (a > 0) l[a - 1][a - 1] += w;
    if (b > 0) l[b - 1][b - 1] += w;
    if (a > 0 && b > 0) {
      l[a - 1][b - 1] -= w;
      l[b - 1][a - 1] -= w;
    }
  }
  return l;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt spanning_tree_count(const Graph& g) {
  if (g.vertex_count() == 1) return 1;
  auto l = reduced_laplacian<BigInt>(g, [](double w) {
    if (w != std::floor(w) || w > 9.0e15) throw GraphError("exact tree count needs integer edge weights");
    return BigInt(static_cast<long long>(w));
  });
  return bareiss_determinant(std::move(l));
}

double weighted_spanning_tree_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1.0;
  auto l = reduced_laplacian<double>(g, [](double w) { return w; });
  Eigen::MatrixXd m(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = l[i][j];
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  if (lu.rcond() < 1e-13) throw std::runtime_error("weighted tree count: Laplacian minor is ill-conditioned");
  return lu.determinant();
}

BigInt count_trees_containing(const Graph& g, const Tree& t) {
  const auto c = collapse(g, t);
  return spanning_tree_count(c.graph);
}

}  // namespace ustlab
