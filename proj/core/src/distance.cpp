#include "netmix/distance.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace netmix {

Metric parse_metric(const std::string& name) {
  if (name == "hamming") return Metric::hamming;
  if (name == "jaccard") return Metric::jaccard;
  if (name == "l2") return Metric::l2;
  throw std::invalid_argument("unsupported metric '" + name +
                              "' (supported: hamming, jaccard, l2)");
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::hamming: return "hamming";
    case Metric::jaccard: return "jaccard";
    case Metric::l2: return "l2";
  }
  return "?";
}

namespace {

void check_dims(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.node_count() != b.node_count())
    throw std::invalid_argument("distance: networks have different node counts");
}

}  // namespace

int hamming_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  check_dims(a, b);
  std::int64_t diff = 0;
  for (int i = 0; i < a.node_count(); ++i) {
    auto ra = a.row_words(i);
    auto rb = b.row_words(i);
    for (std::size_t w = 0; w < ra.size(); ++w) diff += std::popcount(ra[w] ^ rb[w]);
  }
  return static_cast<int>(diff / 2);
}

double jaccard_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  check_dims(a, b);
  std::int64_t inter = 0, uni = 0;
  for (int i = 0; i < a.node_count(); ++i) {
    auto ra = a.row_words(i);
    auto rb = b.row_words(i);
    for (std::size_t w = 0; w < ra.size(); ++w) {
      inter += std::popcount(ra[w] & rb[w]);
      uni += std::popcount(ra[w] | rb[w]);
    }
  }
  if (uni == 0) return 0.0;  // both empty: identical objects
  return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

double l2_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  return std::sqrt(2.0 * hamming_distance(a, b));
}

double distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b, Metric m) {
  switch (m) {
    case Metric::hamming: return hamming_distance(a, b);
    case Metric::jaccard: return jaccard_distance(a, b);
    case Metric::l2: return l2_distance(a, b);
  }
  throw std::invalid_argument("distance: unknown metric");
}

Eigen::MatrixXd distance_matrix(const NetworkPopulation& pop, Metric m) {
  const int N = pop.size();
  if (N < 2) throw std::invalid_argument("distance_matrix: need at least 2 networks");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) d(i, j) = d(j, i) = distance(pop[i], pop[j], m);
  return d;
}

Eigen::MatrixXd edge_frequency(const NetworkPopulation& pop,
                               std::optional<std::span<const int>> subset) {
  const int n = pop.node_count();
  std::vector<int> indices;
  if (subset) {
    if (subset->empty()) throw std::invalid_argument("edge_frequency: empty subset");
    indices.assign(subset->begin(), subset->end());
    for (int k : indices)
      if (k < 0 || k >= pop.size())
        throw std::invalid_argument("edge_frequency: subset index out of range");
  } else {
    indices.resize(pop.size());
    for (int k = 0; k < pop.size(); ++k) indices[k] = k;
  }
  Eigen::MatrixXd freq = Eigen::MatrixXd::Zero(n, n);
  for (int k : indices)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pop[k].at(i, j)) {
          freq(i, j) += 1.0;
          freq(j, i) += 1.0;
        }
  freq /= static_cast<double>(indices.size());
  return freq;
}

Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& dist, int dim) {
  const int N = static_cast<int>(dist.rows());
  if (dim < 1 || dim > N - 1)
    throw std::invalid_argument("classical_mds: dim must be in [1, N-1]");

  Eigen::MatrixXd b = -0.5 * dist.array().square().matrix();
  // Double centering: B <- J B J with J = I - 11'/N.
  Eigen::VectorXd row_mean = b.rowwise().mean();
  Eigen::VectorXd col_mean = b.colwise().mean();
  const double grand_mean = b.mean();
  b.colwise() -= row_mean;
  b.rowwise() -= col_mean.transpose();
  b.array() += grand_mean;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("classical_mds: eigendecomposition failed");

  // Eigenvalues come back ascending; take the top `dim` in descending order.
  Eigen::MatrixXd coords(N, dim);
  for (int d = 0; d < dim; ++d) {
    const int col = N - 1 - d;
    const double lambda = std::max(eig.eigenvalues()(col), 0.0);
    coords.col(d) = eig.eigenvectors().col(col) * std::sqrt(lambda);
  }
  // Sign convention: first nonzero coordinate of each column nonnegative.
  for (int d = 0; d < dim; ++d) {
    for (int i = 0; i < N; ++i) {
      if (std::abs(coords(i, d)) > 1e-12) {
        if (coords(i, d) < 0.0) coords.col(d) = -coords.col(d);
        break;
      }
    }
  }
  return coords;
}

}  // namespace netmix
