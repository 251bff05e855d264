#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>

#include "netmix/adjacency.hpp"

namespace netmix {

enum class Metric { hamming, jaccard, l2 };

// Parses "hamming" | "jaccard" | "l2"; throws std::invalid_argument otherwise
// (the message lists the supported names).
Metric parse_metric(const std::string& name);
std::string metric_name(Metric m);

// Number of unordered node pairs on which a and b disagree.
int hamming_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

// 1 - |Ea n Eb| / |Ea u Eb|; two empty graphs have distance 0.
double jaccard_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

// Frobenius norm of the entrywise difference over the full matrix; equals
// sqrt(2 * hamming) for binary symmetric zero-diagonal matrices.
double l2_distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

double distance(const AdjacencyMatrix& a, const AdjacencyMatrix& b, Metric m);

// Symmetric zero-diagonal matrix of pairwise distances.
Eigen::MatrixXd distance_matrix(const NetworkPopulation& pop, Metric m);

// Per-pair edge frequencies over the whole population, or over the given
// subset of network indices. Symmetric with a zero diagonal.
Eigen::MatrixXd edge_frequency(const NetworkPopulation& pop,
                               std::optional<std::span<const int>> subset = {});

// Classical (Torgerson) multidimensional scaling. Double-centers -D^2/2,
// keeps the top `dim` eigenpairs in descending eigenvalue order, and scales
// eigenvectors by sqrt(max(eigenvalue, 0)). Each output column is flipped so
// its first nonzero coordinate is nonnegative. Requires dim <= N-1.
Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& dist, int dim);

}  // namespace netmix
