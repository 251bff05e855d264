#pragma once

#include <Eigen/Dense>
#include <vector>

#include "netmix/adjacency.hpp"
#include "netmix/distance.hpp"
#include "netmix/model.hpp"
#include "netmix/rng.hpp"
#include "netmix/sampler.hpp"

namespace netmix {

struct InitPlan {
  std::vector<Metric> metrics{Metric::hamming, Metric::jaccard, Metric::l2};
  int clusters = 1;
  int blocks = 1;
  int max_kmedoids_iters = 100;
  void validate() const;
};

// PAM-style k-medoids over a precomputed distance matrix. The first medoid is
// drawn from the rng; the rest are seeded by greedy max-min spread. Returns
// 0-based labels of length N. Assignment ties go to the lowest medoid index.
std::vector<int> k_medoids(const Eigen::MatrixXd& dist, int clusters, Rng& rng,
                           int max_iters = 100);

// Combines several labelings into one: each non-reference labeling is
// relabeled by the permutation maximising agreement with the reference, then
// every item takes its modal aligned label (ties resolved by the reference).
std::vector<int> majority_vote(const std::vector<std::vector<int>>& labelings,
                               int reference, int num_labels);

// Representative init: each pair drawn Bernoulli(within-cluster edge
// frequency); an empty cluster falls back to the full-population frequency.
AdjacencyMatrix init_representative(const NetworkPopulation& pop,
                                    const std::vector<int>& z, int cluster, Rng& rng);

// Normalized-Laplacian spectral clustering of the representative's nodes
// into K blocks (degrees floored at 1; bottom-K eigenvectors; row
// normalisation; seeded k-means with 20 restarts). Labels are 0-based and
// canonicalised by first occurrence.
std::vector<int> spectral_block_init(const AdjacencyMatrix& rep, int blocks, Rng& rng);

struct InitSummary {
  std::vector<Metric> metrics;
  double vote_agreement = 1.0;  // share of networks on which all metrics agreed
  std::vector<int> initial_labels;
};

// Full initialisation pipeline: metric-ensemble k-medoids with majority vote
// for z, edge-frequency Bernoulli draws for representatives, spectral block
// assignment for b; w and theta start at their conditional posterior means
// and p = q = 0.25.
ChainState build_initial_state(const NetworkPopulation& pop, const InitPlan& plan,
                               const Hyperparams& hyper, bool shared_representative,
                               Rng& rng, InitSummary* summary = nullptr);

}  // namespace netmix
