#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netmix/adjacency.hpp"
#include "netmix/rng.hpp"

namespace netmix {

// Everything needed to generate one synthetic population: per-cluster SBM
// parameters, per-cluster noise levels, and cluster sizes.
struct RegimeSpec {
  std::string name;
  int nodes = 0;
  int clusters = 0;
  int blocks = 0;
  std::vector<int> cluster_sizes;            // sums to the population size
  std::vector<std::vector<double>> w;        // per cluster, length K
  std::vector<Eigen::MatrixXd> theta;        // per cluster, K x K symmetric
  std::vector<double> p, q;                  // per cluster
  std::uint64_t seed = 0;

  int population_size() const;
  void validate() const;
};

std::vector<int> sample_block_labels(int n, std::span<const double> w, Rng& rng);

AdjacencyMatrix sample_sbm_representative(const std::vector<int>& b,
                                          const Eigen::MatrixXd& theta, Rng& rng);

// Measurement-error perturbation: a representative edge survives with
// probability 1-q; a non-edge turns into an edge with probability p.
AdjacencyMatrix perturb_representative(const AdjacencyMatrix& rep, double p, double q,
                                       Rng& rng);

struct GroundTruth {
  RegimeSpec spec;
  std::vector<AdjacencyMatrix> representatives;  // per cluster
  std::vector<std::vector<int>> blocks;          // per cluster, length n
  std::vector<int> z;                            // planted memberships
};

// Generates one representative per cluster, then cluster_sizes[c] perturbed
// copies of each, in cluster order. Deterministic given spec.seed.
std::pair<NetworkPopulation, GroundTruth> generate_population(const RegimeSpec& spec);

// Named presets:
//   sim1..sim12       21-node, 3-cluster, 2-block regimes (60 networks per
//                     cluster) with the noise/SBM grids used throughout the
//                     simulation study.
//   scale25..scale100 25/50/75/100-node regimes with p = q = 0.08; block edge
//                     probabilities are scaled by (25-1)/(n-1) from the
//                     25-node baseline so the expected degree is preserved.
// The scale presets take a population size (must split evenly across the 3
// clusters); sim presets are fixed at N = 180.
RegimeSpec regime_preset(const std::string& name, std::uint64_t seed,
                         int population_size = 0);
std::vector<std::string> regime_preset_names();

}  // namespace netmix
