#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "netmix/adjacency.hpp"
#include "netmix/model.hpp"
#include "netmix/rng.hpp"

namespace netmix {

enum class NoiseKind { false_positive, false_negative };

// Kernel configuration for one chain. Weight vectors must sum to 1.
struct McmcConfig {
  int clusters = 1;
  int blocks = 1;
  std::int64_t iterations = 0;
  std::int64_t burn_in = 0;
  std::int64_t thin = 1;
  std::uint64_t seed = 0;

  // Representative proposal (I): per-pair flip probability. A value <= 0 is
  // resolved to 4/(n(n-1)) at chain start (two expected pair flips).
  double omega = 0.0;
  // Probability of choosing proposal (I) over the edge-frequency proposal (II).
  double rep_kernel_mix = 0.8;
  // Half-widths for the reflected random walk on p and q, with selection
  // weights; every u must lie in (0, 0.5).
  std::vector<double> u_ladder{0.01, 0.05, 0.1};
  std::vector<double> u_weights{1.0 / 3, 1.0 / 3, 1.0 / 3};
  // Selection weights over {representative, p, q} for the MH step.
  std::array<double, 3> kernel_weights{1.0 / 3, 1.0 / 3, 1.0 / 3};

  Hyperparams hyper;

  void validate() const;
};

// Full sampler state. In the outlier variant, C = 2 clusters share a single
// representative/SBM slot; otherwise there is one slot per cluster.
struct ChainState {
  bool shared_representative = false;
  std::vector<AdjacencyMatrix> representatives;
  std::vector<SbmParams> sbm;
  std::vector<NoiseParams> noise;
  std::vector<double> tau;
  std::vector<int> z;

  int cluster_count() const { return static_cast<int>(noise.size()); }
  int rep_slots() const { return static_cast<int>(representatives.size()); }
  int rep_slot(int c) const { return shared_representative ? 0 : c; }
  void validate(int n, int population_size) const;
};

// One thinned posterior draw. Representative/SBM quantities are indexed by
// rep slot (a single entry in the outlier variant).
struct Draw {
  std::int64_t iteration = 0;
  std::vector<double> tau, p, q;
  std::vector<std::vector<double>> w;
  std::vector<Eigen::MatrixXd> theta;
  std::vector<std::vector<int>> b;
  std::vector<AdjacencyMatrix> representatives;
  std::vector<int> z;
  double log_posterior = 0.0;
};

struct PosteriorSamples {
  McmcConfig config;
  bool shared_representative = false;
  int node_count = 0;
  int population_size = 0;
  std::vector<Draw> draws;
};

// Reflection of a random-walk proposal into (0, 0.5):
// y for 0<y<0.5, -y for y<0, 1-y for y>0.5.
double reflect_half(double y);

// Metropolis-Hastings-within-Gibbs sampler for the mixture of
// measurement-error models. Update kernels are public so they can be
// exercised (and verified against enumeration) in isolation.
class GibbsSampler {
 public:
  GibbsSampler(const NetworkPopulation& pop, McmcConfig config, ChainState init);

  // tau | z  ~ Dirichlet(psi + eta).
  void update_tau();
  // z_k | ... ~ categorical with log weights log tau_c + log lik(A_k | c).
  void update_z();
  // w | b ~ Dirichlet(chi + block counts).
  void update_w(int slot);
  // theta_kl | rep, b ~ Beta over unordered block pairs, kept symmetric.
  void update_theta(int slot);
  // Single-site sweep over nodes in index order, latest labels used.
  void update_b(int slot);
  // Mixture-kernel MH step on the representative of cluster c. Returns
  // whether the proposal was accepted.
  bool mh_update_representative(int c);
  // Reflected random-walk MH step on p_c or q_c.
  bool mh_update_noise(int c, NoiseKind which);

  // Draws a representative proposal for cluster c along with
  // log Q(current|proposed) - log Q(proposed|current).
  std::pair<AdjacencyMatrix, double> propose_representative(int c);

  // One full iteration in the order: tau; per cluster {one MH kernel, then
  // w, theta, b}; z. In the shared-representative variant w/theta/b are
  // updated once per iteration.
  void step();

  // Runs config.iterations steps, recording a draw at every thin-th
  // iteration after burn-in.
  PosteriorSamples run();

  const ChainState& state() const { return state_; }
  const McmcConfig& config() const { return config_; }
  std::int64_t iteration() const { return iteration_; }
  Rng& rng() { return rng_; }

  // Log unnormalised joint posterior of the current state (cached data
  // counts); the _recomputed variant rebuilds every count from scratch.
  double log_posterior() const;
  double log_posterior_recomputed() const;

  // Data log likelihood restricted to networks currently in cluster c.
  double cluster_data_log_likelihood(int c) const;

 private:
  const PairCounts& counts(int k, int slot) const {
    return counts_[static_cast<std::size_t>(k) * state_.rep_slots() + slot];
  }
  PairCounts& counts(int k, int slot) {
    return counts_[static_cast<std::size_t>(k) * state_.rep_slots() + slot];
  }
  void rebuild_counts(int slot);
  void refresh_eta();
  PairCounts cluster_counts(int c) const;
  std::vector<std::pair<int, int>> diff_pairs(const AdjacencyMatrix& a,
                                              const AdjacencyMatrix& b) const;
  double flip_delta_data(int c, const std::vector<std::pair<int, int>>& flips) const;
  double flip_delta_sbm(int slot, const std::vector<std::pair<int, int>>& flips) const;
  void apply_representative_flips(int slot, const std::vector<std::pair<int, int>>& flips);
  Draw record_draw() const;

  const NetworkPopulation& pop_;
  McmcConfig config_;
  ChainState state_;
  Rng rng_;
  double omega_;
  std::vector<PairCounts> counts_;  // N x rep_slots agreement tallies
  Eigen::MatrixXd prop_freq_;       // clamped population edge frequencies
  Eigen::MatrixXd prop_logit_;      // log f - log(1-f), same clamping
  std::vector<int> eta_;            // cluster occupancy
  std::int64_t iteration_ = 0;
};

// Runs the standard mixture chain (one representative per cluster).
PosteriorSamples run_chain(const NetworkPopulation& pop, const McmcConfig& config,
                           const ChainState& init);

// Outlier variant: C = 2 clusters with cluster-specific noise but one shared
// representative/SBM; the representative MH ratio uses the full-population
// likelihood.
PosteriorSamples run_outlier_chain(const NetworkPopulation& pop, const McmcConfig& config,
                                   const ChainState& init);

}  // namespace netmix
