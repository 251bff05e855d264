#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "netmix/adjacency.hpp"

namespace netmix {

// False positive (p) and false negative (q) edge probabilities, both
// constrained to (0, 0.5) for identifiability.
struct NoiseParams {
  double p = 0.25;
  double q = 0.25;
  void validate() const;
};

// Stochastic block model parameters for one representative: block labels b
// (0-based, length n), block weights w (length K, simplex), and symmetric
// block edge probabilities theta (K x K, entries in (0,1)).
struct SbmParams {
  std::vector<int> b;
  std::vector<double> w;
  Eigen::MatrixXd theta;
  int block_count() const { return static_cast<int>(w.size()); }
  void validate(int n) const;
};

struct ClusterModel {
  AdjacencyMatrix representative;
  NoiseParams noise;
  SbmParams sbm;
};

// Prior hyperparameters. Defaults: Jeffreys Beta(0.5,0.5) for p, q and each
// theta entry; flat Dirichlet (1) for tau and w.
struct Hyperparams {
  double alpha0 = 0.5, beta0 = 0.5;   // Beta prior for p
  double gamma0 = 0.5, delta0 = 0.5;  // Beta prior for q
  double psi = 1.0;                   // symmetric Dirichlet for tau
  double chi = 1.0;                   // symmetric Dirichlet for w
  double epsilon = 0.5, zeta = 0.5;   // Beta prior for each theta_kl
  void validate() const;
};

double log_beta_pdf(double x, double a, double b);
double log_symmetric_dirichlet_pdf(std::span<const double> x, double concentration);

// Measurement-error log likelihood from the four pair tallies.
double log_likelihood_from_counts(const PairCounts& counts, const NoiseParams& noise);

// Log probability of observing `obs` given representative `rep` and noise,
// over unordered pairs i<j.
double network_log_likelihood(const AdjacencyMatrix& obs, const AdjacencyMatrix& rep,
                              const NoiseParams& noise);

// Sum of per-network log likelihoods under the cluster assignment z
// (0-based labels into `models`).
double population_log_likelihood(const NetworkPopulation& pop, std::span<const int> z,
                                 std::span<const ClusterModel> models);

// Log probability of the representative under its SBM: sum over pairs i<j of
// log Bernoulli(rep(i,j); theta_{b_i b_j}). Excludes the Multinomial(w) term
// for b.
double sbm_log_prob(const AdjacencyMatrix& rep, const SbmParams& sbm);

// Beta log priors for p and q, evaluated on (0,1) support. The truncation of
// p, q to (0,0.5) is enforced by the proposal; its normalising constant
// cancels in every MH ratio.
double log_prior_noise(const NoiseParams& noise, const Hyperparams& h);

}  // namespace netmix
