#include "netmix/model.hpp"

#include <cmath>
#include <stdexcept>

namespace netmix {

void NoiseParams::validate() const {
  if (!(p > 0.0 && p < 0.5) || !(q > 0.0 && q < 0.5))
    throw std::invalid_argument("NoiseParams: p and q must lie in (0, 0.5)");
}

void SbmParams::validate(int n) const {
  const int K = block_count();
  if (K < 1) throw std::invalid_argument("SbmParams: need at least one block");
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("SbmParams: block label vector has wrong length");
  for (int label : b)
    if (label < 0 || label >= K)
      throw std::invalid_argument("SbmParams: block label out of range");
  double sum = 0.0;
  for (double wk : w) {
    if (!(wk > 0.0)) throw std::invalid_argument("SbmParams: w entries must be positive");
    sum += wk;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("SbmParams: w must sum to 1");
  if (theta.rows() != K || theta.cols() != K)
    throw std::invalid_argument("SbmParams: theta must be K x K");
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < K; ++l) {
      if (!(theta(k, l) > 0.0 && theta(k, l) < 1.0))
        throw std::invalid_argument("SbmParams: theta entries must lie in (0,1)");
      if (std::abs(theta(k, l) - theta(l, k)) > 1e-12)
        throw std::invalid_argument("SbmParams: theta must be symmetric");
    }
}

void Hyperparams::validate() const {
  for (double v : {alpha0, beta0, gamma0, delta0, psi, chi, epsilon, zeta})
    if (!(v > 0.0))
      throw std::invalid_argument("Hyperparams: all hyperparameters must be positive");
}

double log_beta_pdf(double x, double a, double b) {
  if (!(x > 0.0 && x < 1.0)) return -std::numeric_limits<double>::infinity();
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) -
         (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double log_symmetric_dirichlet_pdf(std::span<const double> x, double concentration) {
  const auto K = static_cast<double>(x.size());
  double lp = std::lgamma(concentration * K) - K * std::lgamma(concentration);
  for (double xi : x) {
    if (!(xi > 0.0)) return -std::numeric_limits<double>::infinity();
    lp += (concentration - 1.0) * std::log(xi);
  }
  return lp;
}

double log_likelihood_from_counts(const PairCounts& c, const NoiseParams& noise) {
  return static_cast<double>(c.rep1_obs1) * std::log1p(-noise.q) +
         static_cast<double>(c.rep1_obs0) * std::log(noise.q) +
         static_cast<double>(c.rep0_obs1) * std::log(noise.p) +
         static_cast<double>(c.rep0_obs0) * std::log1p(-noise.p);
}

double network_log_likelihood(const AdjacencyMatrix& obs, const AdjacencyMatrix& rep,
                              const NoiseParams& noise) {
  return log_likelihood_from_counts(pair_counts(obs, rep), noise);
}

double population_log_likelihood(const NetworkPopulation& pop, std::span<const int> z,
                                 std::span<const ClusterModel> models) {
  if (z.size() != static_cast<std::size_t>(pop.size()))
    throw std::invalid_argument("population_log_likelihood: z length mismatch");
  double total = 0.0;
  for (int k = 0; k < pop.size(); ++k) {
    const int c = z[k];
    if (c < 0 || c >= static_cast<int>(models.size()))
      throw std::invalid_argument("population_log_likelihood: label out of range");
    total += network_log_likelihood(pop[k], models[c].representative, models[c].noise);
  }
  return total;
}

double sbm_log_prob(const AdjacencyMatrix& rep, const SbmParams& sbm) {
  const int n = rep.node_count();
  if (static_cast<int>(sbm.b.size()) != n)
    throw std::invalid_argument("sbm_log_prob: block labels do not match representative size");
  double lp = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double t = sbm.theta(sbm.b[i], sbm.b[j]);
      lp += rep.at(i, j) ? std::log(t) : std::log1p(-t);
    }
  return lp;
}

double log_prior_noise(const NoiseParams& noise, const Hyperparams& h) {
  return log_beta_pdf(noise.p, h.alpha0, h.beta0) +
         log_beta_pdf(noise.q, h.gamma0, h.delta0);
}

}  // namespace netmix
