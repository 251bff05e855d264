#include "netmix/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "netmix/distance.hpp"

namespace netmix {

void McmcConfig::validate() const {
  if (clusters < 1) throw std::invalid_argument("McmcConfig: clusters must be >= 1");
  if (blocks < 1) throw std::invalid_argument("McmcConfig: blocks must be >= 1");
  if (iterations < 1) throw std::invalid_argument("McmcConfig: iterations must be >= 1");
  if (burn_in <= 0 || burn_in >= iterations)
    throw std::invalid_argument("McmcConfig: burn_in must satisfy 0 < burn_in < iterations");
  if (thin < 1) throw std::invalid_argument("McmcConfig: thin must be >= 1");
  if (omega > 0.0 && omega >= 1.0)
    throw std::invalid_argument("McmcConfig: omega must lie in (0,1)");
  if (rep_kernel_mix < 0.0 || rep_kernel_mix > 1.0)
    throw std::invalid_argument("McmcConfig: rep_kernel_mix must lie in [0,1]");
  if (u_ladder.empty() || u_ladder.size() != u_weights.size())
    throw std::invalid_argument("McmcConfig: u_ladder and u_weights must be nonempty and equal-length");
  for (double u : u_ladder)
    if (!(u > 0.0 && u < 0.5))
      throw std::invalid_argument("McmcConfig: every u must lie in (0,0.5)");
  auto check_simplex = [](std::span<const double> w, const char* what) {
    double sum = 0.0;
    for (double v : w) {
      if (v < 0.0) throw std::invalid_argument(std::string("McmcConfig: ") + what + " must be nonnegative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6)
      throw std::invalid_argument(std::string("McmcConfig: ") + what + " must sum to 1");
  };
  check_simplex(u_weights, "u_weights");
  check_simplex(kernel_weights, "kernel_weights");
  hyper.validate();
}

void ChainState::validate(int n, int population_size) const {
  const int C = cluster_count();
  if (C < 1) throw std::invalid_argument("ChainState: need at least one cluster");
  if (shared_representative && C != 2)
    throw std::invalid_argument("ChainState: shared representative requires exactly 2 clusters");
  const int R = shared_representative ? 1 : C;
  if (rep_slots() != R || static_cast<int>(sbm.size()) != R)
    throw std::invalid_argument("ChainState: representative/SBM slot count mismatch");
  if (static_cast<int>(tau.size()) != C)
    throw std::invalid_argument("ChainState: tau length mismatch");
  double tau_sum = 0.0;
  for (double t : tau) {
    if (!(t > 0.0)) throw std::invalid_argument("ChainState: tau entries must be positive");
    tau_sum += t;
  }
  if (std::abs(tau_sum - 1.0) > 1e-9)
    throw std::invalid_argument("ChainState: tau must sum to 1");
  for (const auto& nz : noise) nz.validate();
  for (int r = 0; r < R; ++r) {
    if (representatives[r].node_count() != n)
      throw std::invalid_argument("ChainState: representative node count mismatch");
    sbm[r].validate(n);
  }
  if (static_cast<int>(z.size()) != population_size)
    throw std::invalid_argument("ChainState: z length mismatch");
  for (int label : z)
    if (label < 0 || label >= C)
      throw std::invalid_argument("ChainState: cluster label out of range");
}

double reflect_half(double y) {
  if (y < 0.0) return -y;
  if (y > 0.5) return 1.0 - y;
  return y;
}

GibbsSampler::GibbsSampler(const NetworkPopulation& pop, McmcConfig config, ChainState init)
    : pop_(pop), config_(std::move(config)), state_(std::move(init)), rng_(config_.seed) {
  config_.validate();
  state_.validate(pop_.node_count(), pop_.size());
  if (state_.cluster_count() != config_.clusters)
    throw std::invalid_argument("GibbsSampler: config.clusters does not match initial state");

  const int n = pop_.node_count();
  omega_ = config_.omega > 0.0 ? config_.omega : 4.0 / (static_cast<double>(n) * (n - 1));
  if (!(omega_ > 0.0 && omega_ < 1.0))
    throw std::invalid_argument("GibbsSampler: resolved omega outside (0,1)");

  // Proposal (II) uses full-population edge frequencies clamped away from
  // {0,1} so every representative state keeps positive proposal mass.
  const double clamp = 1.0 / (2.0 * pop_.size());
  prop_freq_ = edge_frequency(pop_);
  prop_logit_ = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double f = std::clamp(prop_freq_(i, j), clamp, 1.0 - clamp);
      prop_freq_(i, j) = f;
      prop_logit_(i, j) = std::log(f) - std::log1p(-f);
    }

  counts_.resize(static_cast<std::size_t>(pop_.size()) * state_.rep_slots());
  for (int r = 0; r < state_.rep_slots(); ++r) rebuild_counts(r);
  refresh_eta();
}

void GibbsSampler::rebuild_counts(int slot) {
  for (int k = 0; k < pop_.size(); ++k)
    counts(k, slot) = pair_counts(pop_[k], state_.representatives[slot]);
}

void GibbsSampler::refresh_eta() {
  eta_.assign(state_.cluster_count(), 0);
  for (int label : state_.z) ++eta_[label];
}

PairCounts GibbsSampler::cluster_counts(int c) const {
  const int slot = state_.rep_slot(c);
  PairCounts total;
  for (int k = 0; k < pop_.size(); ++k) {
    if (state_.z[k] != c) continue;
    const PairCounts& pc = counts(k, slot);
    total.rep1_obs1 += pc.rep1_obs1;
    total.rep1_obs0 += pc.rep1_obs0;
    total.rep0_obs1 += pc.rep0_obs1;
    total.rep0_obs0 += pc.rep0_obs0;
  }
  return total;
}

void GibbsSampler::update_tau() {
  std::vector<double> conc(state_.cluster_count());
  for (int c = 0; c < state_.cluster_count(); ++c)
    conc[c] = config_.hyper.psi + eta_[c];
  state_.tau = rng_.dirichlet(conc);
}

void GibbsSampler::update_z() {
  const int C = state_.cluster_count();
  std::vector<double> logw(C);
  std::vector<double> log_tau(C);
  for (int c = 0; c < C; ++c) log_tau[c] = std::log(state_.tau[c]);
  for (int k = 0; k < pop_.size(); ++k) {
    for (int c = 0; c < C; ++c)
      logw[c] = log_tau[c] +
                log_likelihood_from_counts(counts(k, state_.rep_slot(c)), state_.noise[c]);
    state_.z[k] = rng_.categorical_log(logw);
  }
  refresh_eta();
}

void GibbsSampler::update_w(int slot) {
  const int K = state_.sbm[slot].block_count();
  std::vector<double> conc(K, config_.hyper.chi);
  for (int label : state_.sbm[slot].b) conc[label] += 1.0;
  state_.sbm[slot].w = rng_.dirichlet(conc);
}

void GibbsSampler::update_theta(int slot) {
  const auto& rep = state_.representatives[slot];
  const auto& b = state_.sbm[slot].b;
  const int K = state_.sbm[slot].block_count();
  const int n = rep.node_count();
  Eigen::MatrixXi edges = Eigen::MatrixXi::Zero(K, K);
  Eigen::MatrixXi pairs = Eigen::MatrixXi::Zero(K, K);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int k = std::min(b[i], b[j]);
      const int l = std::max(b[i], b[j]);
      pairs(k, l) += 1;
      if (rep.at(i, j)) edges(k, l) += 1;
    }
  auto& theta = state_.sbm[slot].theta;
  for (int k = 0; k < K; ++k)
    for (int l = k; l < K; ++l) {
      const double a = config_.hyper.epsilon + edges(k, l);
      const double bb = config_.hyper.zeta + pairs(k, l) - edges(k, l);
      const double t = rng_.beta(a, bb);
      theta(k, l) = theta(l, k) = t;
    }
}

void GibbsSampler::update_b(int slot) {
  const auto& rep = state_.representatives[slot];
  auto& sbm = state_.sbm[slot];
  const int K = sbm.block_count();
  const int n = rep.node_count();
  Eigen::MatrixXd log_theta(K, K), log_1m_theta(K, K);
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < K; ++l) {
      log_theta(k, l) = std::log(sbm.theta(k, l));
      log_1m_theta(k, l) = std::log1p(-sbm.theta(k, l));
    }
  std::vector<double> log_w(K), logp(K);
  for (int k = 0; k < K; ++k) log_w[k] = std::log(sbm.w[k]);
  std::vector<int> m1(K), m0(K);
  for (int i = 0; i < n; ++i) {
    std::fill(m1.begin(), m1.end(), 0);
    std::fill(m0.begin(), m0.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      rep.at(i, j) ? ++m1[sbm.b[j]] : ++m0[sbm.b[j]];
    }
    for (int k = 0; k < K; ++k) {
      double lp = log_w[k];
      for (int l = 0; l < K; ++l)
        lp += m1[l] * log_theta(k, l) + m0[l] * log_1m_theta(k, l);
      logp[k] = lp;
    }
    sbm.b[i] = rng_.categorical_log(logp);
  }
}

std::pair<AdjacencyMatrix, double> GibbsSampler::propose_representative(int c) {
  const int slot = state_.rep_slot(c);
  const auto& current = state_.representatives[slot];
  const int n = current.node_count();
  if (rng_.bernoulli(config_.rep_kernel_mix)) {
    // Proposal (I): flip each pair independently; symmetric kernel.
    AdjacencyMatrix prop = current;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng_.bernoulli(omega_)) prop.flip(i, j);
    return {std::move(prop), 0.0};
  }
  // Proposal (II): independent Bernoulli draws from the clamped population
  // edge frequencies; the ratio only involves pairs where the states differ.
  AdjacencyMatrix prop(n);
  double log_ratio = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool bit = rng_.bernoulli(prop_freq_(i, j));
      if (bit) prop.set(i, j, true);
      const bool cur = current.at(i, j);
      if (cur != bit) log_ratio += cur ? prop_logit_(i, j) : -prop_logit_(i, j);
    }
  return {std::move(prop), log_ratio};
}

std::vector<std::pair<int, int>> GibbsSampler::diff_pairs(const AdjacencyMatrix& a,
                                                          const AdjacencyMatrix& b) const {
  std::vector<std::pair<int, int>> flips;
  for (int i = 0; i < a.node_count(); ++i)
    for (int j = i + 1; j < a.node_count(); ++j)
      if (a.at(i, j) != b.at(i, j)) flips.emplace_back(i, j);
  return flips;
}

double GibbsSampler::flip_delta_data(int c,
                                     const std::vector<std::pair<int, int>>& flips) const {
  // Change in data log likelihood if the listed representative pairs flip.
  // Standard chain: networks of cluster c. Shared representative: every
  // network, through its own cluster's noise.
  const int slot = state_.rep_slot(c);
  const auto& rep = state_.representatives[slot];
  const int C = state_.cluster_count();
  // d1[c]: delta for an observed edge when rep goes 1 -> 0; d0[c]: same for a
  // non-edge. Flipping 0 -> 1 negates both.
  std::vector<double> d1(C), d0(C);
  for (int cc = 0; cc < C; ++cc) {
    const auto& nz = state_.noise[cc];
    d1[cc] = std::log(nz.p) - std::log1p(-nz.q);
    d0[cc] = std::log1p(-nz.p) - std::log(nz.q);
  }
  double delta = 0.0;
  for (auto [i, j] : flips) {
    const double sign = rep.at(i, j) ? 1.0 : -1.0;
    for (int k = 0; k < pop_.size(); ++k) {
      const int ck = state_.z[k];
      if (!state_.shared_representative && ck != c) continue;
      delta += sign * (pop_[k].at(i, j) ? d1[ck] : d0[ck]);
    }
  }
  return delta;
}

double GibbsSampler::flip_delta_sbm(int slot,
                                    const std::vector<std::pair<int, int>>& flips) const {
  const auto& rep = state_.representatives[slot];
  const auto& sbm = state_.sbm[slot];
  double delta = 0.0;
  for (auto [i, j] : flips) {
    const double t = sbm.theta(sbm.b[i], sbm.b[j]);
    const double d = std::log1p(-t) - std::log(t);  // rep 1 -> 0
    delta += rep.at(i, j) ? d : -d;
  }
  return delta;
}

void GibbsSampler::apply_representative_flips(int slot,
                                              const std::vector<std::pair<int, int>>& flips) {
  auto& rep = state_.representatives[slot];
  // Incremental count maintenance beats a rebuild only for small flip sets.
  const bool rebuild = static_cast<int>(flips.size()) > rep.node_count();
  for (auto [i, j] : flips) rep.flip(i, j);
  if (rebuild) {
    rebuild_counts(slot);
    return;
  }
  for (auto [i, j] : flips) {
    const bool now_edge = rep.at(i, j);
    for (int k = 0; k < pop_.size(); ++k) {
      PairCounts& pc = counts(k, slot);
      if (pop_[k].at(i, j)) {
        pc.rep1_obs1 += now_edge ? 1 : -1;
        pc.rep0_obs1 += now_edge ? -1 : 1;
      } else {
        pc.rep1_obs0 += now_edge ? 1 : -1;
        pc.rep0_obs0 += now_edge ? -1 : 1;
      }
    }
  }
}

bool GibbsSampler::mh_update_representative(int c) {
  const int slot = state_.rep_slot(c);
  auto [proposal, log_qratio] = propose_representative(c);
  const auto flips = diff_pairs(state_.representatives[slot], proposal);
  double log_alpha = log_qratio;
  if (!flips.empty())
    log_alpha += flip_delta_data(c, flips) + flip_delta_sbm(slot, flips);
  const bool accept = std::log(rng_.uniform()) < log_alpha;
  if (accept && !flips.empty()) apply_representative_flips(slot, flips);
  return accept;
}

bool GibbsSampler::mh_update_noise(int c, NoiseKind which) {
  const auto& h = config_.hyper;
  const int ladder = rng_.categorical(config_.u_weights);
  const double u = config_.u_ladder[ladder];
  const double v = rng_.uniform(-u, u);
  const double current =
      which == NoiseKind::false_positive ? state_.noise[c].p : state_.noise[c].q;
  const double proposed = reflect_half(current + v);
  if (!(proposed > 0.0 && proposed < 0.5)) return false;

  const PairCounts pc = cluster_counts(c);
  double log_alpha;
  if (which == NoiseKind::false_positive) {
    log_alpha = pc.rep0_obs1 * (std::log(proposed) - std::log(current)) +
                pc.rep0_obs0 * (std::log1p(-proposed) - std::log1p(-current)) +
                log_beta_pdf(proposed, h.alpha0, h.beta0) -
                log_beta_pdf(current, h.alpha0, h.beta0);
  } else {
    log_alpha = pc.rep1_obs0 * (std::log(proposed) - std::log(current)) +
                pc.rep1_obs1 * (std::log1p(-proposed) - std::log1p(-current)) +
                log_beta_pdf(proposed, h.gamma0, h.delta0) -
                log_beta_pdf(current, h.gamma0, h.delta0);
  }
  const bool accept = std::log(rng_.uniform()) < log_alpha;
  if (accept) {
    if (which == NoiseKind::false_positive)
      state_.noise[c].p = proposed;
    else
      state_.noise[c].q = proposed;
  }
  return accept;
}

void GibbsSampler::step() {
  ++iteration_;
  update_tau();
  for (int c = 0; c < state_.cluster_count(); ++c) {
    const int kernel = rng_.categorical(config_.kernel_weights);
    if (kernel == 0)
      mh_update_representative(c);
    else if (kernel == 1)
      mh_update_noise(c, NoiseKind::false_positive);
    else
      mh_update_noise(c, NoiseKind::false_negative);
    if (!state_.shared_representative) {
      update_w(c);
      update_theta(c);
      update_b(c);
    }
  }
  if (state_.shared_representative) {
    update_w(0);
    update_theta(0);
    update_b(0);
  }
  update_z();
#ifndef NDEBUG
  state_.validate(pop_.node_count(), pop_.size());
  assert(std::abs(log_posterior() - log_posterior_recomputed()) < 1e-6);
#endif
}

double GibbsSampler::cluster_data_log_likelihood(int c) const {
  return log_likelihood_from_counts(cluster_counts(c), state_.noise[c]);
}

double GibbsSampler::log_posterior() const {
  const auto& h = config_.hyper;
  double lp = 0.0;
  for (int k = 0; k < pop_.size(); ++k) {
    const int c = state_.z[k];
    lp += log_likelihood_from_counts(counts(k, state_.rep_slot(c)), state_.noise[c]);
  }
  for (int c = 0; c < state_.cluster_count(); ++c) {
    lp += eta_[c] * std::log(state_.tau[c]);
    lp += log_beta_pdf(state_.noise[c].p, h.alpha0, h.beta0);
    lp += log_beta_pdf(state_.noise[c].q, h.gamma0, h.delta0);
  }
  lp += log_symmetric_dirichlet_pdf(state_.tau, h.psi);
  for (int r = 0; r < state_.rep_slots(); ++r) {
    const auto& sbm = state_.sbm[r];
    lp += sbm_log_prob(state_.representatives[r], sbm);
    const int K = sbm.block_count();
    for (int k = 0; k < K; ++k)
      for (int l = k; l < K; ++l) lp += log_beta_pdf(sbm.theta(k, l), h.epsilon, h.zeta);
    for (int label : sbm.b) lp += std::log(sbm.w[label]);
    lp += log_symmetric_dirichlet_pdf(sbm.w, h.chi);
  }
  return lp;
}

double GibbsSampler::log_posterior_recomputed() const {
  // Same decomposition, but the data term is rebuilt from the raw matrices.
  double lp = log_posterior();
  for (int k = 0; k < pop_.size(); ++k) {
    const int c = state_.z[k];
    const int slot = state_.rep_slot(c);
    lp -= log_likelihood_from_counts(counts(k, slot), state_.noise[c]);
    lp += network_log_likelihood(pop_[k], state_.representatives[slot], state_.noise[c]);
  }
  return lp;
}

Draw GibbsSampler::record_draw() const {
  Draw d;
  d.iteration = iteration_;
  d.tau = state_.tau;
  const int C = state_.cluster_count();
  d.p.resize(C);
  d.q.resize(C);
  for (int c = 0; c < C; ++c) {
    d.p[c] = state_.noise[c].p;
    d.q[c] = state_.noise[c].q;
  }
  for (int r = 0; r < state_.rep_slots(); ++r) {
    d.w.push_back(state_.sbm[r].w);
    d.theta.push_back(state_.sbm[r].theta);
    d.b.push_back(state_.sbm[r].b);
    d.representatives.push_back(state_.representatives[r]);
  }
  d.z = state_.z;
  d.log_posterior = log_posterior();
  return d;
}

PosteriorSamples GibbsSampler::run() {
  PosteriorSamples out;
  out.config = config_;
  out.shared_representative = state_.shared_representative;
  out.node_count = pop_.node_count();
  out.population_size = pop_.size();
  const std::int64_t expected = (config_.iterations - config_.burn_in) / config_.thin;
  out.draws.reserve(static_cast<std::size_t>(std::max<std::int64_t>(expected, 0)));
  for (std::int64_t it = 1; it <= config_.iterations; ++it) {
    step();
    if (it > config_.burn_in && (it - config_.burn_in) % config_.thin == 0)
      out.draws.push_back(record_draw());
  }
  return out;
}

PosteriorSamples run_chain(const NetworkPopulation& pop, const McmcConfig& config,
                           const ChainState& init) {
  if (init.shared_representative)
    throw std::invalid_argument("run_chain: shared-representative state requires run_outlier_chain");
  GibbsSampler sampler(pop, config, init);
  return sampler.run();
}

PosteriorSamples run_outlier_chain(const NetworkPopulation& pop, const McmcConfig& config,
                                   const ChainState& init) {
  if (config.clusters != 2)
    throw std::invalid_argument("run_outlier_chain: requires exactly 2 clusters");
  if (!init.shared_representative)
    throw std::invalid_argument("run_outlier_chain: initial state must share the representative");
  GibbsSampler sampler(pop, config, init);
  return sampler.run();
}

}  // namespace netmix
