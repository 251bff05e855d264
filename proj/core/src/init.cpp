#include "netmix/init.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netmix {

void InitPlan::validate() const {
  if (metrics.empty()) throw std::invalid_argument("InitPlan: need at least one metric");
  if (clusters < 1) throw std::invalid_argument("InitPlan: clusters must be >= 1");
  if (blocks < 1) throw std::invalid_argument("InitPlan: blocks must be >= 1");
  if (max_kmedoids_iters < 1)
    throw std::invalid_argument("InitPlan: max_kmedoids_iters must be >= 1");
}

std::vector<int> k_medoids(const Eigen::MatrixXd& dist, int clusters, Rng& rng,
                           int max_iters) {
  const int N = static_cast<int>(dist.rows());
  if (clusters < 1 || clusters > N)
    throw std::invalid_argument("k_medoids: clusters must lie in [1, N]");

  std::vector<int> medoids;
  medoids.reserve(clusters);
  medoids.push_back(rng.uniform_int(N));
  // Greedy max-min spread for the remaining seeds.
  while (static_cast<int>(medoids.size()) < clusters) {
    int best = -1;
    double best_spread = -1.0;
    for (int i = 0; i < N; ++i) {
      if (std::find(medoids.begin(), medoids.end(), i) != medoids.end()) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (int m : medoids) nearest = std::min(nearest, dist(i, m));
      if (nearest > best_spread) {
        best_spread = nearest;
        best = i;
      }
    }
    medoids.push_back(best);
  }

  std::vector<int> labels(N, 0);
  auto assign = [&] {
    for (int i = 0; i < N; ++i) {
      int arg = 0;
      double best = dist(i, medoids[0]);
      for (int m = 1; m < clusters; ++m)
        if (dist(i, medoids[m]) < best) {
          best = dist(i, medoids[m]);
          arg = m;
        }
      labels[i] = arg;
    }
  };

  assign();
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (int m = 0; m < clusters; ++m) {
      int best = medoids[m];
      double best_cost = std::numeric_limits<double>::infinity();
      for (int j = 0; j < N; ++j) {
        if (labels[j] != m) continue;
        double cost = 0.0;
        for (int i = 0; i < N; ++i)
          if (labels[i] == m) cost += dist(j, i);
        if (cost < best_cost) {
          best_cost = cost;
          best = j;
        }
      }
      if (best != medoids[m]) {
        medoids[m] = best;
        changed = true;
      }
    }
    assign();
    if (!changed) break;
  }
  return labels;
}

namespace {

// Relabels `labels` by the permutation maximising agreement with `reference`.
// Brute force over permutations; cluster counts here are single digits.
std::vector<int> align_to_reference(const std::vector<int>& labels,
                                    const std::vector<int>& reference, int num_labels) {
  Eigen::MatrixXi agree = Eigen::MatrixXi::Zero(num_labels, num_labels);
  for (std::size_t i = 0; i < labels.size(); ++i) agree(labels[i], reference[i]) += 1;
  std::vector<int> perm(num_labels), best_perm(num_labels);
  std::iota(perm.begin(), perm.end(), 0);
  best_perm = perm;
  long best_score = -1;
  do {
    long score = 0;
    for (int a = 0; a < num_labels; ++a) score += agree(a, perm[a]);
    if (score > best_score) {
      best_score = score;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = best_perm[labels[i]];
  return out;
}

std::vector<std::vector<int>> align_all(const std::vector<std::vector<int>>& labelings,
                                        int reference, int num_labels) {
  std::vector<std::vector<int>> aligned;
  aligned.reserve(labelings.size());
  for (std::size_t l = 0; l < labelings.size(); ++l) {
    if (static_cast<int>(l) == reference)
      aligned.push_back(labelings[l]);
    else
      aligned.push_back(align_to_reference(labelings[l], labelings[reference], num_labels));
  }
  return aligned;
}

}  // namespace

std::vector<int> majority_vote(const std::vector<std::vector<int>>& labelings,
                               int reference, int num_labels) {
  if (labelings.empty()) throw std::invalid_argument("majority_vote: no labelings");
  if (reference < 0 || reference >= static_cast<int>(labelings.size()))
    throw std::invalid_argument("majority_vote: reference index out of range");
  const std::size_t N = labelings[reference].size();
  for (const auto& l : labelings)
    if (l.size() != N) throw std::invalid_argument("majority_vote: labelings differ in length");
  if (labelings.size() == 1) return labelings[0];

  const auto aligned = align_all(labelings, reference, num_labels);
  std::vector<int> out(N);
  std::vector<int> votes(num_labels);
  for (std::size_t i = 0; i < N; ++i) {
    std::fill(votes.begin(), votes.end(), 0);
    for (const auto& l : aligned) ++votes[l[i]];
    const auto top = std::max_element(votes.begin(), votes.end());
    const int winners = static_cast<int>(std::count(votes.begin(), votes.end(), *top));
    out[i] = winners > 1 ? labelings[reference][i]
                         : static_cast<int>(top - votes.begin());
  }
  return out;
}

namespace {

AdjacencyMatrix draw_bernoulli_matrix(const Eigen::MatrixXd& freq, Rng& rng) {
  const int n = static_cast<int>(freq.rows());
  AdjacencyMatrix rep(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(freq(i, j))) rep.set(i, j, true);
  return rep;
}

}  // namespace

AdjacencyMatrix init_representative(const NetworkPopulation& pop,
                                    const std::vector<int>& z, int cluster, Rng& rng) {
  std::vector<int> members;
  for (int k = 0; k < pop.size(); ++k)
    if (z[k] == cluster) members.push_back(k);
  const Eigen::MatrixXd freq =
      members.empty() ? edge_frequency(pop)
                      : edge_frequency(pop, std::span<const int>(members));
  return draw_bernoulli_matrix(freq, rng);
}

std::vector<int> spectral_block_init(const AdjacencyMatrix& rep, int blocks, Rng& rng) {
  const int n = rep.node_count();
  if (blocks < 1 || blocks > n)
    throw std::invalid_argument("spectral_block_init: blocks must lie in [1, n]");
  if (blocks == 1) return std::vector<int>(n, 0);

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rep.at(i, j)) a(i, j) = 1.0;
  Eigen::VectorXd inv_sqrt_deg(n);
  for (int i = 0; i < n; ++i)
    inv_sqrt_deg(i) = 1.0 / std::sqrt(std::max(rep.degree(i), 1));
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n) -
                        (inv_sqrt_deg.asDiagonal() * a * inv_sqrt_deg.asDiagonal());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lap);
  Eigen::MatrixXd points = eig.eigenvectors().leftCols(blocks);
  for (int i = 0; i < n; ++i) {
    const double norm = points.row(i).norm();
    if (norm > 1e-12) points.row(i) /= norm;
  }

  // Seeded k-means, 20 restarts, keep the lowest inertia.
  const int restarts = 20;
  std::vector<int> best_labels(n, 0);
  double best_inertia = std::numeric_limits<double>::infinity();
  std::vector<int> order(n);
  for (int r = 0; r < restarts; ++r) {
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(order[i], order[rng.uniform_int(i + 1)]);
    Eigen::MatrixXd centers(blocks, blocks);
    for (int k = 0; k < blocks; ++k) centers.row(k) = points.row(order[k]);

    std::vector<int> labels(n, -1);
    for (int iter = 0; iter < 100; ++iter) {
      bool changed = false;
      for (int i = 0; i < n; ++i) {
        int arg = 0;
        double best = (points.row(i) - centers.row(0)).squaredNorm();
        for (int k = 1; k < blocks; ++k) {
          const double d = (points.row(i) - centers.row(k)).squaredNorm();
          if (d < best) {
            best = d;
            arg = k;
          }
        }
        if (labels[i] != arg) {
          labels[i] = arg;
          changed = true;
        }
      }
      if (!changed) break;
      for (int k = 0; k < blocks; ++k) {
        Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(blocks);
        int count = 0;
        for (int i = 0; i < n; ++i)
          if (labels[i] == k) {
            mean += points.row(i);
            ++count;
          }
        if (count > 0) {
          centers.row(k) = mean / count;
        } else {
          // Empty cluster: seize the point farthest from its own center.
          int far = 0;
          double far_d = -1.0;
          for (int i = 0; i < n; ++i) {
            const double d = (points.row(i) - centers.row(labels[i])).squaredNorm();
            if (d > far_d) {
              far_d = d;
              far = i;
            }
          }
          centers.row(k) = points.row(far);
          labels[far] = k;
        }
      }
    }
    double inertia = 0.0;
    for (int i = 0; i < n; ++i)
      inertia += (points.row(i) - centers.row(labels[i])).squaredNorm();
    if (inertia < best_inertia) {
      best_inertia = inertia;
      best_labels = labels;
    }
  }

  // Canonicalise by first occurrence so output is stable under label names.
  std::vector<int> remap(blocks, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (remap[best_labels[i]] < 0) remap[best_labels[i]] = next++;
    best_labels[i] = remap[best_labels[i]];
  }
  return best_labels;
}

ChainState build_initial_state(const NetworkPopulation& pop, const InitPlan& plan,
                               const Hyperparams& hyper, bool shared_representative,
                               Rng& rng, InitSummary* summary) {
  plan.validate();
  hyper.validate();
  const int C = plan.clusters;
  const int K = plan.blocks;
  const int n = pop.node_count();
  const int N = pop.size();
  if (C > N) throw std::invalid_argument("build_initial_state: more clusters than networks");

  std::vector<int> z0(N, 0);
  double agreement = 1.0;
  if (C > 1) {
    std::vector<std::vector<int>> labelings;
    for (Metric m : plan.metrics) {
      const Eigen::MatrixXd dist = distance_matrix(pop, m);
      labelings.push_back(k_medoids(dist, C, rng, plan.max_kmedoids_iters));
    }
    int reference = 0;
    for (std::size_t i = 0; i < plan.metrics.size(); ++i)
      if (plan.metrics[i] == Metric::hamming) reference = static_cast<int>(i);
    z0 = majority_vote(labelings, reference, C);

    // Share of networks every aligned labeling allocates identically.
    const auto aligned = align_all(labelings, reference, C);
    int agreed = 0;
    for (int i = 0; i < N; ++i) {
      bool same = true;
      for (const auto& l : aligned) same = same && l[i] == aligned[0][i];
      agreed += same ? 1 : 0;
    }
    agreement = static_cast<double>(agreed) / N;
  }

  ChainState state;
  state.shared_representative = shared_representative;
  state.z = z0;
  state.tau.assign(C, 1.0 / C);
  state.noise.assign(C, NoiseParams{0.25, 0.25});

  const int slots = shared_representative ? 1 : C;
  for (int r = 0; r < slots; ++r) {
    AdjacencyMatrix rep = shared_representative
                              ? draw_bernoulli_matrix(edge_frequency(pop), rng)
                              : init_representative(pop, z0, r, rng);
    SbmParams sbm;
    sbm.b = spectral_block_init(rep, K, rng);
    std::vector<int> h(K, 0);
    for (int label : sbm.b) ++h[label];
    sbm.w.resize(K);
    for (int k = 0; k < K; ++k) sbm.w[k] = (hyper.chi + h[k]) / (K * hyper.chi + n);
    sbm.theta = Eigen::MatrixXd::Zero(K, K);
    Eigen::MatrixXi edges = Eigen::MatrixXi::Zero(K, K);
    Eigen::MatrixXi pairs = Eigen::MatrixXi::Zero(K, K);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int a = std::min(sbm.b[i], sbm.b[j]);
        const int b = std::max(sbm.b[i], sbm.b[j]);
        pairs(a, b) += 1;
        if (rep.at(i, j)) edges(a, b) += 1;
      }
    for (int k = 0; k < K; ++k)
      for (int l = k; l < K; ++l) {
        const double mean = (hyper.epsilon + edges(k, l)) /
                            (hyper.epsilon + hyper.zeta + pairs(k, l));
        sbm.theta(k, l) = sbm.theta(l, k) = mean;
      }
    state.representatives.push_back(std::move(rep));
    state.sbm.push_back(std::move(sbm));
  }

  state.validate(n, N);
  if (summary) {
    summary->metrics = plan.metrics;
    summary->vote_agreement = agreement;
    summary->initial_labels = z0;
  }
  return state;
}

}  // namespace netmix
