#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace netmix {

// Derives an independent stream seed from a root seed. Streams are numbered
// by purpose: 0 = simulate, 1 = init, 2 + j = chain j. splitmix64 is used as
// the mixing function, so nearby roots and streams decorrelate.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream);

inline constexpr std::uint64_t kSimulateStream = 0;
inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kChainStreamBase = 2;

// Deterministic random generator: a seeded mt19937_64 plus the handful of
// draws the model needs. Not thread-safe; give each chain its own instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on the open interval (0,1).
  double uniform();
  // Uniform on (lo,hi).
  double uniform(double lo, double hi);

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform over {0,...,n-1}.
  int uniform_int(int n);

  double gamma(double shape);
  double beta(double a, double b);

  // Dirichlet draw with the given concentration vector.
  std::vector<double> dirichlet(std::span<const double> concentration);

  // Categorical draw from nonnegative unnormalised weights.
  int categorical(std::span<const double> weights);

  // Categorical draw from unnormalised log weights (max-subtraction).
  int categorical_log(std::span<const double> log_weights);

 private:
  std::mt19937_64 gen_;
};

}  // namespace netmix
