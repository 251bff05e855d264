#include "netmix/adjacency.hpp"

#include <bit>
#include <stdexcept>

namespace netmix {

AdjacencyMatrix::AdjacencyMatrix(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("AdjacencyMatrix: node count must be positive");
  words_per_row_ = (n + 63) / 64;
  words_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
}

void AdjacencyMatrix::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("AdjacencyMatrix: node index out of range");
  if (i == j) throw std::invalid_argument("AdjacencyMatrix: self-loops are not representable");
}

void AdjacencyMatrix::set(int i, int j, bool value) {
  check_pair(i, j);
  const std::uint64_t bi = 1ULL << (j & 63);
  const std::uint64_t bj = 1ULL << (i & 63);
  auto& wi = words_[static_cast<std::size_t>(i) * words_per_row_ + (j >> 6)];
  auto& wj = words_[static_cast<std::size_t>(j) * words_per_row_ + (i >> 6)];
  if (value) {
    wi |= bi;
    wj |= bj;
  } else {
    wi &= ~bi;
    wj &= ~bj;
  }
}

void AdjacencyMatrix::flip(int i, int j) {
  check_pair(i, j);
  words_[static_cast<std::size_t>(i) * words_per_row_ + (j >> 6)] ^= 1ULL << (j & 63);
  words_[static_cast<std::size_t>(j) * words_per_row_ + (i >> 6)] ^= 1ULL << (i & 63);
}

int AdjacencyMatrix::edge_count() const {
  std::int64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return static_cast<int>(total / 2);
}

int AdjacencyMatrix::degree(int i) const {
  int d = 0;
  for (std::uint64_t w : row_words(i)) d += std::popcount(w);
  return d;
}

std::vector<std::pair<int, int>> AdjacencyMatrix::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j)) out.emplace_back(i, j);
  return out;
}

std::string AdjacencyMatrix::pair_bits() const {
  std::string bits;
  bits.reserve(pair_count());
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) bits.push_back(at(i, j) ? '1' : '0');
  return bits;
}

AdjacencyMatrix AdjacencyMatrix::from_pair_bits(int n, const std::string& bits) {
  AdjacencyMatrix m(n);
  if (static_cast<int>(bits.size()) != m.pair_count())
    throw std::invalid_argument("from_pair_bits: bit string length mismatch");
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if (bits[pos] == '1') m.set(i, j, true);
  return m;
}

void NetworkPopulation::add(AdjacencyMatrix network) {
  if (networks_.empty() && n_ == 0) n_ = network.node_count();
  if (network.node_count() != n_)
    throw std::invalid_argument("NetworkPopulation: all networks must share the node set");
  networks_.push_back(std::move(network));
}

PairCounts pair_counts(const AdjacencyMatrix& obs, const AdjacencyMatrix& rep) {
  if (obs.node_count() != rep.node_count())
    throw std::invalid_argument("pair_counts: dimension mismatch");
  const int n = obs.node_count();
  std::int64_t both = 0, rep_only = 0, obs_only = 0;
  for (int i = 0; i < n; ++i) {
    auto a = obs.row_words(i);
    auto b = rep.row_words(i);
    for (std::size_t w = 0; w < a.size(); ++w) {
      both += std::popcount(a[w] & b[w]);
      rep_only += std::popcount(b[w] & ~a[w]);
      obs_only += std::popcount(a[w] & ~b[w]);
    }
  }
  // Full-matrix tallies count every unordered pair twice.
  PairCounts c;
  c.rep1_obs1 = both / 2;
  c.rep1_obs0 = rep_only / 2;
  c.rep0_obs1 = obs_only / 2;
  c.rep0_obs0 = obs.pair_count() - c.rep1_obs1 - c.rep1_obs0 - c.rep0_obs1;
  return c;
}

}  // namespace netmix
