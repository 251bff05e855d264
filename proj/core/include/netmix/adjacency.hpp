#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netmix {

// Symmetric binary adjacency matrix with a zero diagonal, bit-packed by row.
// Node indices are 0-based. Values are immutable in spirit once built; the
// mutators exist for construction and for the sampler's edge flips.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int n);

  int node_count() const { return n_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }

  bool at(int i, int j) const {
    return (words_[static_cast<std::size_t>(i) * words_per_row_ + (j >> 6)] >>
            (j & 63)) & 1ULL;
  }

  // Sets both (i,j) and (j,i); the diagonal stays zero.
  void set(int i, int j, bool value);
  void flip(int i, int j);

  int edge_count() const;
  int degree(int i) const;

  // Edge list over unordered pairs i<j.
  std::vector<std::pair<int, int>> edges() const;

  // Upper-triangle bits (i<j, row-major) as a '0'/'1' string. Doubles as the
  // canonical key for hashing and lexicographic tie-breaks.
  std::string pair_bits() const;
  static AdjacencyMatrix from_pair_bits(int n, const std::string& bits);

  bool operator==(const AdjacencyMatrix& other) const = default;

  std::span<const std::uint64_t> row_words(int i) const {
    return {words_.data() + static_cast<std::size_t>(i) * words_per_row_,
            static_cast<std::size_t>(words_per_row_)};
  }

 private:
  void check_pair(int i, int j) const;

  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

// Ordered collection of networks on a shared node set.
class NetworkPopulation {
 public:
  NetworkPopulation() = default;
  explicit NetworkPopulation(int n) : n_(n) {}

  int node_count() const { return n_; }
  int size() const { return static_cast<int>(networks_.size()); }

  // Rejects matrices whose node count differs from the population's.
  void add(AdjacencyMatrix network);

  const AdjacencyMatrix& operator[](int k) const { return networks_[k]; }
  const std::vector<AdjacencyMatrix>& networks() const { return networks_; }

 private:
  int n_ = 0;
  std::vector<AdjacencyMatrix> networks_;
};

// Tallies of unordered node pairs by (representative, observed) edge state.
// These four numbers are sufficient statistics for the measurement-error
// likelihood of one network against one representative.
struct PairCounts {
  std::int64_t rep1_obs1 = 0;
  std::int64_t rep1_obs0 = 0;
  std::int64_t rep0_obs1 = 0;
  std::int64_t rep0_obs0 = 0;
};

PairCounts pair_counts(const AdjacencyMatrix& obs, const AdjacencyMatrix& rep);

}  // namespace netmix
