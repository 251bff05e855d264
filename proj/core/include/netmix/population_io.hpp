#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <iosfwd>

#include "netmix/adjacency.hpp"

namespace netmix {

// Population text format:
//   line 1: "N n"
//   then, per network, n lines of n space-separated 0/1 tokens,
//   consecutive networks separated by exactly one blank line.
// Invariant violations raise data_error naming the first offending
// (network, i, j), 1-based.
NetworkPopulation load_population(std::istream& in);
NetworkPopulation load_population(const std::filesystem::path& file);

void save_population(const NetworkPopulation& pop, std::ostream& out);
void save_population(const NetworkPopulation& pop, const std::filesystem::path& file);

// Headerless CSV with full double precision; used for distance matrices and
// MDS coordinates.
void write_matrix_csv(const Eigen::MatrixXd& m, const std::filesystem::path& file);

}  // namespace netmix
