#include "netmix/population_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "netmix/errors.hpp"

namespace netmix {

namespace {

std::string pos(int network, int i, int j) {
  // 1-based coordinates in messages.
  return "network " + std::to_string(network + 1) + ", entry (" +
         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

NetworkPopulation load_population(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw data_error("population file: empty input");
  std::istringstream header(line);
  long long N = 0, n = 0;
  if (!(header >> N >> n) || N < 1 || n < 1)
    throw data_error("population file: header must be 'N n' with positive integers");
  std::string extra;
  if (header >> extra) throw data_error("population file: trailing tokens in header");

  NetworkPopulation pop(static_cast<int>(n));
  // Entries are read into a dense row buffer so symmetry can be checked
  // against what the file actually says rather than what set() would force.
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
  for (int k = 0; k < N; ++k) {
    if (k > 0) {
      if (!std::getline(in, line))
        throw data_error("population file: expected blank line before network " +
                         std::to_string(k + 1));
      if (!line.empty())
        throw data_error("population file: networks must be separated by exactly one blank line "
                         "(before network " + std::to_string(k + 1) + ")");
    }
    for (int i = 0; i < n; ++i) {
      if (!std::getline(in, line))
        throw data_error("population file: unexpected end of file in network " +
                         std::to_string(k + 1) + ", row " + std::to_string(i + 1));
      std::istringstream row(line);
      for (int j = 0; j < n; ++j) {
        std::string tok;
        if (!(row >> tok))
          throw data_error("population file: short row at " + pos(k, i, j));
        if (tok == "0") entries[i][j] = 0;
        else if (tok == "1") entries[i][j] = 1;
        else
          throw data_error("population file: non-binary entry '" + tok + "' at " + pos(k, i, j));
      }
      std::string tail;
      if (row >> tail)
        throw data_error("population file: too many entries in network " +
                         std::to_string(k + 1) + ", row " + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i) {
      if (entries[i][i] != 0)
        throw data_error("population file: nonzero diagonal at " + pos(k, i, i));
      for (int j = i + 1; j < n; ++j)
        if (entries[i][j] != entries[j][i])
          throw data_error("population file: asymmetric entries at " + pos(k, i, j));
    }
    AdjacencyMatrix m(static_cast<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (entries[i][j]) m.set(i, j, true);
    pop.add(std::move(m));
  }
  // Anything but whitespace after the last network is an error.
  while (std::getline(in, line))
    if (!line.empty())
      throw data_error("population file: trailing content after last network");
  return pop;
}

NetworkPopulation load_population(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw data_error("cannot open population file: " + file.string());
  return load_population(in);
}

void save_population(const NetworkPopulation& pop, std::ostream& out) {
  const int n = pop.node_count();
  out << pop.size() << ' ' << n << '\n';
  for (int k = 0; k < pop.size(); ++k) {
    if (k > 0) out << '\n';
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j > 0) out << ' ';
        out << (i == j ? 0 : (pop[k].at(i, j) ? 1 : 0));
      }
      out << '\n';
    }
  }
}

void save_population(const NetworkPopulation& pop, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw data_error("cannot write population file: " + file.string());
  save_population(pop, out);
}

void write_matrix_csv(const Eigen::MatrixXd& m, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw data_error("cannot write csv file: " + file.string());
  char buf[32];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace netmix
