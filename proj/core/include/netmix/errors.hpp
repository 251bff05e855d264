#pragma once

#include <stdexcept>
#include <string>

namespace netmix {

// Raised for malformed or inconsistent input data (files, traces, manifests).
// Kept distinct from std::invalid_argument (bad configuration / bad call) so
// the CLI can map the two classes to different exit codes.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netmix
