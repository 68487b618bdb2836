#pragma once

#include <stdexcept>
#include <string>

namespace mie {

/// Thrown when an iterative or discretized computation cannot deliver a
/// trustworthy result (non-convergence, fall-to-center regime, missing
/// levels on a grid). Distinct from domain errors so callers can map it to
/// a different exit status.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the molecule-file loader; the message names the offending
/// record and field.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mie
