#pragma once

#include <stdexcept>
#include <string>

namespace pr {

/// Oracle query budget exhausted; constructive searches must abort.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// A stated hypothesis of a constructive step fails for the given inputs.
/// what() names the violated inequality.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// Desk-scale parameters make a required set selection impossible.
/// what() names the violated identity.
class InfeasibleArithmetic : public std::runtime_error {
 public:
  explicit InfeasibleArithmetic(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// Internal consistency failure of a constructive run, e.g. a blob that a
/// completed scan classified as monochromatic later produced a vertex of the
/// other color. Always a bug, never an expected outcome.
class ConstructionBug : public std::logic_error {
 public:
  explicit ConstructionBug(std::string msg) : std::logic_error(std::move(msg)) {}
};

/// The host dimension is too small for the weak-copy chain construction.
class DimensionTooSmall : public std::runtime_error {
 public:
  DimensionTooSmall(std::string msg, long long have, long long need)
      : std::runtime_error(std::move(msg)), have_dim(have), need_dim(need) {}
  long long have_dim;
  long long need_dim;
};

}  // namespace pr
