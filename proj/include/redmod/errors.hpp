#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redmod {

struct RingMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonMonicPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModulusTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAHomomorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASubmodule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hard cap on the number of elements any single ring, module or
/// localization may enumerate. Read once from REDMOD_MAX_ELEMS
/// (default 20000).
std::uint64_t max_enumerated_elements();

}  // namespace redmod
