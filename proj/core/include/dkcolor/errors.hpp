#pragma once

#include <stdexcept>
#include <string>

namespace dkc {

// Base for all library errors so callers can catch the whole family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument or precondition violation at an operation boundary.
struct DomainError : Error {
  using Error::Error;
};

// Input exceeds a configured capacity (e.g. exact chromatic-number cap).
struct CapacityError : Error {
  using Error::Error;
};

// Generator parameters cannot produce a valid instance.
struct FeasibilityError : Error {
  using Error::Error;
};

// A stage could not finish (e.g. resample budget exhausted). Carries the
// stage name so pipeline reports can point at the failing phase.
struct StageAbort : Error {
  std::string stage;
  StageAbort(std::string stage_name, const std::string& what)
      : Error("[" + stage_name + "] " + what), stage(std::move(stage_name)) {}
};

// An invariant that earlier stages were supposed to guarantee is broken.
struct InvariantBreach : Error {
  using Error::Error;
};

// Test-build contract violation (e.g. predicate reading outside vbl).
struct ContractViolation : Error {
  using Error::Error;
};

}  // namespace dkc
