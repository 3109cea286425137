#pragma once

#include <stdexcept>
#include <string>

namespace infogreedy {

// Malformed or out-of-range input: bad ids, negative values, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An edge (i, j) with i >= j; the information graph must be an ordered DAG.
class AdmissibilityError : public InputError {
 public:
  using InputError::InputError;
};

// An exhaustive computation would exceed its configured size guard. Never
// downgraded to sampling or truncation.
class GuardRefusal : public std::runtime_error {
 public:
  GuardRefusal(const std::string& what, std::size_t guard, std::size_t size)
      : std::runtime_error(what + " (guard " + std::to_string(guard) +
                           ", requested " + std::to_string(size) + ")"),
        guard_(guard),
        size_(size) {}

  std::size_t guard() const { return guard_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t guard_;
  std::size_t size_;
};

// A proven identity failed to hold on computed data (duality gap, a bound
// violated, a construction not certifying). Always a bug or a false claim.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class LpError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace infogreedy

namespace infogreedy {

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infogreedy
