#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pebbling {

/// Malformed input: bad edge, unknown family, unparsable file, out-of-range vertex.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pebbling operation was asked about a graph that is not connected.
class DisconnectedError : public std::domain_error {
 public:
  DisconnectedError() : std::domain_error("graph is not connected") {}
  explicit DisconnectedError(const std::string& what) : std::domain_error(what) {}
};

/// Instance above a hard size cap (configuration size, oracle limits, canonical-form cap).
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Node-expansion budget ran out. Carries the best bounds known at that point.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t lower, std::uint64_t upper)
      : std::runtime_error("search budget exceeded (bounds [" + std::to_string(lower) + ", " +
                           std::to_string(upper) + "])"),
        lower_(lower),
        upper_(upper) {}

  /// Value known to be attained (the number is at least this).
  std::uint64_t lower() const noexcept { return lower_; }
  /// Proven upper bound on the number.
  std::uint64_t upper() const noexcept { return upper_; }

 private:
  std::uint64_t lower_;
  std::uint64_t upper_;
};

/// A self-check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pebbling
