#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eac {

/// Caller supplied something the samplers cannot work with (maps to CLI exit 1).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration oracle was asked for an instance above its guard.
class InstanceTooLarge : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A distribution handed to a metric does not sum to 1.
class UnnormalizedInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The chain used up its proposal budget before reaching grade 0 (maps to CLI exit 2).
class StepCapExceeded : public std::runtime_error {
 public:
  StepCapExceeded(std::uint64_t steps, std::int64_t grade)
      : std::runtime_error("step cap of " + std::to_string(steps) +
                           " proposals exceeded; last badness " + std::to_string(grade)),
        steps_(steps),
        grade_(grade) {}

  std::uint64_t steps() const noexcept { return steps_; }
  std::int64_t grade() const noexcept { return grade_; }

 private:
  std::uint64_t steps_;
  std::int64_t grade_;
};

}  // namespace eac
