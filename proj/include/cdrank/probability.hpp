#pragma once

#include <cmath>
#include <string>

#include "cdrank/error.hpp"

namespace cdrank {

// A real number in [0, 1]. Construction outside that range throws DomainError.
class Probability {
public:
  constexpr Probability() = default;

  explicit Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("probability out of [0, 1]: " + std::to_string(value));
    }
  }

  // Clamps tiny round-off excursions produced by numeric routines.
  static Probability clamped(double value) {
    if (std::isnan(value)) throw DomainError("probability is NaN");
    return Probability(value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value));
  }

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }

private:
  double value_ = 0.0;
};

}  // namespace cdrank
