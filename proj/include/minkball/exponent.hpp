#pragma once

#include <cmath>
#include <stdexcept>

namespace minkball {

// Largest admissible exponent. Past this, |x|^p under/overflows double
// precision near the boundary and the kernels leave their well-conditioned
// range.
inline constexpr double kMaxExponent = 64.0;

/// Validated exponent p of the ball family |x|^p + |y|^p <= 1.
class Exponent {
  public:
    explicit Exponent(double p) : p_(p) {
        if (!std::isfinite(p) || p < 1.0 || p > kMaxExponent)
            throw std::invalid_argument("Exponent: p must be finite and in [1, 64]");
    }

    double value() const { return p_; }

  private:
    double p_;
};

}  // namespace minkball
