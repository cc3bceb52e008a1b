#pragma once

#include <Eigen/Core>

#include "minkball/exponent.hpp"

namespace minkball {

using Point2 = Eigen::Vector2d;

/// The domain 2^m D_p, the m-th dyadic scaling of the ball
/// D_p : |x|^p + |y|^p <= 1. Level m = 0 is the ball itself.
class DyadicDomain {
  public:
    explicit DyadicDomain(Exponent p, int level = 0) : p_(p), level_(level) {
        if (level < 0)
            throw std::invalid_argument("DyadicDomain: level must be >= 0");
    }

    Exponent exponent() const { return p_; }
    int level() const { return level_; }

    /// Linear scale factor 2^m (exact).
    double scale() const { return std::ldexp(1.0, level_); }

  private:
    Exponent p_;
    int level_;
};

enum class BallClass { Minkowski, Davis, ChebyshevCohn };

const char* to_string(BallClass c);

/// |x|^p + |y|^p. Powers go through exp(p log|x|); zero coordinates
/// contribute exactly 0. May return +inf for points far outside the ball.
double p_functional(const Point2& pt, Exponent p);

/// Membership test. strict=true tests the open interior, strict=false the
/// closed set. No tolerance is applied; tolerance handling belongs to callers.
bool contains(const DyadicDomain& dom, const Point2& pt, bool strict = false);

/// Superellipse parameterization of the boundary:
/// 2^m (sign(cos t)|cos t|^{2/p}, sign(sin t)|sin t|^{2/p}).
/// Periodic in t; the canonical parameter range is [0, 2pi).
Point2 boundary_point(const DyadicDomain& dom, double t);

/// Euclidean circumradius 2^m max(1, 2^{1/2 - 1/p}) (axis point vs
/// diagonal point, whichever is farther).
double circumradius(const DyadicDomain& dom);

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

/// Area of 2^m D_p: 4^m * 4 Gamma(1 + 1/p)^2 / Gamma(1 + 2/p).
double volume(const DyadicDomain& dom);

/// Class of the ball: Minkowski for 1 <= p < 2, Davis for 2 <= p < p0,
/// Chebyshev-Cohn for p >= p0. The crossover exponent p0 is supplied by the
/// caller (see cached_p_zero()).
BallClass classify(Exponent p, double p_zero_value);

}  // namespace minkball
