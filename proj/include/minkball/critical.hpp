#pragma once

#include "minkball/geometry.hpp"

namespace minkball {

enum class Branch { Sigma, Tau };

const char* to_string(Branch b);

/// Everything the closed forms say about one exponent.
struct CriticalData {
    double p;
    double sigma;        // (2^p - 1)^{1/p}
    double tau;          // root of 2(1-t)^p = 1 + t^p in [0, 1)
    double delta0;       // sigma/2
    double delta1;       // 4^{-1/p} (1+tau)/(1-tau)
    double delta;        // critical determinant, branch-selected
    Branch branch;
    double volume;       // area of D_p
    double density;      // volume / (4 delta)
    BallClass ball_class;
};

/// Crossover exponent where the two branches meet.
struct PZero {
    double value;
    double bracket_lo;  // final bracket, width <= requested tol
    double bracket_hi;
    double residual;    // |delta0(value) - delta1(value)|
};

double sigma(Exponent p);

/// Unique root of 2(1-t)^p = 1 + t^p in [0, 1). Bracketed solve to
/// |f| <= 1e-13 and interval width <= 1e-14.
double tau(Exponent p);

double delta0(Exponent p);
double delta1(Exponent p);

/// Root of delta0(p) - delta1(p), bisected from the bracket [2.1, 3.0]
/// (sign change verified up front) down to interval width <= tol.
/// Requires tol >= 1e-12. The result is checked to land in (2.57, 2.58).
PZero p_zero(double tol);

/// Process-wide p0 at tol 1e-12, computed once and read-only afterward.
const PZero& cached_p_zero();

/// Branch-selected critical determinant and companions. The sigma branch is
/// chosen for 2 <= p <= p0 (ties at both ends included), the tau branch
/// otherwise.
CriticalData critical_determinant(Exponent p);

/// volume(D_p) / (4 delta(D_p)), the optimal lattice packing density.
double packing_density(Exponent p);

}  // namespace minkball
