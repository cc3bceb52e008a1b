#pragma once

#include <vector>

#include <Eigen/Core>

#include "minkball/critical.hpp"
#include "minkball/geometry.hpp"

namespace minkball {

/// Planar lattice given by an ordered basis. The determinant
/// |b1.x b2.y - b1.y b2.x| is cached at construction and never recomputed.
class Lattice2 {
  public:
    Lattice2(const Point2& b1, const Point2& b2);

    const Point2& b1() const { return b1_; }
    const Point2& b2() const { return b2_; }
    double det() const { return det_; }

    /// Basis as a 2x2 matrix, columns b1, b2.
    Eigen::Matrix2d basis() const;

  private:
    Point2 b1_, b2_;
    double det_;
};

struct LatticePoint {
    Eigen::Vector2i coeffs;
    Point2 point;
};

struct Violation {
    Eigen::Vector2i coeffs;
    Point2 point;
    double functional;  // rescaled p-functional, < 1 - tol
};

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<Violation> violations;
    int boundary_pairs = 0;  // unordered +/- pairs with |functional - 1| <= tol
    Eigen::Vector2i coeff_bound{0, 0};
    double tol = 0.0;
};

/// Critical lattice of the sigma branch: basis (1, 0), (1/2, sigma_p/2).
/// All of (1,0), (1/2, sigma_p/2), (-1/2, sigma_p/2) lie on the boundary.
Lattice2 lambda0(Exponent p);

/// Critical lattice of the tau branch: b1 = (-2^{-1/p}, 2^{-1/p}),
/// b2 = (2^{-1/p}/(1-tau), 2^{-1/p} tau/(1-tau)). The closed form follows
/// from the symmetric three-contact configuration (b1, b2 and b1+b2 on the
/// boundary); the constructor verifies both the contacts (1e-10) and the
/// determinant against delta1 (1e-10) rather than trusting the derivation,
/// and throws if either fails.
Lattice2 lambda1(Exponent p);

/// Basis scaled by 2^m; the determinant picks up a factor 4^m exactly.
Lattice2 scale_lattice(const Lattice2& lat, int m);

/// Coefficient bounds (|a|, |b|) that cover every lattice point of Euclidean
/// norm <= radius, via Cramer's rule: |a| <= ceil(radius ||b2|| / det),
/// |b| <= ceil(radius ||b1|| / det).
Eigen::Vector2i coefficient_bounds(const Lattice2& lat, double radius);

/// All nonzero lattice points a b1 + b b2 with Euclidean norm <= radius,
/// complete by construction. Throws once the coefficient box exceeds 10^7
/// points (degenerate basis guard).
std::vector<LatticePoint> enumerate_points(const Lattice2& lat, double radius);

/// Enumeration verdict: no nonzero lattice point may fall strictly inside
/// the domain (rescaled functional < 1 - tol). Requires tol in [1e-12, 1e-6].
/// radius_slack widens the enumeration radius beyond circumradius + tol;
/// leave it at 0 for the plain contract.
AdmissibilityReport admissibility(const Lattice2& lat, const DyadicDomain& dom,
                                  double tol = 1e-9, double radius_slack = 0.0);

}  // namespace minkball
