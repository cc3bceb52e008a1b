#include "minkball/lattice.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace minkball {

Lattice2::Lattice2(const Point2& b1, const Point2& b2)
    : b1_(b1), b2_(b2), det_(std::abs(b1.x() * b2.y() - b1.y() * b2.x())) {
    if (!(det_ > 0.0)) throw std::invalid_argument("Lattice2: degenerate basis");
}

Eigen::Matrix2d Lattice2::basis() const {
    Eigen::Matrix2d m;
    m.col(0) = b1_;
    m.col(1) = b2_;
    return m;
}

Lattice2 lambda0(Exponent p) {
    return Lattice2(Point2(1.0, 0.0), Point2(0.5, 0.5 * sigma(p)));
}

Lattice2 lambda1(Exponent p) {
    const double c = std::exp2(-1.0 / p.value());
    const double t = tau(p);
    const Point2 b1(-c, c);
    const Point2 b2(c / (1.0 - t), c * t / (1.0 - t));
    Lattice2 lat(b1, b2);

    for (const Point2& q : {b1, b2, Point2(b1 + b2)})
        if (std::abs(p_functional(q, p) - 1.0) > 1e-10)
            throw std::runtime_error("lambda1: contact point off the boundary");
    if (std::abs(lat.det() - delta1(p)) > 1e-10)
        throw std::runtime_error("lambda1: determinant disagrees with delta1");
    return lat;
}

Lattice2 scale_lattice(const Lattice2& lat, int m) {
    if (m < 0) throw std::invalid_argument("scale_lattice: m must be >= 0");
    const double s = std::ldexp(1.0, m);
    return Lattice2(s * lat.b1(), s * lat.b2());
}

Eigen::Vector2i coefficient_bounds(const Lattice2& lat, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("coefficient_bounds: radius must be > 0");
    const double a = std::ceil(radius * lat.b2().norm() / lat.det());
    const double b = std::ceil(radius * lat.b1().norm() / lat.det());
    const double total = (2.0 * a + 1.0) * (2.0 * b + 1.0);
    if (!(total <= 1e7))
        throw std::length_error("enumerate_points: coefficient box exceeds 10^7 points");
    return Eigen::Vector2i(static_cast<int>(a), static_cast<int>(b));
}

std::vector<LatticePoint> enumerate_points(const Lattice2& lat, double radius) {
    const Eigen::Vector2i bound = coefficient_bounds(lat, radius);
    std::vector<LatticePoint> out;
    for (int a = -bound.x(); a <= bound.x(); ++a) {
        for (int b = -bound.y(); b <= bound.y(); ++b) {
            if (a == 0 && b == 0) continue;
            const Point2 pt = double(a) * lat.b1() + double(b) * lat.b2();
            if (pt.norm() <= radius) out.push_back({Eigen::Vector2i(a, b), pt});
        }
    }
    return out;
}

AdmissibilityReport admissibility(const Lattice2& lat, const DyadicDomain& dom,
                                  double tol, double radius_slack) {
    if (!(tol >= 1e-12 && tol <= 1e-6))
        throw std::invalid_argument("admissibility: tol must lie in [1e-12, 1e-6]");

    const double radius = circumradius(dom) + tol + radius_slack;
    const Exponent p = dom.exponent();
    const double inv_scale = 1.0 / dom.scale();

    AdmissibilityReport report;
    report.tol = tol;
    report.coeff_bound = coefficient_bounds(lat, radius);

    // Unordered +/- pairs, deduped by sign normalization of the coefficients.
    std::set<std::pair<int, int>> boundary;
    for (const LatticePoint& lp : enumerate_points(lat, radius)) {
        const double f = p_functional(lp.point * inv_scale, p);
        if (f < 1.0 - tol) {
            report.violations.push_back({lp.coeffs, lp.point, f});
        } else if (std::abs(f - 1.0) <= tol) {
            int a = lp.coeffs.x(), b = lp.coeffs.y();
            if (a < 0 || (a == 0 && b < 0)) {
                a = -a;
                b = -b;
            }
            boundary.emplace(a, b);
        }
    }
    report.boundary_pairs = static_cast<int>(boundary.size());
    report.admissible = report.violations.empty();
    return report;
}

}  // namespace minkball
