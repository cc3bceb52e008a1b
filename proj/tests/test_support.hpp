#pragma once

#include <random>
#include <vector>

#include "minkball/lattice.hpp"

namespace minkball::test {

// Independent enumeration reference: plain double loop over |a|, |b| <= bound.
// Kept deliberately naive; the production path must agree with it exactly.
inline std::vector<LatticePoint> naive_enumerate(const Lattice2& lat, double radius,
                                                 int bound = 50) {
    std::vector<LatticePoint> out;
    for (int a = -bound; a <= bound; ++a) {
        for (int b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            const Point2 pt = double(a) * lat.b1() + double(b) * lat.b2();
            if (pt.norm() <= radius) out.push_back({Eigen::Vector2i(a, b), pt});
        }
    }
    return out;
}

// Well-conditioned random basis: entries in [-2, 2], determinant bounded away
// from zero, moderate norms. Rejection-sampled so the coefficient bounds for
// radius <= 5 stay far below the naive loop's |a|, |b| <= 50 box.
inline Lattice2 random_basis(std::mt19937& rng) {
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (;;) {
        const Point2 b1(entry(rng), entry(rng));
        const Point2 b2(entry(rng), entry(rng));
        const double det = std::abs(b1.x() * b2.y() - b1.y() * b2.x());
        if (det < 0.6) continue;
        if (b1.norm() < 0.5 || b1.norm() > 2.5 || b2.norm() < 0.5 || b2.norm() > 2.5)
            continue;
        return Lattice2(b1, b2);
    }
}

}  // namespace minkball::test
