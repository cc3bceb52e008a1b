#include "minkball/tower.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace minkball {

const char* to_string(Direction d) {
    return d == Direction::Direct ? "direct" : "inverse";
}

TowerReport build_tower(Exponent p, int max_level, Direction direction) {
    if (max_level < 0 || max_level > 16)
        throw std::invalid_argument("build_tower: max_level must lie in [0, 16]");

    const CriticalData cd = critical_determinant(p);
    const Lattice2 base = cd.branch == Branch::Sigma ? lambda0(p) : lambda1(p);

    TowerReport report;
    report.p = p.value();
    report.direction = direction;
    for (int m = 0; m <= max_level; ++m) {
        const DyadicDomain dom(p, m);
        Lattice2 lat = scale_lattice(base, m);
        const double det = lat.det();
        report.levels.push_back({m, dom, std::move(lat), det, volume(dom)});
    }
    if (direction == Direction::Inverse)
        std::reverse(report.levels.begin(), report.levels.end());

    if (direction == Direction::Direct) {
        report.limit_label = "(Q_2/Z_2)·D_p (2-divisible, height one)";
        report.lattice_limit_label = "(Q_2/Z_2)·Λ_p";
    } else {
        report.limit_label = "free Z_2-module of rank one";
        report.lattice_limit_label = "free Z_2-module of rank two";
    }
    return report;
}

bool check_section(Exponent p, int m) {
    if (m < 0 || m >= 16)
        throw std::invalid_argument("check_section: m must lie in [0, 16)");

    const DyadicDomain lower(p, m);
    const DyadicDomain upper(p, m + 1);

    std::mt19937 rng(197306u + static_cast<unsigned>(m));
    const double box = 1.5 * circumradius(lower);
    std::uniform_real_distribution<double> coord(-box, box);

    for (int i = 0; i < 1000; ++i) {
        const Point2 x(coord(rng), coord(rng));
        const Point2 doubled = 2.0 * x;
        if (contains(lower, x) != contains(upper, doubled)) return false;
        if (contains(lower, x, true) != contains(upper, doubled, true)) return false;
        const Point2 halved = 0.5 * doubled;  // exact in binary floating point
        if (halved.x() != x.x() || halved.y() != x.y()) return false;
    }
    return true;
}

}  // namespace minkball
