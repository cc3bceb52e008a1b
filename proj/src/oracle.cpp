#include "minkball/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "minkball/roots.hpp"

namespace minkball {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanCells = 128;
constexpr double kContactTol = 1e-10;
// Enumeration slack inside the sweep; avoids boundary-shell false positives.
constexpr double kSweepRadiusSlack = 1e-6;

std::optional<FamilyMember> make_member(Exponent p, const DyadicDomain& ball,
                                        const Point2& p1, double t1, double t2) {
    const Point2 p2 = boundary_point(ball, t2);
    const double det = std::abs(p1.x() * p2.y() - p1.y() * p2.x());
    if (!(det > 1e-12)) return std::nullopt;
    for (const Point2& q : {p1, p2, Point2(p1 + p2)})
        if (std::abs(p_functional(q, p) - 1.0) > kContactTol) return std::nullopt;

    FamilyMember m{t1, t2, Lattice2(p1, p2), det, false};
    m.admissible = admissibility(m.lattice, ball, 1e-9, kSweepRadiusSlack).admissible;
    return m;
}

}  // namespace

std::optional<FamilyMember> close_family(Exponent p, double t1) {
    if (!(t1 > 0.0 && t1 < kPi))
        throw std::invalid_argument("close_family: t1 must lie in (0, pi)");

    const DyadicDomain ball(p);
    const Point2 p1 = boundary_point(ball, t1);
    const auto h = [&](double t2) {
        return p_functional(p1 + boundary_point(ball, t2), p) - 1.0;
    };

    std::optional<FamilyMember> best;
    const auto consider = [&](double t2) {
        const auto m = make_member(p, ball, p1, t1, t2);
        if (!m) return;
        if (!best) {
            best = m;
            return;
        }
        if (m->admissible != best->admissible) {
            if (m->admissible) best = m;
            return;
        }
        if (m->det < best->det || (m->det == best->det && m->t2 < best->t2)) best = m;
    };

    // Scan the open window (t1 - pi, t1); the endpoints degenerate to +/-P1.
    // Near-zero samples count as roots directly, which covers the flat facet
    // configurations of p = 1 where h vanishes on whole subintervals.
    const double lo = t1 - kPi;
    const double step = kPi / kScanCells;
    double t_prev = 0.0, h_prev = 0.0;
    for (int i = 1; i < kScanCells; ++i) {
        const double t = lo + i * step;
        const double ht = h(t);
        if (std::abs(ht) <= 1e-12) {
            consider(t);
        } else if (i > 1 && std::abs(h_prev) > 1e-12 && (h_prev < 0.0) != (ht < 0.0)) {
            const RootResult r =
                find_root(h, t_prev, t, {.x_tol = 1e-12, .f_tol = 1e-12, .max_iters = 200});
            consider(r.x);
        }
        t_prev = t;
        h_prev = ht;
    }
    return best;
}

SearchResult min_det_search(Exponent p, int grid, int refine_iters) {
    if (grid < 64) throw std::invalid_argument("min_det_search: grid must be >= 64");
    if (refine_iters < 20)
        throw std::invalid_argument("min_det_search: refine_iters must be >= 20");

    std::optional<FamilyMember> best;
    const auto consider = [&](const std::optional<FamilyMember>& m) {
        if (!m || !m->admissible) return;
        if (!best || m->det < best->det || (m->det == best->det && m->t1 < best->t1))
            best = *m;
    };

    const double step = kPi / grid;
    for (int i = 0; i < grid; ++i) consider(close_family(p, (i + 0.5) * step));
    if (!best) throw std::runtime_error("min_det_search: no admissible family member found");

    // Golden-section refinement around the best grid cell. Admissibility
    // clipping leaves the objective merely continuous, so track the best
    // evaluated point instead of trusting the final interval.
    const auto eval = [&](double t) {
        const auto m = close_family(p, t);
        consider(m);
        return (m && m->admissible) ? m->det : std::numeric_limits<double>::infinity();
    };
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = std::max(best->t1 - step, 1e-9);
    double b = std::min(best->t1 + step, kPi - 1e-9);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    for (int i = 0; i < refine_iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = eval(x2);
        }
    }

    SearchResult result{p.value(), *best, best->det, critical_determinant(p).delta, 0.0, grid};
    result.abs_gap = std::abs(result.delta_hat - result.closed_form);
    return result;
}

}  // namespace minkball
