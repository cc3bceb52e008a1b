#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace minkball {

struct RootOptions {
    double x_tol = 1e-14;  // stop once the bracket width is below this
    double f_tol = 0.0;    // and, if > 0, |f| at the best iterate is below this
    int max_iters = 200;
};

struct RootResult {
    double x;    // best iterate seen (smallest |f|)
    double fx;   // f(x)
    double lo;   // final bracket
    double hi;
    int iters;
};

/// Bracketed root finder: bisection with secant acceleration. Alternates a
/// secant candidate with a plain midpoint so the bracket width halves at
/// least every other iteration. Requires f(lo) and f(hi) of opposite sign.
template <class F>
RootResult find_root(F&& f, double lo, double hi, RootOptions opt = {}) {
    if (!(lo < hi)) throw std::invalid_argument("find_root: requires lo < hi");

    // An exact zero pinches the bracket to the neighbouring doubles so the
    // bracket contract (lo < root < hi, width below any practical tol) holds.
    constexpr double inf = std::numeric_limits<double>::infinity();
    const auto pinch = [&](double x, int iters) {
        return RootResult{x, 0.0, std::nextafter(x, -inf), std::nextafter(x, inf), iters};
    };

    double fa = f(lo);
    double fb = f(hi);
    if (fa == 0.0) return pinch(lo, 0);
    if (fb == 0.0) return pinch(hi, 0);
    if ((fa < 0.0) == (fb < 0.0))
        throw std::runtime_error("find_root: bracket does not change sign");

    double best_x = std::abs(fa) <= std::abs(fb) ? lo : hi;
    double best_f = std::abs(fa) <= std::abs(fb) ? fa : fb;

    int it = 0;
    for (; it < opt.max_iters; ++it) {
        if (hi - lo <= opt.x_tol && (opt.f_tol <= 0.0 || std::abs(best_f) <= opt.f_tol))
            break;

        double x;
        if (it % 2 == 0 && fb != fa) {
            x = hi - fb * (hi - lo) / (fb - fa);
            if (!std::isfinite(x) || x <= lo || x >= hi) x = 0.5 * (lo + hi);
        } else {
            x = 0.5 * (lo + hi);
        }
        if (x <= lo || x >= hi) break;  // bracket exhausted at double resolution

        const double fx = f(x);
        if (std::abs(fx) < std::abs(best_f)) {
            best_x = x;
            best_f = fx;
        }
        if (fx == 0.0) return pinch(x, it + 1);

        if ((fx < 0.0) == (fa < 0.0)) {
            lo = x;
            fa = fx;
        } else {
            hi = x;
            fb = fx;
        }
    }
    return {best_x, best_f, lo, hi, it};
}

}  // namespace minkball
