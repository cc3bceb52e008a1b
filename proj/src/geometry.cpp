#include "minkball/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minkball {

const char* to_string(BallClass c) {
    switch (c) {
        case BallClass::Minkowski: return "minkowski";
        case BallClass::Davis: return "davis";
        case BallClass::ChebyshevCohn: return "chebyshev-cohn";
    }
    return "?";
}

double p_functional(const Point2& pt, Exponent p) {
    const double pe = p.value();
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double a = std::abs(pt[i]);
        if (a != 0.0) sum += std::exp(pe * std::log(a));
    }
    return sum;
}

bool contains(const DyadicDomain& dom, const Point2& pt, bool strict) {
    // Rescaling by 2^{-m} is exact.
    const Point2 unit = pt / dom.scale();
    const double f = p_functional(unit, dom.exponent());
    return strict ? f < 1.0 : f <= 1.0;
}

Point2 boundary_point(const DyadicDomain& dom, double t) {
    const double e = 2.0 / dom.exponent().value();
    const auto comp = [e](double u) {
        const double a = std::abs(u);
        return a == 0.0 ? 0.0 : std::copysign(std::exp(e * std::log(a)), u);
    };
    return dom.scale() * Point2(comp(std::cos(t)), comp(std::sin(t)));
}

double circumradius(const DyadicDomain& dom) {
    const double pe = dom.exponent().value();
    return dom.scale() * std::max(1.0, std::exp2(0.5 - 1.0 / pe));
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
    constexpr double pi = std::numbers::pi;
    if (x < 0.5)  // reflection
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);

    // Lanczos, g = 7, 9 terms.
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

    const double z = x - 1.0;
    double series = coef[0];
    for (int i = 1; i < 9; ++i) series += coef[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double volume(const DyadicDomain& dom) {
    const double pe = dom.exponent().value();
    const double base =
        4.0 * std::exp(2.0 * log_gamma(1.0 + 1.0 / pe) - log_gamma(1.0 + 2.0 / pe));
    return std::ldexp(base, 2 * dom.level());  // 4^m
}

BallClass classify(Exponent p, double p_zero_value) {
    const double v = p.value();
    if (v < 2.0) return BallClass::Minkowski;
    if (v < p_zero_value) return BallClass::Davis;
    return BallClass::ChebyshevCohn;
}

}  // namespace minkball
