#include "minkball/critical.hpp"

#include <cmath>
#include <stdexcept>

#include "minkball/roots.hpp"

namespace minkball {

const char* to_string(Branch b) {
    return b == Branch::Sigma ? "sigma" : "tau";
}

double sigma(Exponent p) {
    // (2^p - 1)^{1/p} = 2 exp(log1p(-2^{-p}) / p), stable for the whole range.
    const double pe = p.value();
    return 2.0 * std::exp(std::log1p(-std::exp2(-pe)) / pe);
}

double tau(Exponent p) {
    const double pe = p.value();
    const auto f = [pe](double t) {
        const double lhs = 2.0 * std::exp(pe * std::log1p(-t));  // 2(1-t)^p
        const double tp = t == 0.0 ? 0.0 : std::exp(pe * std::log(t));
        return lhs - 1.0 - tp;
    };
    // f(0) = 1 > 0 and f(1-) < 0, so the bracket always holds.
    const RootResult r =
        find_root(f, 0.0, 1.0 - 1e-15, {.x_tol = 1e-14, .f_tol = 1e-13, .max_iters = 200});
    return r.x;
}

double delta0(Exponent p) { return 0.5 * sigma(p); }

double delta1(Exponent p) {
    const double t = tau(p);
    return std::exp2(-2.0 / p.value()) * (1.0 + t) / (1.0 - t);
}

PZero p_zero(double tol) {
    if (!(tol >= 1e-12)) throw std::invalid_argument("p_zero: tol must be >= 1e-12");
    const auto g = [](double p) { return delta0(Exponent(p)) - delta1(Exponent(p)); };
    // find_root verifies the sign change over [2.1, 3.0] before iterating.
    const RootResult r = find_root(g, 2.1, 3.0, {.x_tol = tol, .f_tol = 0.0, .max_iters = 200});
    PZero out;
    out.value = 0.5 * (r.lo + r.hi);
    out.bracket_lo = r.lo;
    out.bracket_hi = r.hi;
    out.residual = std::abs(g(out.value));
    if (!(out.value > 2.57 && out.value < 2.58))
        throw std::runtime_error("p_zero: root escaped (2.57, 2.58)");
    if (!(out.residual <= 1e-10))
        throw std::runtime_error("p_zero: residual exceeds 1e-10");
    return out;
}

const PZero& cached_p_zero() {
    static const PZero cached = p_zero(1e-12);
    return cached;
}

CriticalData critical_determinant(Exponent p) {
    const double pe = p.value();
    const double p0 = cached_p_zero().value;

    CriticalData d;
    d.p = pe;
    d.sigma = sigma(p);
    d.tau = tau(p);
    d.delta0 = 0.5 * d.sigma;
    d.delta1 = std::exp2(-2.0 / pe) * (1.0 + d.tau) / (1.0 - d.tau);
    const bool on_sigma = pe >= 2.0 && pe <= p0;  // ties at 2 and p0 go to sigma
    d.branch = on_sigma ? Branch::Sigma : Branch::Tau;
    d.delta = on_sigma ? d.delta0 : d.delta1;
    d.volume = volume(DyadicDomain(p));
    d.density = d.volume / (4.0 * d.delta);
    d.ball_class = classify(p, p0);
    return d;
}

double packing_density(Exponent p) { return critical_determinant(p).density; }

}  // namespace minkball
