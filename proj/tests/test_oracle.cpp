#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "minkball/oracle.hpp"

using namespace minkball;

namespace {

constexpr double kPi = std::numbers::pi;

// Distance between lattices modulo basis change and ball symmetry: minimum
// Frobenius distance over unimodular recombinations (entries up to 2) and the
// eight sign/swap symmetries of D_p.
double lattice_distance(const Lattice2& a, const Lattice2& b) {
    static const std::array<Eigen::Matrix2d, 8> symmetries = [] {
        std::array<Eigen::Matrix2d, 8> s;
        int k = 0;
        for (const double sx : {1.0, -1.0})
            for (const double sy : {1.0, -1.0}) {
                Eigen::Matrix2d direct;
                direct << sx, 0, 0, sy;
                Eigen::Matrix2d swapped;
                swapped << 0, sx, sy, 0;
                s[k++] = direct;
                s[k++] = swapped;
            }
        return s;
    }();

    const Eigen::Matrix2d A = a.basis();
    const Eigen::Matrix2d B = b.basis();
    double best = std::numeric_limits<double>::infinity();
    for (int u11 = -2; u11 <= 2; ++u11)
        for (int u12 = -2; u12 <= 2; ++u12)
            for (int u21 = -2; u21 <= 2; ++u21)
                for (int u22 = -2; u22 <= 2; ++u22) {
                    if (std::abs(u11 * u22 - u12 * u21) != 1) continue;
                    Eigen::Matrix2d U;
                    U << u11, u12, u21, u22;
                    const Eigen::Matrix2d AU = A * U;
                    for (const Eigen::Matrix2d& S : symmetries)
                        best = std::min(best, (S * AU - B).norm());
                }
    return best;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("close_family reproduces the hexagonal closure on the disk") {
    const auto m = close_family(Exponent(2), kPi / 2);
    REQUIRE(m.has_value());
    CHECK(m->t2 == doctest::Approx(-kPi / 6).epsilon(1e-9));
    CHECK(m->lattice.b2().x() == doctest::Approx(0.5 * std::sqrt(3.0)).epsilon(1e-9));
    CHECK(m->lattice.b2().y() == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(m->det == doctest::Approx(0.5 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(m->admissible);
}

TEST_CASE("close_family handles the flat facets of the l1 ball") {
    const auto m = close_family(Exponent(1), kPi / 2);
    REQUIRE(m.has_value());
    CHECK(m->det >= 0.5 - 1e-12);
    CHECK(m->det == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(m->admissible);
}

TEST_CASE("close_family members satisfy the three-contact invariant") {
    for (const double pv : {1.5, 2.0, 3.0}) {
        const Exponent p(pv);
        for (int i = 1; i < 25; ++i) {
            const auto m = close_family(p, kPi * i / 25.0);
            if (!m) continue;
            const Point2 p1 = m->lattice.b1();
            const Point2 p2 = m->lattice.b2();
            CHECK(std::abs(p_functional(p1, p) - 1.0) <= 1e-10);
            CHECK(std::abs(p_functional(p2, p) - 1.0) <= 1e-10);
            CHECK(std::abs(p_functional(Point2(p1 + p2), p) - 1.0) <= 1e-10);
            CHECK(m->det == m->lattice.det());
        }
    }
}

TEST_CASE("close_family validates t1") {
    CHECK_THROWS_AS(close_family(Exponent(2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(close_family(Exponent(2), kPi), std::invalid_argument);
    CHECK_THROWS_AS(close_family(Exponent(2), -0.3), std::invalid_argument);
}

TEST_CASE("min_det_search matches the closed form on the disk") {
    const SearchResult sr = min_det_search(Exponent(2), 128, 25);
    CHECK(sr.grid_size == 128);
    CHECK(sr.best.admissible);
    CHECK(sr.abs_gap <= 1e-6);
    CHECK(sr.delta_hat == doctest::Approx(0.5 * std::sqrt(3.0)).epsilon(1e-6));
    CHECK(sr.abs_gap == std::abs(sr.delta_hat - sr.closed_form));
}

TEST_CASE("search never undercuts the closed form") {
    for (const double pv : {1.25, 1.5, 2.0, 2.3, 2.5725, 3.0, 5.0}) {
        const SearchResult sr = min_det_search(Exponent(pv), 96, 20);
        CHECK(sr.delta_hat >= sr.closed_form - 1e-7);
    }
}

TEST_CASE("full-size search closes the gap at the remaining sample points") {
    for (const double pv : {1.25, 2.3}) {
        const SearchResult sr = min_det_search(Exponent(pv), 512, 40);
        CHECK(sr.abs_gap <= 1e-5);
        CHECK(sr.delta_hat >= sr.closed_form - 1e-7);
    }
}

TEST_CASE("search rejects undersized parameters") {
    CHECK_THROWS_AS(min_det_search(Exponent(2), 32, 40), std::invalid_argument);
    CHECK_THROWS_AS(min_det_search(Exponent(2), 512, 10), std::invalid_argument);
}

TEST_CASE("the minimizing configuration flips across the crossover") {
    const SearchResult below = min_det_search(Exponent(2.4), 256, 20);
    CHECK(lattice_distance(below.best.lattice, lambda0(Exponent(2.4))) <
          lattice_distance(below.best.lattice, lambda1(Exponent(2.4))));

    const SearchResult above = min_det_search(Exponent(2.8), 256, 20);
    CHECK(lattice_distance(above.best.lattice, lambda1(Exponent(2.8))) <
          lattice_distance(above.best.lattice, lambda0(Exponent(2.8))));
}

}  // TEST_SUITE
