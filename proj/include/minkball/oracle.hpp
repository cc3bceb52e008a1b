#pragma once

#include <optional>

#include "minkball/lattice.hpp"

namespace minkball {

/// One member of the three-contact family: boundary points P1 = boundary(t1)
/// and P2 = boundary(t2) with P1 + P2 again on the boundary.
struct FamilyMember {
    double t1;
    double t2;
    Lattice2 lattice;  // basis (P1, P2)
    double det;
    bool admissible;
};

struct SearchResult {
    double p;
    FamilyMember best;
    double delta_hat;    // minimal admissible determinant found
    double closed_form;  // critical_determinant(p).delta
    double abs_gap;      // |delta_hat - closed_form|
    int grid_size;
};

/// Closes the three-contact configuration over P1 = boundary(t1):
/// scans t2 in (t1 - pi, t1) for roots of p_functional(P1 + P2) - 1 and
/// returns the member with the smallest determinant, preferring admissible
/// ones. Returns nullopt when the scan finds no root. Requires t1 in (0, pi).
std::optional<FamilyMember> close_family(Exponent p, double t1);

/// Rediscovers the critical determinant numerically: sweeps t1 over a uniform
/// grid on (0, pi), keeps admissible members only, then golden-section
/// refines around the best grid cell. Deterministic regardless of evaluation
/// order (reduction by exact (det, t1) lexicographic minimum).
/// Requires grid >= 64 and refine_iters >= 20; throws if no admissible
/// member turns up.
SearchResult min_det_search(Exponent p, int grid = 512, int refine_iters = 40);

}  // namespace minkball
