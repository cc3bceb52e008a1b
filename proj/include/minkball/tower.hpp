#pragma once

#include <string>
#include <vector>

#include "minkball/lattice.hpp"

namespace minkball {

enum class Direction { Direct, Inverse };

const char* to_string(Direction d);

struct TowerLevel {
    int m;
    DyadicDomain domain;  // 2^m D_p
    Lattice2 lattice;     // 2^m times the branch-selected critical lattice
    double det;           // 4^m Delta(D_p)
    double volume;        // 4^m V(D_p)
};

/// Finite truncation of the doubling (Direct) or halving (Inverse) system of
/// domains and critical lattices. Levels run ascending in m for Direct
/// towers and descending for Inverse ones. The formal limits are not
/// computed; they are reported as fixed metadata labels.
struct TowerReport {
    double p;
    std::vector<TowerLevel> levels;
    Direction direction;
    std::string limit_label;          // limit of the domain tower
    std::string lattice_limit_label;  // limit of the lattice tower
};

/// Levels m = 0..max_level. Requires 0 <= max_level <= 16 (keeps 4^m within
/// the exact-integer range of doubles).
TowerReport build_tower(Exponent p, int max_level, Direction direction);

/// Section identity between neighbouring levels: on 1000 sampled points,
/// x in 2^m D_p iff 2x in 2^{m+1} D_p, and halving after doubling returns
/// the original point exactly. Requires 0 <= m < 16.
bool check_section(Exponent p, int m);

}  // namespace minkball
