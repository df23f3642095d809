#pragma once

// Symbolic structure of partial crossed products: each decomposable summand
// is M_{m+1}(C(X_t) x| H), and C(X_t) x| H splits over the H-orbits o of X_t
// into M_{|o|} over the group algebra of a point stabilizer.

#include "partact/decomposition.hpp"

#include <string>
#include <vector>

namespace partact {

struct Block {
    std::size_t matrix_size = 0;  // d
    Subgroup coefficient;         // K
    std::string coefficient_label;
    std::size_t stratum = 0;      // k
    Tuple orbit_key;              // minimal tuple of the Lt-orbit
    Tuple base;                   // tuple used as base point
    Point point_orbit_key = 0;    // minimal point of the H-orbit in X_t (original index)
    std::size_t point_orbit_size = 0;
    std::size_t simple_count = 0;  // conjugacy classes of K

    std::size_t dimension() const { return matrix_size * matrix_size * coefficient.order(); }
    std::string label() const;  // "M_2[triv]"
};

struct StructureReport {
    std::vector<Block> blocks;
    std::size_t total_dimension = 0;
    std::size_t k0_rank = 0;
    std::size_t k1 = 0;
    std::size_t basis_dimension = 0;  // sum over g of |X_g|, when computed from an action
    std::string summary() const;      // "M_1[triv] + M_1[C2], dim 3"
};

/// Blocks ordered by (stratum desc, orbit key asc, point-orbit key asc).
StructureReport crossed_product_structure(const PartialAction& pa);

class GroupTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// C*_par(G) as the crossed product of the full tuple space, computed by
/// streaming tuples. Blocks ordered by (n asc, orbit key asc).
StructureReport partial_group_algebra(const FiniteGroup& g, std::size_t max_order = 24);

/// 2^(N-1) + (N-1) 2^(N-2).
std::size_t partial_group_algebra_dimension(std::size_t group_order);

struct FixedPointSummand {
    std::size_t stratum = 0;
    Tuple orbit_key;
    Tuple base;
    Subgroup stabilizer;
    std::size_t fixed_dimension = 0;   // number of H-orbits on X_t
    std::vector<Vector> inclusions;    // iota_t of the H-orbit indicators, as functions on X
};

struct FixedPointReport {
    std::vector<FixedPointSummand> summands;
    std::size_t total_dimension = 0;
    std::size_t orbit_count = 0;
    bool inclusions_invariant = false;  // each iota_t(a) is G-invariant
    bool matches_quotient = false;      // span of inclusions = orbit indicator span
};

FixedPointReport fixed_point_structure(const PartialAction& pa);

struct KTheory {
    std::size_t k0_rank = 0;
    std::size_t k1 = 0;
};
KTheory k_theory(const StructureReport& report);

/// Per H-orbit o of X_t: the stabilizer in G of iota(y) in the envelope
/// equals Stab_H(y), and the envelope G-orbit has [G:H] |o| points.
struct MoritaCheck {
    std::size_t orbits_checked = 0;
    std::string violation;
    bool ok() const { return violation.empty(); }
};
MoritaCheck morita_consistency(const PartialAction& pa);

}  // namespace partact
