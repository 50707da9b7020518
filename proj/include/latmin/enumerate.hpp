#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "latmin/geometry.hpp"

namespace latmin {

/// Exhaustive sweep over all closure assignments of B̂_r in Z² that admit a
/// minimal current, with the pointwise Δ₁ interval as branch pruning and the
/// flow solver at the leaves. The reconstruction instrument for the catalog.
struct EnumerationResult {
    int radius = 0;
    long long nodes = 0;
    long long leaves_checked = 0;
    long long survivors = 0;
    bool budget_exhausted = false;  // partial result flag

    // Distinct 3x3 neighborhoods of the center when it is a boundary vertex,
    // restricted to the center's connected component, canonical under the
    // dihedral group. Bit i = cell (i%3-1, i/3-1).
    std::set<uint16_t> local_forms;

    long long with_isolated_geodesic_path3 = 0;  // survivors containing one
    long long with_square_loop = 0;
    long long with_nonsquare_loop = 0;
};

EnumerationResult enumerate_candidates(int r, long long node_budget = 400000000LL);

/// Canonical form of a 9-bit 3x3 mask under the dihedral group.
uint16_t canonical_local_form(uint16_t mask);

}  // namespace latmin
