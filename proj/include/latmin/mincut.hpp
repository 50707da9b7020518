#pragma once

#include <vector>

#include "latmin/geometry.hpp"
#include "latmin/vertexset.hpp"

namespace latmin {

struct LeastPerimeterResult {
    VertexSet k_opt;   // canonical optimizer: source side of the final residual
    long long value;   // optimal |∂K ∩ E_U| = max-flow value
};

/// Exact least-perimeter Dirichlet solve on U: among all K ⊆ Ū with
/// K ∩ τU = phi⁻¹(1), minimizes |∂K ∩ E_U|. Reduction to s–t min cut with
/// unit capacities on lattice edges; phi is read on the τU cells of `trace`.
LeastPerimeterResult least_perimeter_solve(const Window& u, const VertexSet& trace);

struct BruteForceResult {
    long long value;
    std::vector<VertexSet> optima;  // every optimizer, in interior-mask order
};

/// Exhaustive minimum over all 2^|U| interior assignments. Desk-scale oracle;
/// refuses |U| > 25.
BruteForceResult brute_force_least_perimeter(const Window& u, const VertexSet& trace);

/// perimeter(K, U) == least_perimeter_solve(U, trace of K).value
bool is_least_perimeter(const VertexSet& k, const Window& u);

}  // namespace latmin
