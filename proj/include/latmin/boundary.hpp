#pragma once

#include <vector>

#include "latmin/geometry.hpp"
#include "latmin/pattern.hpp"

namespace latmin {

/// Maximal run of pairwise-adjacent δ-vertices along one axis line.
struct FlatRun {
    Point start;  // smallest endpoint
    int axis;
    int length;   // number of vertices in the run
};

/// Boundary-structure classification of a pattern within a window, computed
/// from the definitions on the geometric realization. The geodesic flag is
/// the window surrogate ("geodesic within window"): distances inside the
/// window are compared, which is what finite data can support.
struct BoundaryAnalysis {
    Window window;
    std::vector<Point> delta;            // δA ∩ W
    std::vector<int> delta_degree;       // δ-neighbors of each delta vertex (in W)
    std::vector<Edge> boundary_edges;    // induced edges in <= 1 unit square of X(A)
    std::vector<Point> corners;          // boundary-curve vertices with two perpendicular boundary edges
    std::vector<FlatRun> flat_runs;
    std::vector<Point> loop_cells;       // lower-left corners of unit-square loops
    int cycle_rank = 0;                  // independent cycles of the boundary-edge graph
    bool all_loops_unit_squares = true;  // cycle rank fully accounted for by unit squares
    int max_loops_per_component = 0;
    bool simple = true;     // every δ vertex has <= 2 δ-neighbors
    bool geodesic = true;   // d_{δA}(y,z) == d_A(y,z) within W for all pairs
    bool oriented = true;   // boundary-edge graph is locally a simple curve in the window interior
};

BoundaryAnalysis classify_boundary(const Pattern& a, const Window& w);

/// D4 transforms of Z² (identity, rotations, reflections).
Point dihedral_apply(int g, const Point& p);

/// True iff some composition of a dihedral symmetry and a translation with
/// offset bounded by diam(W) maps A ∩ W onto B ∩ W (as point sets).
bool are_isomorphic(const Pattern& a, const Pattern& b, const Window& w);

}  // namespace latmin
