#pragma once

#include <random>
#include <string>
#include <vector>

#include "latmin/currents.hpp"
#include "latmin/pattern.hpp"

namespace latmin {

enum class Verdict { Holds, Violated, NotApplicable };

/// One checker outcome. Violated verdicts always carry a concrete witness;
/// every report names the finite-window surrogate it used, so no checker
/// overclaims the global statement it is derived from.
struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::NotApplicable;
    std::string witness;
    std::string surrogate;

    std::string line(const std::string& pattern_name) const;
};

/// deg(x) >= n in the induced subgraph for all x ∈ A∩W, and no adjacent pair
/// both of degree exactly n.
PropertyReport check_min_degree(const Pattern& a, const Window& w);

/// Per axis line and connected component of A∩W, membership along the line is
/// an interval (dim 2).
PropertyReport check_convexity(const Pattern& a, const Window& w);

/// Window surrogate for the no-parallel-rays lemma: no two parallel flat
/// boundary runs both of length >= side-2 spanning the window.
PropertyReport check_no_parallel_rays(const Pattern& a, const Window& w);

/// Discrete maximum principle across axis i: column extrema over Ω₁ versus
/// its 1-neighborhood ring; columns reaching the window face make the test
/// not-applicable.
PropertyReport check_max_principle(const Pattern& a, int axis,
                                   const std::vector<Point>& omega1, const Window& w);

/// Samples an admissible Ω₁ (projection subset whose realization is a closed
/// bounded domain, all columns bounded in W) or returns empty when none found.
std::vector<Point> random_admissible_omega1(const Pattern& a, int axis, const Window& w,
                                            std::mt19937& rng);

/// Patterns pinched between two parallel hyperplanes must be refuted within
/// the budget; everything else is not-applicable.
PropertyReport check_slab_refutation(const Pattern& a, const Point& center, int r_budget);

struct GrowthPoint {
    int radius;
    long long boundary;  // |δA ∩ B̂_r|
    long long volume;    // |A ∩ B̂_r|
};
struct GrowthReport {
    std::vector<GrowthPoint> series;
    bool upper_bound_ok = true;       // |δA∩B̂_r| <= 4 n² (2r+1)^(n-1)
    bool boundary_nonempty_ok = true; // δA∩B̂_r nonempty for all r >= 2
};
GrowthReport growth_report(const Pattern& a, const Point& center, int r_max);

std::string verdict_str(Verdict v);

}  // namespace latmin
