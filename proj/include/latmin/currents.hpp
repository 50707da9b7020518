#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latmin/energy.hpp"
#include "latmin/geometry.hpp"
#include "latmin/mincut.hpp"
#include "latmin/pattern.hpp"

namespace latmin {

/// Antisymmetric edge labels on E_Ω, one value per undirected edge in
/// canonical order, read as a_{xy} with x the lexicographic min endpoint.
/// Certificates produced here are integral: values in {-1,0,+1}.
struct Current {
    Window window;
    std::vector<Edge> edges;   // E_Ω, canonical order
    std::vector<int8_t> values;

    int8_t value_on(size_t i) const { return values[i]; }
};

/// Per-edge Sgn constraints of a function: forced edges carry the sign of
/// f(x)-f(y) (from the min endpoint); free edges have f(x)=f(y).
struct ForcedConstraints {
    std::vector<Edge> edges;    // E_Ω, canonical order
    std::vector<int8_t> forced; // +1/-1, or 0 = free
};

ForcedConstraints forced_constraints(const VertexFunction& f, const Window& omega);

/// Δ₁f(x) as the exact interval [S-F, S+F]: S = sum of forced values at x,
/// F = number of free incident edges. 0 ∈ Δ₁f(x) pointwise iff lo <= 0 <= hi.
struct LaplacianInterval {
    long long lo, hi;
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};
LaplacianInterval one_laplacian_interval(const VertexFunction& f, const Point& x,
                                         const Window& omega);

/// Decides whether a minimal current associated with f exists on Ω (zero
/// divergence at every window vertex, τΩ unconstrained) and returns one;
/// infeasible is a value, not an error. Reduction: circulation with demands
/// on the free edges, solved as max flow through a boundary hub absorbing the
/// unconstrained τ divergence. Integral demands give an integral current.
std::optional<Current> find_minimal_current(const VertexFunction& f, const Window& omega);

/// Indicator fast path: the same decision for f = 1_K.
std::optional<Current> find_minimal_current(const VertexSet& k, const Window& omega);

/// Lowest-level entry: decides feasibility for precomputed Sgn constraints
/// (edges must be E_Ω in canonical order). Used by the enumeration sweep.
std::optional<Current> find_minimal_current_constrained(const Window& omega,
                                                        std::vector<Edge> edges,
                                                        std::vector<int8_t> forced);

/// Cheap sound precheck: true when some window vertex has 0 ∉ Δ₁f(x).
bool has_local_obstruction(const VertexFunction& f, const Window& omega);

/// Serialized minimality witness for a pattern on B̂_r(center).
struct Certificate {
    std::string pattern_id;
    Point center;
    int radius = 0;
    Current current;
    uint64_t hash = 0;  // content hash of the serialized body

    std::string serialize() const;
    static Certificate parse(const std::string& text);
};

/// Witness of non-minimality on B̂_r: a competitor with the same τ-trace and
/// strictly smaller perimeter, extracted from the min-cut solver.
struct Refutation {
    std::string pattern_id;
    Point center;
    int radius = 0;
    long long pattern_perimeter = 0;
    long long witness_perimeter = 0;
    VertexSet witness;
};

using RadiusResult = std::variant<Certificate, Refutation>;

struct CertifyReport {
    std::vector<RadiusResult> per_radius;  // r = 1..; stops after a refutation
    bool refuted = false;
    int refuted_at = -1;       // radius of the (conclusive) refutation
    int certified_to = 0;      // largest consecutive certified radius
};

/// Runs find_minimal_current for 1_A on B̂_r(center) for r = 1..r_max. A
/// refutation at any radius is conclusive non-minimality; certificates up to
/// r_max are evidence only, never a proof of minimality.
CertifyReport certify_up_to_radius(const Pattern& a, const Point& center, int r_max,
                                   const std::string& pattern_id = "");

/// Re-checks a certificate against the pattern without the solver:
/// e dge list, value range, Sgn membership on every E_Ω edge, zero divergence
/// at every window vertex.
bool validate_certificate(const Certificate& c, const Pattern& a);

/// The negated current, certifying the complement pattern.
Certificate negate_certificate(const Certificate& c);

/// Indicator of a pattern as a VertexFunction on the closure of w.
VertexFunction indicator_of(const Pattern& a, const Window& w);

uint64_t fnv1a64(const std::string& data);

}  // namespace latmin
