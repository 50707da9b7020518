#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "latmin/geometry.hpp"

namespace latmin {

/// Pure membership predicate over Z^n plus its symbolic CSG description.
/// Evaluation is total and side-effect free; patterns are immutable and safe
/// to share across threads.
class Pattern {
public:
    enum class Op {
        Halfspace,   // sign * x[axis] >= c
        Box,         // lo <= x <= hi componentwise
        Cells,       // explicit finite vertex list
        Orthant,     // intersection of per-axis halfspaces from a corner
        Union,
        Intersection,
        Complement,
        Translate,   // arg evaluated at x - offset
        Extrude,     // arg (dim-1) evaluated with coordinate `axis` dropped
        Func,        // in-memory predicate; not serializable
    };

    struct Node {
        Op op;
        int axis = 0;
        int sign = +1;
        int c = 0;
        Point lo, hi;                 // Box
        std::vector<Point> cells;     // Cells (sorted)
        std::vector<int> signs;       // Orthant, one per axis, +1/-1
        Point corner;                 // Orthant
        Point offset;                 // Translate
        std::vector<std::shared_ptr<const Node>> args;
        std::function<bool(const Point&)> func;  // Func
    };

    Pattern() = default;
    Pattern(int dim, std::shared_ptr<const Node> root) : dim_(dim), root_(std::move(root)) {}

    int dim() const { return dim_; }
    bool valid() const { return root_ != nullptr; }
    const std::shared_ptr<const Node>& root() const { return root_; }

    /// Membership test (the oracle).
    bool eval(const Point& p) const;

    /// Independent route: materializes the membership table over a window by
    /// bottom-up set algebra on bitmaps, never calling eval(). Used by the
    /// differential tests.
    std::vector<uint8_t> table(const Window& w) const;

    // Constructors.
    static Pattern halfspace(int dim, int axis, int sign, int c);
    static Pattern box(const Point& lo, const Point& hi);
    static Pattern cells(int dim, std::vector<Point> pts);
    static Pattern orthant(const Point& corner, const std::vector<int>& signs);
    static Pattern union_of(std::vector<Pattern> ps);
    static Pattern intersection_of(std::vector<Pattern> ps);
    static Pattern complement(const Pattern& p);
    static Pattern translate(const Pattern& p, const Point& offset);
    static Pattern extrude(const Pattern& p, int axis);
    static Pattern from_func(int dim, std::function<bool(const Point&)> f);

    /// JSON document {"dim":n,"expr":{...}}. Serialization is canonical and
    /// round-trips exactly; Func nodes are rejected.
    std::string to_json() const;
    static Pattern from_json(const std::string& text);
    static Pattern load_file(const std::string& path);
    void save_file(const std::string& path) const;

private:
    int dim_ = 0;
    std::shared_ptr<const Node> root_;
};

/// δA ∩ W: members of A in W adjacent to a non-member (oracle-based, the
/// neighbor query is never clipped).
std::vector<Point> pattern_vertex_boundary(const Pattern& a, const Window& w);

/// τA ∩ W: non-members in W adjacent to a member.
std::vector<Point> pattern_exterior_boundary(const Pattern& a, const Window& w);

/// Degree of p in the subgraph induced on A.
int pattern_degree(const Pattern& a, const Point& p);

}  // namespace latmin
