#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmin/geometry.hpp"
#include "latmin/pattern.hpp"

namespace latmin {

/// A subset of a window closure. Membership is stored explicitly over the
/// dilated box; the infinite tail is either undefined (explicit sets carry
/// only their τ-row, as Def of least perimeter requires) or answered by a
/// backing pattern oracle. Immutable by convention after construction.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(Window w, std::vector<uint8_t> bits)
        : win_(w), bits_(std::move(bits)) {
        if (static_cast<long long>(bits_.size()) != w.dilated_volume())
            throw std::invalid_argument("vertexset: bitmap size mismatch");
    }

    static VertexSet empty(const Window& w) {
        return VertexSet(w, std::vector<uint8_t>(w.dilated_volume(), 0));
    }
    static VertexSet full(const Window& w) {
        return VertexSet(w, std::vector<uint8_t>(w.dilated_volume(), 1));
    }
    static VertexSet of_points(const Window& w, const std::vector<Point>& pts) {
        auto v = empty(w);
        for (const auto& p : pts) v.bits_[w.index(p)] = 1;
        return v;
    }
    /// Trace of a pattern on the closure; keeps the oracle for queries beyond.
    static VertexSet from_pattern(const Pattern& a, const Window& w) {
        VertexSet v = empty(w);
        w.for_each_dilated([&](const Point& p) { v.bits_[w.index(p)] = a.eval(p) ? 1 : 0; });
        v.pattern_ = a;
        return v;
    }

    const Window& window() const { return win_; }
    int dim() const { return win_.dim(); }
    bool backed_by_pattern() const { return pattern_.has_value(); }

    /// Membership. Points beyond the dilated box need a pattern backing;
    /// otherwise this throws ("needs pattern").
    bool contains(const Point& p) const {
        if (win_.contains_dilated(p)) return bits_[win_.index(p)] != 0;
        if (pattern_) return pattern_->eval(p);
        throw std::runtime_error("vertexset: membership query outside closure needs pattern");
    }
    bool contains_indexed(const Point& p) const { return bits_[win_.index(p)] != 0; }

    void set(const Point& p, bool v) { bits_[win_.index(p)] = v ? 1 : 0; }

    /// Complement within the same closure (an involution). Pattern backing is
    /// complemented alongside.
    VertexSet complement() const {
        VertexSet v = *this;
        for (auto& b : v.bits_) b = !b;
        if (pattern_) v.pattern_ = Pattern::complement(*pattern_);
        return v;
    }

    long long count_window() const {
        long long n = 0;
        win_.for_each([&](const Point& p) { n += bits_[win_.index(p)]; });
        return n;
    }

    std::vector<Point> points_in_window() const {
        std::vector<Point> v;
        win_.for_each([&](const Point& p) {
            if (bits_[win_.index(p)]) v.push_back(p);
        });
        return v;
    }

    const std::vector<uint8_t>& raw_bits() const { return bits_; }

private:
    Window win_;
    std::vector<uint8_t> bits_;
    std::optional<Pattern> pattern_;
};

/// δA: members of A adjacent to a non-member, clipped to the window.
VertexSet vertex_boundary(const VertexSet& a);

/// τA: non-members adjacent to a member, over the closure of A's window.
VertexSet exterior_boundary(const VertexSet& a);

/// (∂A ∩ E_U, E_U) in canonical edge order.
struct EdgeSets {
    std::vector<Edge> cut;  // exactly one endpoint in A
    std::vector<Edge> all;  // E_U
};
EdgeSets edge_sets(const VertexSet& a, const Window& u);

/// |∂A ∩ E_U| without materializing the lists.
long long cut_edge_count(const VertexSet& a, const Window& u);

// --- GRID2 text format -------------------------------------------------
// Header `GRID2 x0 y0 w h`, then h rows of w characters, '#' = in,
// '.' = out, top row (y = y0+h-1) first. Describes an arbitrary box of Z².

struct Grid2 {
    int x0 = 0, y0 = 0, w = 0, h = 0;
    std::vector<uint8_t> bits;  // row-major from (x0, y0), bottom row first

    bool at(int x, int y) const { return bits[(y - y0) * w + (x - x0)] != 0; }
    bool covers(int x, int y) const {
        return x >= x0 && x < x0 + w && y >= y0 && y < y0 + h;
    }
};

Grid2 grid2_parse(const std::string& text);
std::string grid2_emit(const Grid2& g);

/// Renders the window contents of a Z² VertexSet over its dilated box.
Grid2 grid2_of(const VertexSet& v);
/// Reads a grid as an explicit VertexSet over the box it covers (the grid box
/// is taken as the dilated box of a window shrunk by one on every side).
VertexSet vertexset_of_grid(const Grid2& g);

}  // namespace latmin
