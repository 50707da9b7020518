#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latmin {

constexpr int kMaxDim = 4;

/// A vertex of the integer lattice Z^n, n <= kMaxDim.
struct Point {
    int dim = 0;
    std::array<int, kMaxDim> c{};

    Point() = default;
    Point(std::initializer_list<int> xs) {
        dim = static_cast<int>(xs.size());
        assert(dim <= kMaxDim);
        int i = 0;
        for (int v : xs) c[i++] = v;
    }
    static Point of(int dim, const int* xs) {
        Point p;
        p.dim = dim;
        for (int i = 0; i < dim; ++i) p.c[i] = xs[i];
        return p;
    }

    int operator[](int i) const { return c[i]; }
    int& operator[](int i) { return c[i]; }

    Point shifted(int axis, int delta) const {
        Point q = *this;
        q.c[axis] += delta;
        return q;
    }
    Point operator+(const Point& o) const {
        Point q = *this;
        for (int i = 0; i < dim; ++i) q.c[i] += o.c[i];
        return q;
    }
    Point operator-(const Point& o) const {
        Point q = *this;
        for (int i = 0; i < dim; ++i) q.c[i] -= o.c[i];
        return q;
    }

    // Lexicographic, axis 0 most significant. Fixes the canonical edge order.
    friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
        if (a.dim != b.dim) return a.dim <=> b.dim;
        for (int i = 0; i < a.dim; ++i)
            if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Point& a, const Point& b) {
        if (a.dim != b.dim) return false;
        for (int i = 0; i < a.dim; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

/// The 2n lattice neighbors of p, in the fixed order -e1,+e1,...,-en,+en.
inline std::vector<Point> neighbors(const Point& p) {
    std::vector<Point> out;
    out.reserve(2 * p.dim);
    for (int a = 0; a < p.dim; ++a) {
        out.push_back(p.shifted(a, -1));
        out.push_back(p.shifted(a, +1));
    }
    return out;
}

/// An undirected lattice edge, stored as (min endpoint, axis).
struct Edge {
    Point a;  // lexicographically smaller endpoint
    int axis = 0;

    Point other() const { return a.shifted(axis, +1); }
    friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Axis-aligned inclusive box of lattice vertices; the finite domain of all
/// window computations. closure cells are stored over the box dilated by one
/// in every axis (a superset of the true closure U ∪ τU; the 2^n corner cells
/// are never members of τU and are ignored by every operation).
struct Window {
    Point lo, hi;

    Window() = default;
    Window(Point lo_, Point hi_) : lo(lo_), hi(hi_) {
        if (lo.dim != hi.dim || lo.dim < 1 || lo.dim > kMaxDim)
            throw std::invalid_argument("window: bad dimension");
        for (int i = 0; i < lo.dim; ++i)
            if (lo[i] > hi[i]) throw std::invalid_argument("window: lo > hi");
    }

    /// The ∞-ball B̂_r(center): lo = center - r, hi = center + r.
    static Window ball(const Point& center, int r) {
        if (r < 0) throw std::invalid_argument("ball: negative radius");
        Point a = center, b = center;
        for (int i = 0; i < center.dim; ++i) {
            a[i] -= r;
            b[i] += r;
        }
        return Window(a, b);
    }

    int dim() const { return lo.dim; }
    int side(int i) const { return hi[i] - lo[i] + 1; }

    long long volume() const {
        long long v = 1;
        for (int i = 0; i < dim(); ++i) v *= side(i);
        return v;
    }
    long long dilated_volume() const {
        long long v = 1;
        for (int i = 0; i < dim(); ++i) v *= side(i) + 2;
        return v;
    }
    int diameter() const {
        int d = 0;
        for (int i = 0; i < dim(); ++i) d = std::max(d, side(i) - 1);
        return d;
    }

    bool contains(const Point& p) const {
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
    /// Membership in the dilated box (the closure storage domain).
    bool contains_dilated(const Point& p) const {
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lo[i] - 1 || p[i] > hi[i] + 1) return false;
        return true;
    }
    /// True closure membership: p ∈ U ∪ τU.
    bool contains_closure(const Point& p) const {
        int out = 0;
        for (int i = 0; i < dim(); ++i) {
            if (p[i] < lo[i] - 1 || p[i] > hi[i] + 1) return false;
            if (p[i] < lo[i] || p[i] > hi[i]) ++out;
        }
        return out <= 1;
    }
    bool in_tau(const Point& p) const { return contains_closure(p) && !contains(p); }

    /// Index of p within the dilated box, row-major in lex order.
    long long index(const Point& p) const {
        long long ix = 0;
        for (int i = 0; i < dim(); ++i) {
            assert(p[i] >= lo[i] - 1 && p[i] <= hi[i] + 1);
            ix = ix * (side(i) + 2) + (p[i] - lo[i] + 1);
        }
        return ix;
    }
    Point unindex(long long ix) const {
        Point p;
        p.dim = dim();
        for (int i = dim() - 1; i >= 0; --i) {
            int s = side(i) + 2;
            p[i] = static_cast<int>(ix % s) + lo[i] - 1;
            ix /= s;
        }
        return p;
    }

    /// Visits the window cells in lexicographic order.
    void for_each(const std::function<void(const Point&)>& f) const {
        Point p = lo;
        while (true) {
            f(p);
            int i = dim() - 1;
            while (i >= 0 && p[i] == hi[i]) {
                p[i] = lo[i];
                --i;
            }
            if (i < 0) return;
            ++p[i];
        }
    }
    /// Visits the dilated box (closure storage) in lexicographic order.
    void for_each_dilated(const std::function<void(const Point&)>& f) const {
        Point p = lo;
        for (int i = 0; i < dim(); ++i) p[i] -= 1;
        while (true) {
            f(p);
            int i = dim() - 1;
            while (i >= 0 && p[i] == hi[i] + 1) {
                p[i] = lo[i] - 1;
                --i;
            }
            if (i < 0) return;
            ++p[i];
        }
    }
    /// Visits τU in lexicographic order.
    void for_each_tau(const std::function<void(const Point&)>& f) const {
        for_each_dilated([&](const Point& p) {
            if (in_tau(p)) f(p);
        });
    }

    std::vector<Point> cells() const {
        std::vector<Point> v;
        v.reserve(volume());
        for_each([&](const Point& p) { v.push_back(p); });
        return v;
    }
    std::vector<Point> tau_cells() const {
        std::vector<Point> v;
        for_each_tau([&](const Point& p) { v.push_back(p); });
        return v;
    }

    bool contains_window(const Window& w) const {
        return contains(w.lo) && contains(w.hi);
    }
    friend bool operator==(const Window&, const Window&) = default;
};

/// E_U = E(U, Ū): every edge with at least one endpoint in U, each listed
/// once, sorted by (min endpoint, axis). Edges between two τU cells are
/// excluded by construction.
inline std::vector<Edge> window_edges(const Window& u) {
    std::vector<Edge> out;
    out.reserve(2 * u.dim() * u.volume() + 2 * u.dim());
    u.for_each_dilated([&](const Point& p) {
        for (int a = 0; a < u.dim(); ++a) {
            Point q = p.shifted(a, +1);
            if (u.contains(p) || u.contains(q)) out.push_back(Edge{p, a});
        }
    });
    return out;
}

}  // namespace latmin
