#include "latmin/vertexset.hpp"

#include <sstream>

namespace latmin {

VertexSet vertex_boundary(const VertexSet& a) {
    const Window& w = a.window();
    VertexSet out = VertexSet::empty(w);
    w.for_each([&](const Point& p) {
        if (!a.contains_indexed(p)) return;
        for (const auto& q : neighbors(p))
            if (!a.contains(q)) {
                out.set(p, true);
                return;
            }
    });
    return out;
}

VertexSet exterior_boundary(const VertexSet& a) {
    const Window& w = a.window();
    VertexSet out = VertexSet::empty(w);
    w.for_each_dilated([&](const Point& p) {
        if (!w.contains_closure(p) || a.contains_indexed(p)) return;
        for (const auto& q : neighbors(p)) {
            if (!w.contains_dilated(q)) continue;  // members live on the closure
            if (a.contains_indexed(q)) {
                out.set(p, true);
                return;
            }
        }
    });
    return out;
}

EdgeSets edge_sets(const VertexSet& a, const Window& u) {
    EdgeSets es;
    es.all = window_edges(u);
    for (const auto& e : es.all) {
        bool x = a.contains(e.a);
        bool y = a.contains(e.other());
        if (x != y) es.cut.push_back(e);
    }
    return es;
}

long long cut_edge_count(const VertexSet& a, const Window& u) {
    long long n = 0;
    u.for_each_dilated([&](const Point& p) {
        bool pin = u.contains(p);
        bool pa = a.contains(p);
        for (int ax = 0; ax < u.dim(); ++ax) {
            Point q = p.shifted(ax, +1);
            if (!pin && !u.contains(q)) continue;
            if (pa != a.contains(q)) ++n;
        }
    });
    return n;
}

Grid2 grid2_parse(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    Grid2 g;
    if (!(in >> magic >> g.x0 >> g.y0 >> g.w >> g.h) || magic != "GRID2")
        throw std::invalid_argument("grid2: bad header");
    if (g.w <= 0 || g.h <= 0) throw std::invalid_argument("grid2: bad size");
    g.bits.assign(static_cast<size_t>(g.w) * g.h, 0);
    std::string row;
    std::getline(in, row);  // rest of header line
    for (int r = 0; r < g.h; ++r) {
        if (!std::getline(in, row)) throw std::invalid_argument("grid2: missing rows");
        if (static_cast<int>(row.size()) < g.w) throw std::invalid_argument("grid2: short row");
        int y = g.y0 + g.h - 1 - r;  // screen orientation: top row first
        for (int x = 0; x < g.w; ++x) {
            char ch = row[x];
            if (ch != '#' && ch != '.') throw std::invalid_argument("grid2: bad cell char");
            g.bits[(y - g.y0) * g.w + x] = ch == '#';
        }
    }
    return g;
}

std::string grid2_emit(const Grid2& g) {
    std::ostringstream out;
    out << "GRID2 " << g.x0 << " " << g.y0 << " " << g.w << " " << g.h << "\n";
    for (int r = 0; r < g.h; ++r) {
        int y = g.y0 + g.h - 1 - r;
        for (int x = 0; x < g.w; ++x) out << (g.bits[(y - g.y0) * g.w + x] ? '#' : '.');
        out << "\n";
    }
    return out.str();
}

Grid2 grid2_of(const VertexSet& v) {
    if (v.dim() != 2) throw std::invalid_argument("grid2: dim 2 only");
    const Window& w = v.window();
    Grid2 g;
    g.x0 = w.lo[0] - 1;
    g.y0 = w.lo[1] - 1;
    g.w = w.side(0) + 2;
    g.h = w.side(1) + 2;
    g.bits.assign(static_cast<size_t>(g.w) * g.h, 0);
    w.for_each_dilated([&](const Point& p) {
        g.bits[(p[1] - g.y0) * g.w + (p[0] - g.x0)] = v.contains_indexed(p) ? 1 : 0;
    });
    return g;
}

VertexSet vertexset_of_grid(const Grid2& g) {
    if (g.w < 3 || g.h < 3)
        throw std::invalid_argument("grid2: box too small to carry a window closure");
    Window w(Point{g.x0 + 1, g.y0 + 1}, Point{g.x0 + g.w - 2, g.y0 + g.h - 2});
    VertexSet v = VertexSet::empty(w);
    w.for_each_dilated([&](const Point& p) {
        v.set(p, g.bits[(p[1] - g.y0) * g.w + (p[0] - g.x0)] != 0);
    });
    return v;
}

}  // namespace latmin
