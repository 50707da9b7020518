#include "latmin/render.hpp"

#include <set>
#include <sstream>

#include "latmin/boundary.hpp"

namespace latmin {

std::string render_ascii(const Pattern& a, const Window& w) {
    if (w.dim() != 2) throw std::invalid_argument("render_ascii: dim 2 only");
    std::ostringstream out;
    for (int y = w.hi[1]; y >= w.lo[1]; --y) {
        for (int x = w.lo[0]; x <= w.hi[0]; ++x) out << (a.eval(Point{x, y}) ? '#' : '.');
        out << "\n";
    }
    return out.str();
}

namespace {

constexpr int kScale = 24;

double sx(const Window& w, double x) { return (x - w.lo[0] + 1) * kScale; }
double sy(const Window& w, double y) { return (w.hi[1] + 1 - y) * kScale; }

}  // namespace

std::string render_svg(const Pattern& a, const Window& w,
                       const std::optional<Current>& current) {
    if (w.dim() != 2) throw std::invalid_argument("render_svg: dim 2 only");
    const int width = (w.side(0) + 2) * kScale;
    const int height = (w.side(1) + 2) * kScale;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Unit squares of the realization.
    w.for_each([&](const Point& p) {
        bool full = a.eval(p) && a.eval(p.shifted(0, 1)) && a.eval(p.shifted(1, 1)) &&
                    a.eval(p.shifted(0, 1).shifted(1, 1));
        if (full)
            out << "<rect x=\"" << sx(w, p[0]) << "\" y=\"" << sy(w, p[1] + 1) << "\" width=\""
                << kScale << "\" height=\"" << kScale << "\" fill=\"#d8e6f3\"/>\n";
    });

    // Induced edges; boundary edges bold.
    BoundaryAnalysis ba = classify_boundary(a, w);
    std::set<Edge> bold(ba.boundary_edges.begin(), ba.boundary_edges.end());
    w.for_each([&](const Point& p) {
        if (!a.eval(p)) return;
        for (int ax = 0; ax < 2; ++ax) {
            Point q = p.shifted(ax, 1);
            if (!w.contains(q) || !a.eval(q)) continue;
            bool is_bold = bold.count(Edge{p, ax}) > 0;
            out << "<line x1=\"" << sx(w, p[0]) << "\" y1=\"" << sy(w, p[1]) << "\" x2=\""
                << sx(w, q[0]) << "\" y2=\"" << sy(w, q[1]) << "\" stroke=\""
                << (is_bold ? "#000000" : "#8ca6bf") << "\" stroke-width=\""
                << (is_bold ? 3 : 1) << "\"/>\n";
        }
    });

    // Vertices.
    w.for_each([&](const Point& p) {
        if (a.eval(p))
            out << "<circle cx=\"" << sx(w, p[0]) << "\" cy=\"" << sy(w, p[1])
                << "\" r=\"3\" fill=\"#1f3a54\"/>\n";
    });

    // Current arrows (drawn black, midway along each nonzero edge).
    if (current) {
        for (size_t i = 0; i < current->edges.size(); ++i) {
            int v = current->values[i];
            if (v == 0) continue;
            const Edge& e = current->edges[i];
            Point from = e.a, to = e.other();
            if (v < 0) std::swap(from, to);
            double x1 = sx(w, from[0]), y1 = sy(w, from[1]);
            double x2 = sx(w, to[0]), y2 = sy(w, to[1]);
            double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
            double dx = (x2 - x1) / kScale, dy = (y2 - y1) / kScale;
            double ax = mx + dx * 6, ay = my + dy * 6;
            double bx = mx - dx * 6, by = my - dy * 6;
            double px = -dy * 4, py = dx * 4;
            out << "<line x1=\"" << bx << "\" y1=\"" << by << "\" x2=\"" << ax << "\" y2=\"" << ay
                << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            out << "<polygon points=\"" << ax << "," << ay << " " << (ax - dx * 4 + px) << ","
                << (ay - dy * 4 + py) << " " << (ax - dx * 4 - px) << "," << (ay - dy * 4 - py)
                << "\" fill=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace latmin
