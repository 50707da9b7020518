#include "latmin/energy.hpp"

#include <algorithm>
#include <sstream>

namespace latmin {

namespace {

Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

void require_total(const VertexFunction& f, const Window& u) {
    if (!u.dim()) throw std::invalid_argument("energy: empty window");
    if (f.window().dim() != u.dim())
        throw std::invalid_argument("energy: dimension mismatch");
    u.for_each_dilated([&](const Point& p) {
        if (u.contains_closure(p) && !f.is_defined(p))
            throw std::runtime_error("energy: f is not total on the window closure");
    });
}

}  // namespace

Rat dirichlet_energy(const VertexFunction& f, const Window& u) {
    require_total(f, u);
    Rat sum(0);
    for (const auto& e : window_edges(u)) sum += rat_abs(f.at(e.other()) - f.at(e.a));
    return sum;
}

long long perimeter(const VertexSet& k, const Window& u) {
    return cut_edge_count(k, u);
}

VertexSet superlevel(const VertexFunction& f, const Rat& t) {
    const Window& w = f.window();
    VertexSet out = VertexSet::empty(w);
    w.for_each_dilated([&](const Point& p) {
        if (f.is_defined(p) && f.at(p) > t) out.set(p, true);
    });
    return out;
}

CoareaResult coarea_check(const VertexFunction& f, const Window& u) {
    CoareaResult r;
    r.lhs = dirichlet_energy(f, u);

    std::vector<Rat> values;
    u.for_each_dilated([&](const Point& p) {
        if (u.contains_closure(p)) values.push_back(f.at(p));
    });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    r.rhs = Rat(0);
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        VertexSet level = superlevel(f, values[i]);
        r.rhs += (values[i + 1] - values[i]) * Rat(perimeter(level, u));
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

std::string func2_emit(const VertexFunction& f) {
    if (f.window().dim() != 2) throw std::invalid_argument("func2: dim 2 only");
    const Window& w = f.window();
    int x0 = w.lo[0] - 1, y0 = w.lo[1] - 1;
    int gw = w.side(0) + 2, gh = w.side(1) + 2;
    std::ostringstream out;
    out << "FUNC2 " << x0 << " " << y0 << " " << gw << " " << gh << "\n";
    for (int r = 0; r < gh; ++r) {
        int y = y0 + gh - 1 - r;
        for (int x = 0; x < gw; ++x) {
            if (x) out << " ";
            Point p{x0 + x, y};
            out << (f.is_defined(p) ? rat_str(f.at(p)) : "0");
        }
        out << "\n";
    }
    return out.str();
}

VertexFunction func2_parse(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int x0, y0, gw, gh;
    if (!(in >> magic >> x0 >> y0 >> gw >> gh) || magic != "FUNC2")
        throw std::invalid_argument("func2: bad header");
    if (gw < 3 || gh < 3) throw std::invalid_argument("func2: box too small");
    Window w(Point{x0 + 1, y0 + 1}, Point{x0 + gw - 2, y0 + gh - 2});
    VertexFunction f(w);
    for (int r = 0; r < gh; ++r) {
        int y = y0 + gh - 1 - r;
        for (int x = 0; x < gw; ++x) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("func2: missing values");
            f.set(Point{x0 + x, y}, rat_parse(tok));
        }
    }
    return f;
}

}  // namespace latmin
