#include "latmin/mincut.hpp"

#include <stdexcept>

#include "latmin/energy.hpp"
#include "latmin/maxflow.hpp"

namespace latmin {

namespace {

// Compact node ids for the closure cells of u, in lexicographic order.
struct NodeMap {
    Window w;
    std::vector<int> ids;  // indexed by dilated-box index, -1 outside closure
    std::vector<Point> points;

    explicit NodeMap(const Window& win) : w(win), ids(win.dilated_volume(), -1) {
        w.for_each_dilated([&](const Point& p) {
            if (!w.contains_closure(p)) return;
            ids[w.index(p)] = static_cast<int>(points.size());
            points.push_back(p);
        });
    }
    int at(const Point& p) const { return ids[w.index(p)]; }
};

}  // namespace

LeastPerimeterResult least_perimeter_solve(const Window& u, const VertexSet& trace) {
    NodeMap nm(u);
    const int n = static_cast<int>(nm.points.size());
    MaxFlow net(n + 2);
    const int s = n, t = n + 1;
    const long long inf = 4LL * u.dim() * u.volume() + 1;

    for (const auto& e : window_edges(u))
        net.add_edge(nm.at(e.a), nm.at(e.other()), 1, 1);
    u.for_each_tau([&](const Point& z) {
        if (trace.contains(z))
            net.add_edge(s, nm.at(z), inf, 0);
        else
            net.add_edge(nm.at(z), t, inf, 0);
    });
    net.freeze();

    LeastPerimeterResult res{VertexSet::empty(u), net.max_flow(s, t)};
    auto side = net.min_cut_side(s);
    u.for_each_dilated([&](const Point& p) {
        if (u.contains_closure(p) && side[nm.at(p)]) res.k_opt.set(p, true);
    });
    return res;
}

BruteForceResult brute_force_least_perimeter(const Window& u, const VertexSet& trace) {
    const long long cells = u.volume();
    if (cells > 25) throw std::invalid_argument("brute force: window larger than 25 cells");

    // Closure layout: window cells get mask bits; τ cells carry fixed values.
    std::vector<Point> wcells = u.cells();
    std::vector<int> bit_of(u.dilated_volume(), -1);
    for (size_t i = 0; i < wcells.size(); ++i) bit_of[u.index(wcells[i])] = static_cast<int>(i);

    struct EdgeRef {
        int i, j;     // window-cell bit indices; j = -1 for a τ endpoint
        int fixed;    // τ endpoint value when j = -1
    };
    std::vector<EdgeRef> erefs;
    for (const auto& e : window_edges(u)) {
        Point a = e.a, b = e.other();
        int ia = u.contains(a) ? bit_of[u.index(a)] : -1;
        int ib = u.contains(b) ? bit_of[u.index(b)] : -1;
        if (ia >= 0 && ib >= 0)
            erefs.push_back({ia, ib, 0});
        else if (ia >= 0)
            erefs.push_back({ia, -1, trace.contains(b) ? 1 : 0});
        else
            erefs.push_back({ib, -1, trace.contains(a) ? 1 : 0});
    }

    BruteForceResult out{-1, {}};
    std::vector<uint32_t> best_masks;
    for (uint32_t mask = 0; mask < (1u << cells); ++mask) {
        long long per = 0;
        for (const auto& e : erefs) {
            int bi = (mask >> e.i) & 1;
            int bj = e.j >= 0 ? (mask >> e.j) & 1 : e.fixed;
            per += bi ^ bj;
        }
        if (out.value < 0 || per < out.value) {
            out.value = per;
            best_masks.clear();
        }
        if (per == out.value) best_masks.push_back(mask);
    }
    for (uint32_t mask : best_masks) {
        VertexSet k = VertexSet::empty(u);
        u.for_each_tau([&](const Point& z) { k.set(z, trace.contains(z)); });
        for (size_t i = 0; i < wcells.size(); ++i)
            if ((mask >> i) & 1) k.set(wcells[i], true);
        out.optima.push_back(std::move(k));
    }
    return out;
}

bool is_least_perimeter(const VertexSet& k, const Window& u) {
    return perimeter(k, u) == least_perimeter_solve(u, k).value;
}

}  // namespace latmin
