#include "latmin/boundary.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace latmin {

namespace {

// BFS distances from src inside the given vertex set (lattice adjacency).
std::map<Point, int> bfs_distances(const std::set<Point>& cells, const Point& src) {
    std::map<Point, int> dist;
    dist[src] = 0;
    std::queue<Point> q;
    q.push(src);
    while (!q.empty()) {
        Point p = q.front();
        q.pop();
        for (const auto& nb : neighbors(p)) {
            if (!cells.count(nb) || dist.count(nb)) continue;
            dist[nb] = dist[p] + 1;
            q.push(nb);
        }
    }
    return dist;
}

// All 2^(n-1) unit squares of X(A) containing a given induced edge: spanned
// by the edge axis and one perpendicular axis, on either side.
int squares_containing(const Pattern& a, const Edge& e) {
    int count = 0;
    for (int ax = 0; ax < e.a.dim; ++ax) {
        if (ax == e.axis) continue;
        for (int side : {-1, +1}) {
            Point p = e.a.shifted(ax, side);
            Point q = e.other().shifted(ax, side);
            if (a.eval(p) && a.eval(q)) ++count;
        }
    }
    return count;
}

}  // namespace

BoundaryAnalysis classify_boundary(const Pattern& a, const Window& w) {
    BoundaryAnalysis out;
    out.window = w;
    out.delta = pattern_vertex_boundary(a, w);
    std::set<Point> delta_set(out.delta.begin(), out.delta.end());

    // δ-degrees and the simple flag.
    out.delta_degree.reserve(out.delta.size());
    for (const auto& p : out.delta) {
        int d = 0;
        for (const auto& nb : neighbors(p))
            if (delta_set.count(nb)) ++d;
        out.delta_degree.push_back(d);
        if (d > 2) out.simple = false;
    }

    // Boundary edges of the geometric realization, both endpoints in W.
    w.for_each([&](const Point& p) {
        if (!a.eval(p)) return;
        for (int ax = 0; ax < w.dim(); ++ax) {
            Point q = p.shifted(ax, +1);
            if (!w.contains(q) || !a.eval(q)) continue;
            Edge e{p, ax};
            if (squares_containing(a, e) <= 1) out.boundary_edges.push_back(e);
        }
    });

    // Curve structure: incidence of boundary edges per vertex.
    std::map<Point, std::vector<Edge>> incident;
    for (const auto& e : out.boundary_edges) {
        incident[e.a].push_back(e);
        incident[e.other()].push_back(e);
    }
    for (const auto& [p, es] : incident) {
        if (es.size() == 2 && es[0].axis != es[1].axis) out.corners.push_back(p);
        // T-junctions in the window interior break the simple-curve form.
        bool interior = true;
        for (int i = 0; i < w.dim(); ++i)
            if (p[i] == w.lo[i] || p[i] == w.hi[i]) interior = false;
        if (interior && es.size() != 2) out.oriented = false;
    }

    // Cycle rank per curve component, and unit-square loops.
    {
        std::map<Point, int> comp;
        int ncomp = 0;
        for (const auto& [p, es] : incident) {
            if (comp.count(p)) continue;
            std::queue<Point> q;
            q.push(p);
            comp[p] = ncomp;
            while (!q.empty()) {
                Point v = q.front();
                q.pop();
                for (const auto& e : incident[v]) {
                    for (const Point& u : {e.a, e.other()}) {
                        if (!comp.count(u)) {
                            comp[u] = ncomp;
                            q.push(u);
                        }
                    }
                }
            }
            ++ncomp;
        }
        std::vector<int> verts(ncomp, 0), edges(ncomp, 0), loops(ncomp, 0);
        for (const auto& [p, es] : incident) ++verts[comp[p]];
        for (const auto& e : out.boundary_edges) ++edges[comp[e.a]];
        for (int c = 0; c < ncomp; ++c) out.cycle_rank += std::max(0, edges[c] - verts[c] + 1);

        if (w.dim() == 2) {
            std::set<Edge> bset(out.boundary_edges.begin(), out.boundary_edges.end());
            w.for_each([&](const Point& p) {
                Edge bottom{p, 0}, left{p, 1};
                Edge top{p.shifted(1, 1), 0}, right{p.shifted(0, 1), 1};
                if (bset.count(bottom) && bset.count(left) && bset.count(top) &&
                    bset.count(right)) {
                    out.loop_cells.push_back(p);
                    ++loops[comp[p]];
                }
            });
        }
        long long square_loops = static_cast<long long>(out.loop_cells.size());
        out.all_loops_unit_squares = out.cycle_rank == square_loops;
        for (int c = 0; c < ncomp; ++c) out.max_loops_per_component =
            std::max(out.max_loops_per_component, loops[c]);
    }

    // Maximal flat runs of δ-vertices along each axis.
    for (int ax = 0; ax < w.dim(); ++ax) {
        for (const auto& p : out.delta) {
            if (delta_set.count(p.shifted(ax, -1))) continue;  // not a run start
            int len = 1;
            Point q = p;
            while (delta_set.count(q.shifted(ax, +1))) {
                q = q.shifted(ax, +1);
                ++len;
            }
            if (len >= 2) out.flat_runs.push_back({p, ax, len});
        }
    }

    // Geodesic flag: compare δ-internal distances with A-internal distances,
    // both within the window.
    {
        std::set<Point> acells;
        w.for_each([&](const Point& p) {
            if (a.eval(p)) acells.insert(p);
        });
        for (const auto& src : out.delta) {
            if (!out.geodesic) break;
            auto din = bfs_distances(delta_set, src);
            auto dfull = bfs_distances(acells, src);
            for (const auto& dst : out.delta) {
                auto it = din.find(dst);
                auto jt = dfull.find(dst);
                int d1 = it == din.end() ? -1 : it->second;    // -1 = unreachable
                int d2 = jt == dfull.end() ? -1 : jt->second;
                if (d1 != d2) {
                    out.geodesic = false;
                    break;
                }
            }
        }
    }
    return out;
}

Point dihedral_apply(int g, const Point& p) {
    int x = p[0], y = p[1];
    switch (g & 3) {  // rotations
        case 1: {
            int t = x;
            x = -y;
            y = t;
            break;
        }
        case 2:
            x = -x;
            y = -y;
            break;
        case 3: {
            int t = x;
            x = y;
            y = -t;
            break;
        }
        default:
            break;
    }
    if (g & 4) x = -x;  // reflection
    Point q = p;
    q[0] = x;
    q[1] = y;
    return q;
}

bool are_isomorphic(const Pattern& a, const Pattern& b, const Window& w) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("are_isomorphic: dim 2 only");
    std::vector<Point> sa, sb;
    w.for_each([&](const Point& p) {
        if (a.eval(p)) sa.push_back(p);
        if (b.eval(p)) sb.push_back(p);
    });
    if (sa.size() != sb.size()) return false;
    if (sa.empty()) return true;
    std::sort(sb.begin(), sb.end());
    const int diam = w.diameter();

    for (int g = 0; g < 8; ++g) {
        std::vector<Point> ta;
        ta.reserve(sa.size());
        for (const auto& p : sa) ta.push_back(dihedral_apply(g, p));
        std::sort(ta.begin(), ta.end());
        // The lex-min points must correspond, so one offset candidate per g.
        Point t = sb.front() - ta.front();
        if (std::abs(t[0]) > diam || std::abs(t[1]) > diam) continue;
        bool match = true;
        for (size_t i = 0; i < ta.size() && match; ++i) match = (ta[i] + t) == sb[i];
        if (match) return true;
    }
    return false;
}

}  // namespace latmin
