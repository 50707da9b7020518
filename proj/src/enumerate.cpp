#include "latmin/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <queue>

#include "latmin/currents.hpp"

namespace latmin {

namespace {

struct Sweep {
    Window win;
    std::vector<Point> cells;            // closure cells, lex order
    std::vector<int> closure_id;         // dilated index -> closure id (-1 outside)
    std::vector<std::array<int, 4>> nbr; // closure ids of the 4 neighbors (-1 outside closure)
    std::vector<int> finalize_at;        // closure id finalized after assigning position i
    std::vector<uint8_t> in_window;
    std::vector<Edge> edges;             // E_U canonical
    std::vector<std::pair<int, int>> edge_ids;

    std::vector<int8_t> assign;
    EnumerationResult res;
    long long budget;

    explicit Sweep(int r, long long node_budget) : win(Window::ball(Point{0, 0}, r)) {
        budget = node_budget;
        res.radius = r;
        closure_id.assign(win.dilated_volume(), -1);
        win.for_each_dilated([&](const Point& p) {
            if (!win.contains_closure(p)) return;
            closure_id[win.index(p)] = static_cast<int>(cells.size());
            cells.push_back(p);
        });
        for (const auto& p : cells) {
            std::array<int, 4> ns{-1, -1, -1, -1};
            int k = 0;
            for (const auto& q : neighbors(p))
                ns[k++] = win.contains_closure(q) ? closure_id[win.index(q)] : -1;
            nbr.push_back(ns);
            in_window.push_back(win.contains(p) ? 1 : 0);
        }
        // Assigning (x, y) completes the neighborhood of the window cell (x-1, y).
        finalize_at.assign(cells.size(), -1);
        for (size_t i = 0; i < cells.size(); ++i) {
            Point p = cells[i].shifted(0, -1);
            if (win.contains(p)) finalize_at[i] = closure_id[win.index(p)];
        }
        edges = window_edges(win);
        for (const auto& e : edges)
            edge_ids.push_back({closure_id[win.index(e.a)], closure_id[win.index(e.other())]});
        assign.assign(cells.size(), -1);
    }

    bool interval_ok(int cid) const {
        int s = 0, f = 0;
        const int self = assign[cid];
        for (int nb : nbr[cid]) {
            int v = nb < 0 ? 0 : assign[nb];  // outside closure never adjacent to window cells
            if (v == self)
                ++f;
            else
                s += self ? 1 : -1;
        }
        return std::abs(s) <= f;
    }

    void leaf() {
        ++res.leaves_checked;
        std::vector<int8_t> forced(edges.size());
        for (size_t i = 0; i < edges.size(); ++i) {
            int a = assign[edge_ids[i].first], b = assign[edge_ids[i].second];
            forced[i] = static_cast<int8_t>(a == b ? 0 : (a ? 1 : -1));
        }
        if (!find_minimal_current_constrained(win, edges, std::move(forced))) return;
        ++res.survivors;
        classify_survivor();
    }

    void run() {
        dfs(0);
    }

    void dfs(size_t pos) {
        if (res.budget_exhausted) return;
        if (++res.nodes > budget) {
            res.budget_exhausted = true;
            return;
        }
        if (pos == cells.size()) {
            leaf();
            return;
        }
        for (int v = 0; v <= 1; ++v) {
            assign[pos] = static_cast<int8_t>(v);
            int fin = finalize_at[pos];
            if (fin < 0 || interval_ok(fin)) dfs(pos + 1);
        }
        assign[pos] = -1;
    }

    // --- survivor statistics ---

    int deg_in_k(int cid) const {
        int d = 0;
        for (int nb : nbr[cid])
            if (nb >= 0 && assign[nb] == 1) ++d;
        return d;
    }

    void classify_survivor() {
        local_form();
        if (has_isolated_geodesic_path3()) ++res.with_isolated_geodesic_path3;
        loop_stats();
    }

    void local_form() {
        const int center = closure_id[win.index(Point{0, 0})];
        if (assign[center] != 1) return;
        bool boundary = false;
        for (int nb : nbr[center])
            if (nb >= 0 && assign[nb] == 0) boundary = true;
        if (!boundary) return;
        // Connected component of the center within the 3x3 block.
        auto bit = [](int x, int y) { return (y + 1) * 3 + (x + 1); };
        uint16_t inmask = 0;
        for (int y = -1; y <= 1; ++y)
            for (int x = -1; x <= 1; ++x)
                if (assign[closure_id[win.index(Point{x, y})]] == 1)
                    inmask |= static_cast<uint16_t>(1u << bit(x, y));
        uint16_t comp = 1u << bit(0, 0);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int y = -1; y <= 1; ++y)
                for (int x = -1; x <= 1; ++x) {
                    int b = bit(x, y);
                    if (!(inmask & (1u << b)) || (comp & (1u << b))) continue;
                    const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
                    for (int k = 0; k < 4; ++k) {
                        int nx = x + dx[k], ny = y + dy[k];
                        if (nx < -1 || nx > 1 || ny < -1 || ny > 1) continue;
                        if (comp & (1u << bit(nx, ny))) {
                            comp |= 1u << b;
                            grew = true;
                        }
                    }
                }
        }
        res.local_forms.insert(canonical_local_form(comp));
    }

    bool has_isolated_geodesic_path3() {
        // Maximal chains of degree-2 window cells in K.
        std::vector<uint8_t> visited(cells.size(), 0);
        for (size_t i = 0; i < cells.size(); ++i) {
            if (visited[i] || !in_window[i] || assign[i] != 1 || deg_in_k(i) != 2) continue;
            // Walk the chain both ways.
            std::vector<int> chain{static_cast<int>(i)};
            visited[i] = 1;
            for (int dir = 0; dir < 2; ++dir) {
                int prev = static_cast<int>(i);
                int cur = -1;
                int picked = 0;
                for (int nb : nbr[prev])
                    if (nb >= 0 && assign[nb] == 1 && picked++ == dir) cur = nb;
                while (cur >= 0 && in_window[cur] && assign[cur] == 1 && deg_in_k(cur) == 2 &&
                       !visited[cur]) {
                    visited[cur] = 1;
                    if (dir == 0)
                        chain.push_back(cur);
                    else
                        chain.insert(chain.begin(), cur);
                    int nxt = -1;
                    for (int nb : nbr[cur])
                        if (nb >= 0 && assign[nb] == 1 && nb != prev) nxt = nb;
                    prev = cur;
                    cur = nxt;
                }
                // `cur` is the attachment endpoint on this side (may be τ or
                // higher-degree); record it for length/geodesy.
                if (cur >= 0 && assign[cur] == 1) {
                    if (dir == 0)
                        chain.push_back(cur);
                    else
                        chain.insert(chain.begin(), cur);
                }
            }
            // Internal degree-2 window cells between the attachments.
            int internal = 0;
            for (size_t k = 1; k + 1 < chain.size(); ++k)
                if (in_window[chain[k]] && deg_in_k(chain[k]) == 2) ++internal;
            if (internal < 2) continue;
            if (static_cast<int>(chain.size()) < 4) continue;
            // Geodesic test inside K over the closure.
            int src = chain.front(), dst = chain.back();
            std::vector<int> dist(cells.size(), -1);
            std::queue<int> q;
            q.push(src);
            dist[src] = 0;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int nb : nbr[v])
                    if (nb >= 0 && assign[nb] == 1 && dist[nb] < 0) {
                        dist[nb] = dist[v] + 1;
                        q.push(nb);
                    }
            }
            if (dist[dst] == static_cast<int>(chain.size()) - 1) return true;
        }
        return false;
    }

    void loop_stats() {
        // Boundary edges with both endpoints in the window.
        std::map<std::pair<int, int>, int> vid;  // closure id -> compact vertex id (unused pair)
        std::vector<int> parent;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::map<int, int> vmap;
        auto vertex = [&](int cid) {
            auto it = vmap.find(cid);
            if (it != vmap.end()) return it->second;
            int id = static_cast<int>(parent.size());
            parent.push_back(id);
            vmap.emplace(cid, id);
            return id;
        };
        auto is_boundary_edge = [&](const Edge& e) {
            int ia = closure_id[win.index(e.a)], ib = closure_id[win.index(e.other())];
            if (assign[ia] != 1 || assign[ib] != 1) return false;
            int squares = 0;
            int perp = 1 - e.axis;
            for (int side : {-1, +1}) {
                Point p = e.a.shifted(perp, side), q = e.other().shifted(perp, side);
                if (!win.contains_closure(p) || !win.contains_closure(q)) continue;
                if (assign[closure_id[win.index(p)]] == 1 &&
                    assign[closure_id[win.index(q)]] == 1)
                    ++squares;
            }
            return squares <= 1;
        };

        long long nedges = 0, merges = 0;
        std::vector<Edge> bedges;
        for (const auto& e : edges) {
            if (!win.contains(e.a) || !win.contains(e.other())) continue;
            if (!is_boundary_edge(e)) continue;
            bedges.push_back(e);
            ++nedges;
            int a = vertex(closure_id[win.index(e.a)]);
            int b = vertex(closure_id[win.index(e.other())]);
            int ra = find(a), rb = find(b);
            if (ra != rb) {
                parent[ra] = rb;
                ++merges;
            }
        }
        long long rank = nedges - merges;  // independent cycles
        if (rank == 0) return;
        // Unit-square loops.
        std::set<Edge> bset(bedges.begin(), bedges.end());
        long long squares = 0;
        win.for_each([&](const Point& p) {
            Edge bottom{p, 0}, left{p, 1};
            Edge top{p.shifted(1, 1), 0}, right{p.shifted(0, 1), 1};
            if (bset.count(bottom) && bset.count(left) && bset.count(top) && bset.count(right))
                ++squares;
        });
        if (squares > 0) ++res.with_square_loop;
        if (rank != squares) ++res.with_nonsquare_loop;
        (void)vid;
    }
};

}  // namespace

uint16_t canonical_local_form(uint16_t mask) {
    auto bit = [](int x, int y) { return (y + 1) * 3 + (x + 1); };
    uint16_t best = 0x1FF + 1;
    for (int g = 0; g < 8; ++g) {
        uint16_t m = 0;
        for (int y = -1; y <= 1; ++y)
            for (int x = -1; x <= 1; ++x) {
                if (!(mask & (1u << bit(x, y)))) continue;
                int tx = x, ty = y;
                switch (g & 3) {
                    case 1: {
                        int t = tx;
                        tx = -ty;
                        ty = t;
                        break;
                    }
                    case 2:
                        tx = -tx;
                        ty = -ty;
                        break;
                    case 3: {
                        int t = tx;
                        tx = ty;
                        ty = -t;
                        break;
                    }
                    default:
                        break;
                }
                if (g & 4) tx = -tx;
                m |= static_cast<uint16_t>(1u << bit(tx, ty));
            }
        best = std::min(best, m);
    }
    return best;
}

EnumerationResult enumerate_candidates(int r, long long node_budget) {
    if (r < 1 || r > 5) throw std::invalid_argument("enumerate: exhaustive regime is r in [1,5]");
    Sweep sweep(r, node_budget);
    sweep.run();
    return sweep.res;
}

}  // namespace latmin
