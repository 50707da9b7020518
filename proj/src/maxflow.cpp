#include "latmin/maxflow.hpp"

#include <limits>

namespace latmin {

bool MaxFlow::bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> q;
    q.reserve(head_.size());
    q.push_back(s);
    level_[s] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int v = q[qi];
        for (int id = head_[v]; id != -1; id = arcs_[id].next) {
            if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
                level_[arcs_[id].to] = level_[v] + 1;
                q.push_back(arcs_[id].to);
            }
        }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long f) {
    if (v == t || f == 0) return f;
    for (int& id = it_[v]; id != -1; id = arcs_[id].next) {
        Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
            long long pushed = dfs(a.to, t, std::min(f, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                arcs_[id ^ 1].cap += pushed;
                return pushed;
            }
        }
    }
    return 0;
}

long long MaxFlow::max_flow(int s, int t) {
    if (orig_rcap_.size() != arcs_.size()) freeze();
    long long flow = 0;
    const long long inf = std::numeric_limits<long long>::max();
    while (bfs(s, t)) {
        for (size_t i = 0; i < it_.size(); ++i) it_[i] = head_[i];
        while (long long p = dfs(s, t, inf)) flow += p;
    }
    return flow;
}

std::vector<uint8_t> MaxFlow::min_cut_side(int s) const {
    std::vector<uint8_t> side(head_.size(), 0);
    std::vector<int> q;
    q.push_back(s);
    side[s] = 1;
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int v = q[qi];
        for (int id = head_[v]; id != -1; id = arcs_[id].next) {
            if (arcs_[id].cap > 0 && !side[arcs_[id].to]) {
                side[arcs_[id].to] = 1;
                q.push_back(arcs_[id].to);
            }
        }
    }
    return side;
}

}  // namespace latmin
