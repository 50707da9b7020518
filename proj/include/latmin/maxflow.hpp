#pragma once

#include <cstdint>
#include <vector>

namespace latmin {

/// Dinic max-flow: BFS level graphs + blocking flows via DFS with arc
/// pointers. Deterministic for a fixed arc insertion order, which the callers
/// guarantee by building arcs in canonical edge order.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    int add_node() {
        head_.push_back(-1);
        level_.push_back(0);
        it_.push_back(0);
        return static_cast<int>(head_.size()) - 1;
    }
    int num_nodes() const { return static_cast<int>(head_.size()); }

    /// Adds arc a->b with capacity c and its reverse with capacity rcap.
    /// Returns the arc id; the reverse is id^1.
    int add_edge(int a, int b, long long c, long long rcap = 0) {
        int id = static_cast<int>(arcs_.size());
        arcs_.push_back({b, head_[a], c});
        head_[a] = id;
        arcs_.push_back({a, head_[b], rcap});
        head_[b] = id + 1;
        return id;
    }

    long long flow_on(int arc_id) const {
        // flow pushed = residual gained by the reverse arc
        return arcs_[arc_id ^ 1].cap - original_rcap_of(arc_id);
    }
    long long residual(int arc_id) const { return arcs_[arc_id].cap; }

    long long max_flow(int s, int t);

    /// Nodes reachable from s in the final residual graph (the canonical
    /// minimal source side of a min cut). Valid after max_flow.
    std::vector<uint8_t> min_cut_side(int s) const;

private:
    struct Arc {
        int to;
        int next;
        long long cap;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_, it_;
    std::vector<long long> orig_rcap_;

    long long original_rcap_of(int arc_id) const { return orig_rcap_[arc_id ^ 1]; }
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long f);

    friend class MaxFlowBuilderAccess;

public:
    /// Must be called once after all add_edge calls, before max_flow.
    void freeze() {
        orig_rcap_.resize(arcs_.size());
        for (size_t i = 0; i < arcs_.size(); ++i) orig_rcap_[i] = arcs_[i].cap;
    }
};

}  // namespace latmin
