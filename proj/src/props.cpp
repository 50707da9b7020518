#include "latmin/props.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "latmin/boundary.hpp"

namespace latmin {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string PropertyReport::line(const std::string& pattern_name) const {
    std::ostringstream out;
    out << "PROP " << property << " " << pattern_name << " " << verdict_str(verdict);
    if (!witness.empty()) out << " witness=" << witness;
    if (!surrogate.empty()) out << " surrogate=\"" << surrogate << "\"";
    return out.str();
}

PropertyReport check_min_degree(const Pattern& a, const Window& w) {
    PropertyReport rep;
    rep.property = "min-degree";
    rep.surrogate = "degrees of A-vertices inside the window, oracle neighbors";
    const int n = a.dim();
    rep.verdict = Verdict::Holds;
    w.for_each([&](const Point& p) {
        if (rep.verdict == Verdict::Violated || !a.eval(p)) return;
        int d = pattern_degree(a, p);
        if (d < n) {
            rep.verdict = Verdict::Violated;
            rep.witness = "deg" + p.str() + "=" + std::to_string(d);
            return;
        }
        if (d == n) {
            for (const auto& q : neighbors(p)) {
                if (a.eval(q) && pattern_degree(a, q) == n) {
                    rep.verdict = Verdict::Violated;
                    rep.witness = "adjacent-pair-deg-n:" + p.str() + q.str();
                    return;
                }
            }
        }
    });
    return rep;
}

PropertyReport check_convexity(const Pattern& a, const Window& w) {
    PropertyReport rep;
    rep.property = "axis-convexity";
    rep.surrogate = "components and segments taken inside the window";
    if (a.dim() != 2) {
        rep.verdict = Verdict::NotApplicable;
        rep.witness = "dim!=2";
        return rep;
    }
    // Components of A ∩ W.
    std::map<Point, int> comp;
    int ncomp = 0;
    w.for_each([&](const Point& p) {
        if (!a.eval(p) || comp.count(p)) return;
        std::queue<Point> q;
        q.push(p);
        comp[p] = ncomp;
        while (!q.empty()) {
            Point v = q.front();
            q.pop();
            for (const auto& nb : neighbors(v))
                if (w.contains(nb) && a.eval(nb) && !comp.count(nb)) {
                    comp[nb] = ncomp;
                    q.push(nb);
                }
        }
        ++ncomp;
    });
    rep.verdict = Verdict::Holds;
    for (int axis = 0; axis < 2 && rep.verdict == Verdict::Holds; ++axis) {
        int other = 1 - axis;
        for (int line = w.lo[other]; line <= w.hi[other]; ++line) {
            // Cells of each component on this line must be contiguous.
            std::map<int, std::pair<int, int>> span;  // comp -> [min,max] along axis
            for (int t = w.lo[axis]; t <= w.hi[axis]; ++t) {
                Point p;
                p.dim = 2;
                p[axis] = t;
                p[other] = line;
                auto it = comp.find(p);
                if (it == comp.end()) continue;
                auto [s, e] = span.count(it->second) ? span[it->second]
                                                    : std::pair<int, int>{t, t};
                span[it->second] = {std::min(s, t), std::max(e, t)};
            }
            for (const auto& [c, se] : span) {
                for (int t = se.first; t <= se.second; ++t) {
                    Point p;
                    p.dim = 2;
                    p[axis] = t;
                    p[other] = line;
                    auto it = comp.find(p);
                    if (it == comp.end() || it->second != c) {
                        rep.verdict = Verdict::Violated;
                        rep.witness = "gap" + p.str() + "axis" + std::to_string(axis);
                        break;
                    }
                }
                if (rep.verdict == Verdict::Violated) break;
            }
            if (rep.verdict == Verdict::Violated) break;
        }
    }
    return rep;
}

PropertyReport check_no_parallel_rays(const Pattern& a, const Window& w) {
    PropertyReport rep;
    rep.property = "no-parallel-rays";
    rep.verdict = Verdict::Holds;
    BoundaryAnalysis ba = classify_boundary(a, w);
    for (int axis = 0; axis < w.dim(); ++axis) {
        const int need = w.side(axis) - 2;
        std::ostringstream surr;
        surr << "flat boundary runs of length >= " << need << " spanning the window";
        rep.surrogate = surr.str();
        std::vector<const FlatRun*> long_runs;
        for (const auto& run : ba.flat_runs)
            if (run.axis == axis && run.length >= need) long_runs.push_back(&run);
        // Two such runs on different lines are the desk-scale ray pair.
        for (size_t i = 0; i < long_runs.size(); ++i)
            for (size_t j = i + 1; j < long_runs.size(); ++j) {
                bool same_line = true;
                for (int k = 0; k < w.dim(); ++k)
                    if (k != axis && long_runs[i]->start[k] != long_runs[j]->start[k])
                        same_line = false;
                if (!same_line) {
                    rep.verdict = Verdict::Violated;
                    rep.witness = "runs" + long_runs[i]->start.str() + long_runs[j]->start.str() +
                                  "axis" + std::to_string(axis);
                    return rep;
                }
            }
    }
    return rep;
}

namespace {

Point unproject(const Point& hat, int axis, int value) {
    Point p;
    p.dim = hat.dim + 1;
    int j = 0;
    for (int i = 0; i < p.dim; ++i) p[i] = (i == axis) ? value : hat[j++];
    return p;
}

struct Column {
    bool empty = true;
    bool bounded_above = true, bounded_below = true;
    int hi = 0, lo = 0;
};

Column column_extrema(const Pattern& a, int axis, const Point& hat, const Window& w) {
    Column c;
    for (int v = w.lo[axis]; v <= w.hi[axis]; ++v) {
        if (!a.eval(unproject(hat, axis, v))) continue;
        if (c.empty) {
            c.empty = false;
            c.lo = c.hi = v;
        } else {
            c.lo = std::min(c.lo, v);
            c.hi = std::max(c.hi, v);
        }
    }
    if (!c.empty) {
        if (c.hi == w.hi[axis]) c.bounded_above = false;
        if (c.lo == w.lo[axis]) c.bounded_below = false;
    }
    return c;
}

// Every point of Ω₁ lies in a unit (n-1)-cube of Ω₁.
bool realization_closed(const std::vector<Point>& omega1) {
    if (omega1.empty()) return false;
    std::set<Point> s(omega1.begin(), omega1.end());
    const int m = omega1[0].dim;
    for (const auto& p : s) {
        bool in_cube = false;
        for (int pos = 0; pos < (1 << m) && !in_cube; ++pos) {
            Point base = p;
            for (int i = 0; i < m; ++i)
                if (pos & (1 << i)) base[i] -= 1;
            bool full = true;
            for (int corner = 0; corner < (1 << m) && full; ++corner) {
                Point q = base;
                for (int i = 0; i < m; ++i)
                    if (corner & (1 << i)) q[i] += 1;
                full = s.count(q) != 0;
            }
            in_cube = full;
        }
        if (!in_cube) return false;
    }
    return true;
}

}  // namespace

PropertyReport check_max_principle(const Pattern& a, int axis,
                                   const std::vector<Point>& omega1, const Window& w) {
    PropertyReport rep;
    rep.property = "max-principle";
    rep.surrogate = "column extrema measured inside the window; columns touching the "
                    "window face are treated as unbounded";
    if (axis < 0 || axis >= a.dim()) throw std::invalid_argument("max principle: bad axis");
    if (omega1.empty() || omega1[0].dim != a.dim() - 1) {
        rep.verdict = Verdict::NotApplicable;
        rep.witness = "omega1-dim";
        return rep;
    }
    if (!realization_closed(omega1)) {
        rep.verdict = Verdict::NotApplicable;
        rep.witness = "realization-not-closed-domain";
        return rep;
    }
    std::set<Point> o1(omega1.begin(), omega1.end());
    std::set<Point> ring;  // Ω₂ − Ω₁
    for (const auto& p : omega1)
        for (const auto& nb : neighbors(p))
            if (!o1.count(nb)) ring.insert(nb);

    bool have_h1 = false, have_h2 = false;
    int h_in = 0, h_ring = 0, l_in = 0, l_ring = 0;
    bool first_in = true, first_ring = true;
    for (const auto& hat : o1) {
        Column c = column_extrema(a, axis, hat, w);
        if (c.empty) {
            rep.verdict = Verdict::NotApplicable;
            rep.witness = "omega1-column-outside-projection";
            return rep;
        }
        if (!c.bounded_above) have_h1 = true;
        if (!c.bounded_below) have_h2 = true;
        if (first_in) {
            h_in = c.hi;
            l_in = c.lo;
            first_in = false;
        } else {
            h_in = std::max(h_in, c.hi);
            l_in = std::min(l_in, c.lo);
        }
    }
    for (const auto& hat : ring) {
        Column c = column_extrema(a, axis, hat, w);
        if (c.empty) {
            rep.verdict = Verdict::NotApplicable;
            rep.witness = "ring-column-outside-projection";
            return rep;
        }
        if (!c.bounded_above) have_h1 = true;
        if (!c.bounded_below) have_h2 = true;
        if (first_ring) {
            h_ring = c.hi;
            l_ring = c.lo;
            first_ring = false;
        } else {
            h_ring = std::max(h_ring, c.hi);
            l_ring = std::min(l_ring, c.lo);
        }
    }
    if (have_h1 && have_h2) {
        rep.verdict = Verdict::NotApplicable;
        rep.witness = "all-columns-unbounded";
        return rep;
    }
    // Strict interior maximum (or minimum) contradicts minimality.
    if (!have_h1 && h_ring < h_in) {
        rep.verdict = Verdict::Violated;
        rep.witness = "interior-max=" + std::to_string(h_in) + ">ring=" + std::to_string(h_ring);
        return rep;
    }
    if (!have_h2 && l_ring > l_in) {
        rep.verdict = Verdict::Violated;
        rep.witness = "interior-min=" + std::to_string(l_in) + "<ring=" + std::to_string(l_ring);
        return rep;
    }
    rep.verdict = Verdict::Holds;
    return rep;
}

std::vector<Point> random_admissible_omega1(const Pattern& a, int axis, const Window& w,
                                            std::mt19937& rng) {
    const int m = a.dim() - 1;
    for (int attempt = 0; attempt < 200; ++attempt) {
        // Random small box in the projection.
        Point lo, hi;
        lo.dim = hi.dim = m;
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            int wi = (i == axis) ? 0 : i + (i >= axis ? 1 : 0);
            int span = w.hi[wi] - 2 - (w.lo[wi] + 2);
            if (span < 1) return {};
            std::uniform_int_distribution<int> pos(w.lo[wi] + 2, w.hi[wi] - 2);
            std::uniform_int_distribution<int> len(1, 3);
            int s = pos(rng), l = len(rng);
            lo[i] = s;
            hi[i] = std::min(s + l, w.hi[wi] - 2);
            if (lo[i] > hi[i]) ok = false;
        }
        if (!ok) continue;
        std::vector<Point> pts;
        Window box(lo, hi);
        box.for_each([&](const Point& p) { pts.push_back(p); });
        if (!realization_closed(pts)) continue;
        // All columns of Ω₂ must meet A and stay bounded in W.
        std::set<Point> o1(pts.begin(), pts.end());
        std::set<Point> all(pts.begin(), pts.end());
        for (const auto& p : pts)
            for (const auto& nb : neighbors(p)) all.insert(nb);
        bool admissible = true;
        bool some_bounded = false;
        for (const auto& hat : all) {
            Column c = column_extrema(a, axis, hat, w);
            if (c.empty) {
                admissible = false;
                break;
            }
            if (c.bounded_above || c.bounded_below) some_bounded = true;
        }
        if (admissible && some_bounded) return pts;
    }
    return {};
}

PropertyReport check_slab_refutation(const Pattern& a, const Point& center, int r_budget) {
    PropertyReport rep;
    rep.property = "slab-refutation";
    rep.surrogate = "slab-boundedness probed on B_(budget+2) and B_(budget+4)";
    // Detect an axis whose extent stops growing between two probe windows.
    int slab_axis = -1;
    for (int axis = 0; axis < a.dim() && slab_axis < 0; ++axis) {
        int extent[2];
        for (int k = 0; k < 2; ++k) {
            Window w = Window::ball(center, r_budget + 2 + 2 * k);
            int mn = 0, mx = 0;
            bool seen = false;
            w.for_each([&](const Point& p) {
                if (!a.eval(p)) return;
                if (!seen) {
                    mn = mx = p[axis];
                    seen = true;
                } else {
                    mn = std::min(mn, p[axis]);
                    mx = std::max(mx, p[axis]);
                }
            });
            extent[k] = seen ? mx - mn : -1;
        }
        if (extent[0] >= 0 && extent[0] == extent[1] &&
            extent[0] < 2 * (r_budget + 2))
            slab_axis = axis;
    }
    if (slab_axis < 0) {
        rep.verdict = Verdict::NotApplicable;
        rep.witness = "not-slab-bounded";
        return rep;
    }
    auto report = certify_up_to_radius(a, center, r_budget, "slab");
    if (report.refuted) {
        rep.verdict = Verdict::Holds;
        rep.witness = "refuted-at-r=" + std::to_string(report.refuted_at);
    } else {
        rep.verdict = Verdict::Violated;
        rep.witness = "no-refutation-within-budget";
    }
    return rep;
}

GrowthReport growth_report(const Pattern& a, const Point& center, int r_max) {
    GrowthReport rep;
    const int n = a.dim();
    for (int r = 1; r <= r_max; ++r) {
        Window w = Window::ball(center, r);
        GrowthPoint pt{r, 0, 0};
        pt.boundary = static_cast<long long>(pattern_vertex_boundary(a, w).size());
        w.for_each([&](const Point& p) {
            if (a.eval(p)) ++pt.volume;
        });
        long long bound = 4LL * n * n;
        for (int i = 0; i < n - 1; ++i) bound *= 2 * r + 1;
        if (pt.boundary > bound) rep.upper_bound_ok = false;
        if (r >= 2 && pt.boundary == 0) rep.boundary_nonempty_ok = false;
        rep.series.push_back(pt);
    }
    return rep;
}

}  // namespace latmin
