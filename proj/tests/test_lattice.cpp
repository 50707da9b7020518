#include <doctest.h>

#include <random>
#include <set>

#include "latmin/pattern.hpp"
#include "latmin/vertexset.hpp"

using namespace latmin;

namespace {

Pattern halfplane_y_ge(int c) { return Pattern::halfspace(2, 1, +1, c); }

// Definitional oracle for δ/τ: enumerate window cells and test the paper
// definitions directly against a membership predicate.
std::set<Point> delta_oracle(const VertexSet& a) {
    std::set<Point> out;
    a.window().for_each([&](const Point& p) {
        if (!a.contains(p)) return;
        for (const auto& q : neighbors(p))
            if (!a.contains(q)) out.insert(p);
    });
    return out;
}

std::set<Point> to_set(const VertexSet& v) {
    auto pts = v.points_in_window();
    return {pts.begin(), pts.end()};
}

VertexSet random_set(const Window& w, std::mt19937& rng) {
    VertexSet v = VertexSet::empty(w);
    std::bernoulli_distribution coin(0.5);
    w.for_each_dilated([&](const Point& p) {
        if (w.contains_closure(p) && coin(rng)) v.set(p, true);
    });
    return v;
}

}  // namespace

TEST_CASE("neighbors: order and count") {
    auto n2 = neighbors(Point{0, 0});
    REQUIRE(n2.size() == 4);
    CHECK(n2[0] == Point{-1, 0});
    CHECK(n2[1] == Point{1, 0});
    CHECK(n2[2] == Point{0, -1});
    CHECK(n2[3] == Point{0, 1});

    auto n3 = neighbors(Point{1, 2, 3});
    REQUIRE(n3.size() == 6);
    for (const auto& q : n3) {
        int diff = 0;
        Point p{1, 2, 3};
        for (int i = 0; i < 3; ++i) diff += std::abs(q[i] - p[i]);
        CHECK(diff == 1);
    }
    CHECK(neighbors(Point{7}).size() == 2);
    CHECK(neighbors(Point{0, 0, 0, 0}).size() == 8);
}

TEST_CASE("vertex and exterior boundary: stated cases") {
    Window w(Point{-3, -3}, Point{3, 3});

    SUBCASE("full closure has empty boundary") {
        CHECK(to_set(vertex_boundary(VertexSet::full(w))).empty());
    }
    SUBCASE("window without its tau row exposes the faces") {
        VertexSet a = VertexSet::empty(w);
        w.for_each([&](const Point& p) { a.set(p, true); });
        auto d = to_set(vertex_boundary(a));
        CHECK(d.size() == 24);  // ring of the 7x7 box
        CHECK(d.count(Point{3, 0}) == 1);
        CHECK(d.count(Point{0, 0}) == 0);
    }
    SUBCASE("single point") {
        VertexSet a = VertexSet::of_points(w, {Point{0, 0}});
        CHECK(to_set(vertex_boundary(a)) == std::set<Point>{Point{0, 0}});
        auto t = to_set(exterior_boundary(a));
        CHECK(t == std::set<Point>{Point{-1, 0}, Point{1, 0}, Point{0, -1}, Point{0, 1}});
    }
    SUBCASE("empty set") { CHECK(to_set(exterior_boundary(VertexSet::empty(w))).empty()); }
    SUBCASE("half-plane x2>=0 on [-3,3]^2") {
        VertexSet a = VertexSet::from_pattern(halfplane_y_ge(0), w);
        auto d = to_set(vertex_boundary(a));
        CHECK(d == delta_oracle(a));  // definitional enumeration
        for (const auto& p : d) CHECK(p[1] == 0);
        CHECK(d.size() == 7);
        auto t = to_set(exterior_boundary(a));
        for (const auto& p : t) CHECK(p[1] == -1);
        CHECK(t.size() == 7);
    }
}

TEST_CASE("edge sets: counts and symmetry") {
    SUBCASE("1x1 window has 4 edges") {
        Window u(Point{0, 0}, Point{0, 0});
        CHECK(window_edges(u).size() == 4);
        VertexSet a = VertexSet::of_points(u, {Point{0, 0}});
        CHECK(edge_sets(a, u).cut.size() == 4);
    }
    SUBCASE("interior 2x2 square cuts 8 edges") {
        Window u(Point{-2, -2}, Point{3, 3});
        VertexSet a =
            VertexSet::of_points(u, {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}});
        CHECK(edge_sets(a, u).cut.size() == 8);
    }
}

TEST_CASE("edge list invariants on random windows") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int dim = 1 + static_cast<int>(rng() % 3);
        Point lo, hi;
        lo.dim = hi.dim = dim;
        for (int i = 0; i < dim; ++i) {
            lo[i] = static_cast<int>(rng() % 5) - 2;
            hi[i] = lo[i] + static_cast<int>(rng() % 3);
        }
        Window u(lo, hi);
        auto edges = window_edges(u);
        CHECK(static_cast<long long>(edges.size()) <= 2 * dim * u.volume() + 2 * dim);
        std::set<Edge> uniq(edges.begin(), edges.end());
        CHECK(uniq.size() == edges.size());
        for (size_t i = 1; i < edges.size(); ++i) CHECK(edges[i - 1] < edges[i]);
        for (const auto& e : edges) {
            CHECK((u.contains(e.a) || u.contains(e.other())));
            CHECK(e.a < e.other());
        }

        VertexSet a = random_set(u, rng);
        auto d = to_set(vertex_boundary(a));
        auto t = to_set(exterior_boundary(a));
        for (const auto& p : d) CHECK(a.contains(p));
        for (const auto& p : t) CHECK(!a.contains(p));
        // complement symmetry of the cut set
        auto cut_a = edge_sets(a, u).cut;
        auto cut_c = edge_sets(a.complement(), u).cut;
        CHECK(cut_a == cut_c);
    }
}

TEST_CASE("pattern CSG: differential evaluation against the table route") {
    std::mt19937 rng(99);
    auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    std::function<Pattern(int, int)> gen = [&](int dim, int depth) -> Pattern {
        int pick = depth <= 0 ? rnd(0, 2) : rnd(0, 6);
        switch (pick) {
            case 0:
                return Pattern::halfspace(dim, rnd(0, dim - 1), rng() % 2 ? 1 : -1, rnd(-3, 3));
            case 1: {
                Point lo, hi;
                lo.dim = hi.dim = dim;
                for (int i = 0; i < dim; ++i) {
                    lo[i] = rnd(-3, 2);
                    hi[i] = lo[i] + rnd(0, 3);
                }
                return Pattern::box(lo, hi);
            }
            case 2: {
                std::vector<Point> pts;
                for (int k = rnd(1, 6); k > 0; --k) {
                    Point p;
                    p.dim = dim;
                    for (int i = 0; i < dim; ++i) p[i] = rnd(-4, 4);
                    pts.push_back(p);
                }
                return Pattern::cells(dim, pts);
            }
            case 3:
                return Pattern::union_of({gen(dim, depth - 1), gen(dim, depth - 1)});
            case 4:
                return Pattern::intersection_of({gen(dim, depth - 1), gen(dim, depth - 1)});
            case 5:
                return Pattern::complement(gen(dim, depth - 1));
            default: {
                Point off;
                off.dim = dim;
                for (int i = 0; i < dim; ++i) off[i] = rnd(-2, 2);
                return Pattern::translate(gen(dim, depth - 1), off);
            }
        }
    };
    for (int iter = 0; iter < 60; ++iter) {
        int dim = 1 + static_cast<int>(rng() % 2);
        Pattern p = gen(dim, 3);
        Point lo, hi;
        lo.dim = hi.dim = dim;
        for (int i = 0; i < dim; ++i) {
            lo[i] = rnd(-4, 0);
            hi[i] = lo[i] + rnd(0, 8);  // window side <= 9
        }
        Window w(lo, hi);
        auto table = p.table(w);
        w.for_each_dilated([&](const Point& q) {
            CHECK(p.eval(q) == (table[w.index(q)] != 0));
        });
        // json round trip preserves evaluation and bytes
        std::string j = p.to_json();
        Pattern q = Pattern::from_json(j);
        CHECK(q.to_json() == j);
        w.for_each_dilated([&](const Point& x) { CHECK(p.eval(x) == q.eval(x)); });
    }
}

TEST_CASE("extrude lifts a plane pattern along an axis") {
    Pattern plane = halfplane_y_ge(0);
    Pattern solid = Pattern::extrude(plane, 2);
    CHECK(solid.dim() == 3);
    CHECK(solid.eval(Point{4, 0, -7}));
    CHECK(solid.eval(Point{4, 2, 9}));
    CHECK(!solid.eval(Point{4, -1, 0}));
    std::string j = solid.to_json();
    CHECK(Pattern::from_json(j).to_json() == j);
}

TEST_CASE("grid2 round trip is exact") {
    Window w(Point{-1, 2}, Point{2, 4});
    std::mt19937 rng(3);
    VertexSet v = random_set(w, rng);
    Grid2 g = grid2_of(v);
    std::string text = grid2_emit(g);
    Grid2 g2 = grid2_parse(text);
    CHECK(grid2_emit(g2) == text);
    VertexSet v2 = vertexset_of_grid(g2);
    CHECK(v2.window() == w);
    w.for_each_dilated([&](const Point& p) {
        CHECK(v.contains_indexed(p) == v2.contains_indexed(p));
    });
    CHECK_THROWS(grid2_parse("GRID2 0 0 -1 2\n"));
}

TEST_CASE("complement is an involution") {
    Window w(Point{0, 0}, Point{3, 2});
    std::mt19937 rng(11);
    VertexSet v = random_set(w, rng);
    VertexSet vc = v.complement().complement();
    w.for_each_dilated([&](const Point& p) {
        CHECK(v.contains_indexed(p) == vc.contains_indexed(p));
    });
}
