#include <doctest.h>

#include <random>

#include "latmin/energy.hpp"

using namespace latmin;

namespace {

VertexFunction random_rational_fn(const Window& w, std::mt19937& rng) {
    VertexFunction f(w);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    w.for_each_dilated([&](const Point& p) { f.set(p, Rat(num(rng), den(rng))); });
    return f;
}

// Independent route for integer-valued f: sum the superlevel perimeters over
// unit thresholds t + 1/2, t integer.
long long integer_coarea_oracle(const VertexFunction& f, const Window& u) {
    long long lo = 1000, hi = -1000;
    u.for_each_dilated([&](const Point& p) {
        if (!u.contains_closure(p)) return;
        long long v = f.at(p).numerator() / f.at(p).denominator();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    });
    long long total = 0;
    for (long long t = lo; t < hi; ++t)
        total += perimeter(superlevel(f, Rat(t)), u);
    return total;
}

}  // namespace

TEST_CASE("dirichlet energy basics") {
    Window u(Point{0, 0}, Point{2, 2});
    CHECK(dirichlet_energy(VertexFunction::constant(u, Rat(7)), u) == Rat(0));

    // indicator energy equals the cut count
    VertexSet k = VertexSet::of_points(u, {Point{1, 1}, Point{1, 2}});
    CHECK(dirichlet_energy(VertexFunction::indicator(k), u) == Rat(perimeter(k, u)));

    // partial function is rejected
    VertexFunction partial(u);
    partial.set(Point{0, 0}, Rat(1));
    CHECK_THROWS(dirichlet_energy(partial, u));
}

TEST_CASE("perimeter: stated cases") {
    Window u(Point{0, 0}, Point{4, 4});
    CHECK(perimeter(VertexSet::full(u), u) == 0);
    CHECK(perimeter(VertexSet::of_points(u, {Point{2, 2}}), u) == 4);

    // 2x3 interior rectangle: enumeration gives 10
    std::vector<Point> rect;
    for (int x = 1; x <= 2; ++x)
        for (int y = 1; y <= 3; ++y) rect.push_back(Point{x, y});
    VertexSet k = VertexSet::of_points(u, rect);
    long long oracle = 0;
    for (const auto& e : window_edges(u))
        if (k.contains(e.a) != k.contains(e.other())) ++oracle;
    CHECK(oracle == 10);
    CHECK(perimeter(k, u) == 10);
}

TEST_CASE("superlevel sets") {
    Window u(Point{0, 0}, Point{1, 1});
    CHECK(superlevel(VertexFunction::constant(u, Rat(0)), Rat(0)).count_window() == 0);

    VertexSet k = VertexSet::of_points(u, {Point{0, 1}});
    VertexFunction ind = VertexFunction::indicator(k);
    VertexSet s = superlevel(ind, Rat(1, 2));
    u.for_each_dilated([&](const Point& p) {
        CHECK(s.contains_indexed(p) == k.contains_indexed(p));
    });

    VertexFunction f(u);
    u.for_each_dilated([&](const Point& p) { f.set(p, Rat(0)); });
    f.set(Point{0, 0}, Rat(2));
    f.set(Point{1, 1}, Rat(5));
    VertexSet above2 = superlevel(f, Rat(2));
    CHECK(above2.count_window() == 1);
    CHECK(above2.contains(Point{1, 1}));
}

TEST_CASE("coarea: trivial and integer-oracle cases") {
    Window u(Point{0, 0}, Point{2, 2});
    auto cc = coarea_check(VertexFunction::constant(u, Rat(7)), u);
    CHECK(cc.lhs == Rat(0));
    CHECK(cc.rhs == Rat(0));
    CHECK(cc.equal);

    VertexSet k = VertexSet::of_points(u, {Point{1, 1}, Point{2, 1}});
    auto ci = coarea_check(VertexFunction::indicator(k), u);
    CHECK(ci.lhs == Rat(perimeter(k, u)));
    CHECK(ci.equal);

    std::mt19937 rng(21);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int iter = 0; iter < 50; ++iter) {
        VertexFunction f(u);
        u.for_each_dilated([&](const Point& p) { f.set(p, Rat(val(rng))); });
        CHECK(dirichlet_energy(f, u) == Rat(integer_coarea_oracle(f, u)));
        CHECK(coarea_check(f, u).equal);
    }
}

TEST_CASE("coarea: random rational functions, 2d and 3d") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        Window u = iter % 2 == 0 ? Window(Point{0, 0}, Point{3, 3})
                                 : Window(Point{-1, -1, -1}, Point{1, 1, 1});
        VertexFunction f = random_rational_fn(u, rng);
        auto res = coarea_check(f, u);
        CHECK(res.equal);
        CHECK(res.lhs == res.rhs);
    }
}

TEST_CASE("energy invariances") {
    std::mt19937 rng(5);
    Window u(Point{0, 0}, Point{3, 2});
    for (int iter = 0; iter < 30; ++iter) {
        VertexFunction f = random_rational_fn(u, rng);
        Rat e = dirichlet_energy(f, u);

        VertexFunction shifted(u), negated(u);
        u.for_each_dilated([&](const Point& p) {
            shifted.set(p, f.at(p) + Rat(3, 2));
            negated.set(p, -f.at(p));
        });
        CHECK(dirichlet_energy(shifted, u) == e);
        CHECK(dirichlet_energy(negated, u) == e);

        // window shrinking is monotone since E_{U'} ⊆ E_U
        Window inner(Point{1, 0}, Point{2, 2});
        CHECK(dirichlet_energy(f, inner) <= e);
    }
}
