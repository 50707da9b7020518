#include <doctest.h>

#include <random>

#include "latmin/currents.hpp"

using namespace latmin;

namespace {

Pattern halfplane() { return Pattern::halfspace(2, 1, +1, 0); }  // { y >= 0 }

Pattern strip3() {  // { 0 <= y <= 2 }
    return Pattern::intersection_of(
        {Pattern::halfspace(2, 1, +1, 0), Pattern::halfspace(2, 1, -1, -2)});
}

}  // namespace

TEST_CASE("forced constraints: constant, half-plane, single point") {
    Window w(Point{-2, -2}, Point{2, 2});

    auto all_free = forced_constraints(VertexFunction::constant(w, Rat(4)), w);
    for (auto v : all_free.forced) CHECK(v == 0);

    VertexFunction half = indicator_of(halfplane(), w);
    auto fc = forced_constraints(half, w);
    for (size_t i = 0; i < fc.edges.size(); ++i) {
        const Edge& e = fc.edges[i];
        bool interface = e.axis == 1 && e.a[1] == -1;  // (x,-1)-(x,0)
        if (interface)
            CHECK(fc.forced[i] == -1);  // sgn(f(min) - f(other)) = sgn(0-1)
        else
            CHECK(fc.forced[i] == 0);
    }

    VertexSet pt = VertexSet::of_points(w, {Point{0, 0}});
    auto fp = forced_constraints(VertexFunction::indicator(pt), w);
    int forced_count = 0;
    for (size_t i = 0; i < fp.edges.size(); ++i)
        if (fp.forced[i] != 0) {
            ++forced_count;
            // oriented away from the point
            bool from_pt = fp.edges[i].a == Point{0, 0};
            CHECK(fp.forced[i] == (from_pt ? 1 : -1));
        }
    CHECK(forced_count == 4);
}

TEST_CASE("one-laplacian interval: interior, pendant, pointwise zero test") {
    Window w(Point{-2, -2}, Point{2, 2});
    VertexFunction ones = VertexFunction::constant(w, Rat(1));
    auto iv = one_laplacian_interval(ones, Point{0, 0}, w);
    CHECK(iv.lo == -4);
    CHECK(iv.hi == 4);
    CHECK(iv.contains_zero());

    // x in M with exactly one neighbor in M: S = 3, F = 1 -> (2,4)
    VertexSet k = VertexSet::of_points(w, {Point{0, 0}, Point{1, 0}, Point{2, 0}});
    auto ip = one_laplacian_interval(VertexFunction::indicator(k), Point{0, 0}, w);
    CHECK(ip.lo == 2);
    CHECK(ip.hi == 4);
    CHECK(!ip.contains_zero());

    CHECK_THROWS(one_laplacian_interval(ones, Point{3, 0}, w));
}

TEST_CASE("find_minimal_current: trivial, half-plane, isolated point") {
    Window w(Point{-3, -3}, Point{3, 3});

    auto zero = find_minimal_current(VertexFunction::constant(w, Rat(0)), w);
    REQUIRE(zero.has_value());

    auto half = find_minimal_current(VertexSet::from_pattern(halfplane(), w), w);
    REQUIRE(half.has_value());
    for (auto v : half->values) CHECK((v >= -1 && v <= 1));

    VertexSet pt = VertexSet::of_points(w, {Point{0, 0}});
    CHECK(!find_minimal_current(pt, w).has_value());
    CHECK(has_local_obstruction(VertexFunction::indicator(pt), w));
}

TEST_CASE("hand-built vertical calibration certifies the half-plane") {
    const int r = 4;
    Point c{0, 0};
    Certificate cert;
    cert.pattern_id = "halfplane";
    cert.center = c;
    cert.radius = r;
    cert.current.window = Window::ball(c, r);
    cert.current.edges = window_edges(cert.current.window);
    cert.current.values.resize(cert.current.edges.size());
    for (size_t i = 0; i < cert.current.edges.size(); ++i) {
        const Edge& e = cert.current.edges[i];
        // +1 on every vertical edge oriented downward, zero horizontally:
        // canonically a_{(x,y),(x,y+1)} = -1.
        cert.current.values[i] = static_cast<int8_t>(e.axis == 1 ? -1 : 0);
    }
    CHECK(validate_certificate(cert, halfplane()));

    // negation certifies the complement
    CHECK(validate_certificate(negate_certificate(cert), Pattern::complement(halfplane())));
}

TEST_CASE("certificate serialization round-trips; mutations are caught") {
    auto rep = certify_up_to_radius(halfplane(), Point{0, 0}, 3, "halfplane");
    REQUIRE(!rep.refuted);
    const auto& cert = std::get<Certificate>(rep.per_radius.back());
    std::string text = cert.serialize();
    Certificate back = Certificate::parse(text);
    CHECK(back.radius == cert.radius);
    CHECK(back.current.values == cert.current.values);
    CHECK(back.serialize() == text);
    CHECK(validate_certificate(back, halfplane()));

    // flipped value: the hash line no longer matches
    std::string tampered = text;
    auto pos = tampered.find(" 0\n");
    REQUIRE(pos != std::string::npos);
    tampered[pos + 1] = '1';
    CHECK_THROWS(Certificate::parse(tampered));

    // flipped value with a recomputed hash: validation fails instead
    Certificate mutated = cert;
    for (size_t i = 0; i < mutated.current.values.size(); ++i)
        if (mutated.current.edges[i].axis == 1 && mutated.current.values[i] != 0) {
            mutated.current.values[i] = static_cast<int8_t>(-mutated.current.values[i]);
            break;
        }
    CHECK(!validate_certificate(mutated, halfplane()));
}

TEST_CASE("certify: half-plane to 10, strip refuted by radius 6, monotone") {
    auto good = certify_up_to_radius(halfplane(), Point{0, 0}, 10, "halfplane");
    CHECK(!good.refuted);
    CHECK(good.certified_to == 10);

    auto bad = certify_up_to_radius(strip3(), Point{0, 0}, 10, "strip3");
    CHECK(bad.refuted);
    CHECK(bad.refuted_at <= 6);
    const auto& ref = std::get<Refutation>(bad.per_radius.back());
    CHECK(ref.witness_perimeter < ref.pattern_perimeter);

    // refutation is monotone in the radius
    for (int r = bad.refuted_at; r <= bad.refuted_at + 2; ++r) {
        Window w = Window::ball(Point{0, 0}, r);
        CHECK(!find_minimal_current(VertexSet::from_pattern(strip3(), w), w).has_value());
    }
}

TEST_CASE("local interval obstruction is sound for the solver") {
    std::mt19937 rng(77);
    Window w(Point{0, 0}, Point{2, 2});
    std::bernoulli_distribution coin(0.5);
    for (int iter = 0; iter < 300; ++iter) {
        VertexSet k = VertexSet::empty(w);
        w.for_each_dilated([&](const Point& p) {
            if (w.contains_closure(p) && coin(rng)) k.set(p, true);
        });
        VertexFunction f = VertexFunction::indicator(k);
        bool obstructed = has_local_obstruction(f, w);
        auto cur = find_minimal_current(k, w);
        if (obstructed) CHECK(!cur.has_value());
        if (cur) {
            // returned current validates by hand: divergence and constraints
            std::vector<long long> div(w.dilated_volume(), 0);
            for (size_t i = 0; i < cur->edges.size(); ++i) {
                const Edge& e = cur->edges[i];
                int v = cur->values[i];
                CHECK((v >= -1 && v <= 1));
                int sg = sign_of(f.at(e.a) - f.at(e.other()));
                if (sg != 0) CHECK(v == sg);
                div[w.index(e.a)] += v;
                div[w.index(e.other())] -= v;
            }
            w.for_each([&](const Point& p) { CHECK(div[w.index(p)] == 0); });
        }
    }
}

TEST_CASE("rational least-gradient route agrees with the indicator route") {
    std::mt19937 rng(13);
    Window w(Point{0, 0}, Point{2, 1});
    std::bernoulli_distribution coin(0.5);
    for (int iter = 0; iter < 100; ++iter) {
        VertexSet k = VertexSet::empty(w);
        w.for_each_dilated([&](const Point& p) {
            if (w.contains_closure(p) && coin(rng)) k.set(p, true);
        });
        bool via_set = find_minimal_current(k, w).has_value();
        bool via_fn = find_minimal_current(VertexFunction::indicator(k), w).has_value();
        CHECK(via_set == via_fn);
    }
}
