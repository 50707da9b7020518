#include "latmin/catalog.hpp"

#include <mutex>
#include <sstream>

namespace latmin {

namespace {

int arg(const Params& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw std::invalid_argument("missing family parameter '" + k + "'");
    return it->second;
}

Pattern hs(int axis, int sign, int c) { return Pattern::halfspace(2, axis, sign, c); }

// Closed quadrant with the given corner, opening along (sx, sy).
Pattern quad(int cx, int cy, int sx, int sy) {
    return Pattern::orthant(Point{cx, cy}, {sx, sy});
}

Pattern uni(std::vector<Pattern> ps) { return Pattern::union_of(std::move(ps)); }

Pattern cellset(std::vector<Point> pts) { return Pattern::cells(2, std::move(pts)); }

// --- geodesic simple families (one boundary curve) ----------------------

Pattern build_halfplane(const Params&) { return hs(1, -1, 0); }  // { y <= 0 }

Pattern build_quadrant(const Params&) { return quad(0, 0, -1, -1); }  // { x <= 0, y <= 0 }

// Union of two half-planes: the plane with one quadrant removed.
Pattern build_antiquadrant(const Params&) { return uni({hs(0, -1, 0), hs(1, -1, 0)}); }

// Monotone step of height h: { y <= 0 } ∪ { x <= 0, y <= h }.
Pattern build_step(const Params& p) {
    int h = arg(p, "h");
    return uni({hs(1, -1, 0), Pattern::intersection_of({hs(0, -1, 0), hs(1, -1, h)})});
}

// Two monotone unit steps separated by a flat run.
Pattern build_double_step(const Params& p) {
    int a = arg(p, "a");
    return uni({hs(1, -1, 0), Pattern::intersection_of({hs(0, -1, a), hs(1, -1, 1)}),
                Pattern::intersection_of({hs(0, -1, 0), hs(1, -1, 2)})});
}

// --- geodesic non-simple families ----------------------------------------

// Two opposite quadrants joined corner-to-corner by a flat path of length h.
Pattern build_f2_1(const Params& p) {
    int h = arg(p, "h");
    std::vector<Pattern> parts = {quad(0, 0, -1, -1), quad(h, 0, +1, +1)};
    if (h >= 1) parts.push_back(Pattern::box(Point{0, 0}, Point{h, 0}));
    return uni(std::move(parts));
}

// Two diagonal quadrants plus both off-diagonal cells of the unit square
// between their corners: the boundary contains exactly one unit-square loop.
Pattern build_f2_2(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(1, 1, +1, +1), cellset({Point{1, 0}, Point{0, 1}})});
}

// As F2-2 but with a single off-diagonal bridge cell.
Pattern build_f2_3(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(1, 1, +1, +1), cellset({Point{1, 0}})});
}

// --- geodesic simple families with two boundary curves -------------------

// Plane minus two quadrant holes pinched to a neck of width h+1 and length d
// (the h×d offset rectangle between the two boundary lines).
Pattern build_f3_2_1(const Params& p) {
    int h = arg(p, "h"), d = arg(p, "d");
    Pattern hole_nw = quad(-1, 1, -1, +1);
    Pattern hole_se = quad(h + 1, d, +1, -1);
    return Pattern::complement(uni({hole_nw, hole_se}));
}

// Plane minus two quadrant holes opening away from each other across a d×h
// rectangle: the band only widens, so every parameter choice is minimal.
Pattern build_f3_2_2(const Params& p) {
    int h = arg(p, "h"), d = arg(p, "d");
    Pattern hole_nw = quad(-1, 1, -1, +1);
    Pattern hole_se = quad(d + 1, -h - 1, +1, -1);
    return Pattern::complement(uni({hole_nw, hole_se}));
}

// --- non-geodesic families (reconstructed; see catalog tests) ------------

// Quadrant pair with a flat bridge and a unit offset across it.
Pattern build_f1_1(const Params& p) {
    int h = arg(p, "h");
    std::vector<Pattern> parts = {quad(0, 0, -1, -1), quad(h + 1, 1, +1, +1)};
    parts.push_back(Pattern::box(Point{0, 0}, Point{std::max(0, h), 0}));
    parts.push_back(cellset({Point{h + 1, 0}}));
    return uni(std::move(parts));
}

Pattern build_f1_2(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(2, 1, +1, +1), cellset({Point{1, 0}, Point{2, 0}})});
}

Pattern build_f1_3(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(2, 2, +1, +1),
                cellset({Point{1, 0}, Point{1, 1}, Point{2, 1}})});
}

Pattern build_f1_4(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(1, 2, +1, +1), cellset({Point{1, 0}, Point{1, 1}})});
}

// Rectangular a×b island diagonally linked between two opposite quadrants.
Pattern build_f1_5(const Params& p) {
    int a = arg(p, "a"), b = arg(p, "b");
    return uni({quad(0, 0, -1, -1), cellset({Point{1, 0}}),
                Pattern::box(Point{1, 1}, Point{a, b}), cellset({Point{a + 1, b}}),
                quad(a + 1, b + 1, +1, +1)});
}

Pattern build_f1_6(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(3, 1, +1, +1),
                cellset({Point{1, 0}, Point{2, 0}, Point{3, 0}})});
}

Pattern build_f1_7(const Params&) {
    return uni({quad(0, 0, -1, -1), quad(2, 2, +1, +1),
                cellset({Point{1, 0}, Point{2, 1}})});
}

// Caption constraints, verbatim from the figure captions.
bool c_true(const Params&) { return true; }
bool c_h_le2(const Params& p) { return arg(p, "h") >= 0 && arg(p, "h") <= 2; }
bool c_hd1(const Params& p) { return arg(p, "h") == 1 && arg(p, "d") == 1; }
bool c_f1_5(const Params& p) {
    return arg(p, "h") == 1 && arg(p, "d") == 1 && arg(p, "a") >= 2 && arg(p, "b") >= 2;
}
bool c_f3_2_1(const Params& p) {
    return arg(p, "h") >= 0 && arg(p, "d") >= 0 && arg(p, "d") <= arg(p, "h") + 2;
}
bool c_f3_2_2(const Params& p) { return arg(p, "h") >= 0 && arg(p, "d") >= 0; }

std::vector<Family> make_catalog() {
    std::vector<Family> fams;
    auto add = [&](std::string id, std::vector<std::string> names, std::string ctext,
                   bool (*cons)(const Params&), Pattern (*build)(const Params&),
                   std::string rec, std::vector<Params> reg) {
        fams.push_back(Family{std::move(id), std::move(names), std::move(ctext), cons, build,
                              std::move(rec), std::move(reg)});
    };

    add("F1-1", {"h"}, "h<=2", c_h_le2, build_f1_1, "reconstructed",
        {{{"h", 0}}, {{"h", 1}}, {{"h", 2}}});
    add("F1-2", {"h", "d"}, "h=d=1", c_hd1, build_f1_2, "reconstructed", {{{"h", 1}, {"d", 1}}});
    add("F1-3", {"h", "d"}, "h=d=1", c_hd1, build_f1_3, "reconstructed", {{{"h", 1}, {"d", 1}}});
    add("F1-4", {"h", "d"}, "h=d=1", c_hd1, build_f1_4, "reconstructed", {{{"h", 1}, {"d", 1}}});
    add("F1-5", {"h", "d", "a", "b"}, "h=d=1, a>=2, b>=2", c_f1_5, build_f1_5, "reconstructed",
        {{{"h", 1}, {"d", 1}, {"a", 2}, {"b", 2}}, {{"h", 1}, {"d", 1}, {"a", 3}, {"b", 2}}});
    add("F1-6", {"h", "d"}, "h=d=1", c_hd1, build_f1_6, "reconstructed", {{{"h", 1}, {"d", 1}}});
    add("F1-7", {"h", "d"}, "h=d=1", c_hd1, build_f1_7, "reconstructed", {{{"h", 1}, {"d", 1}}});

    add("F2-1", {"h"}, "h<=2", c_h_le2, build_f2_1, "caption-anchored",
        {{{"h", 0}}, {{"h", 1}}, {{"h", 2}}});
    add("F2-2", {"h", "d"}, "h=d=1", c_hd1, build_f2_2, "caption-anchored", {{{"h", 1}, {"d", 1}}});
    add("F2-3", {"h", "d"}, "h=d=1", c_hd1, build_f2_3, "reconstructed", {{{"h", 1}, {"d", 1}}});

    add("F3-1-1", {}, "none", c_true, build_halfplane, "caption-anchored", {{}});
    add("F3-1-2", {}, "none", c_true, build_quadrant, "caption-anchored", {{}});
    add("F3-1-3", {}, "none", c_true, build_antiquadrant, "reconstructed", {{}});
    add("F3-1-4", {"h"}, "none", c_true, build_step, "reconstructed", {{{"h", 1}}, {{"h", 2}}});
    add("F3-1-5", {"a"}, "none", c_true, build_double_step, "reconstructed", {{{"a", 2}}});

    add("F3-2-1", {"h", "d"}, "0<=d<=h+2", c_f3_2_1, build_f3_2_1, "caption-anchored",
        {{{"h", 0}, {"d", 2}}, {{"h", 1}, {"d", 3}}, {{"h", 1}, {"d", 1}}, {{"h", 2}, {"d", 4}}});
    add("F3-2-2", {"h", "d"}, "d>=0, h>=0", c_f3_2_2, build_f3_2_2, "caption-anchored",
        {{{"h", 0}, {"d", 0}}, {{"h", 1}, {"d", 2}}, {{"h", 3}, {"d", 1}}});
    return fams;
}

}  // namespace

const std::vector<Family>& catalog() {
    static const std::vector<Family> fams = make_catalog();
    return fams;
}

const Family* find_family(const std::string& id) {
    for (const auto& f : catalog())
        if (f.id == id) return &f;
    return nullptr;
}

Pattern generate(const std::string& family_id, const Params& params, bool force) {
    const Family* f = find_family(family_id);
    if (!f) throw std::invalid_argument("unknown family '" + family_id + "'");
    for (const auto& name : f->param_names)
        if (!params.count(name))
            throw std::invalid_argument("family " + family_id + " needs parameter '" + name + "'");
    if (!force && !f->constraint(params))
        throw std::invalid_argument("family " + family_id + " constraint violated: " +
                                    f->constraint_text);
    return f->build(params);
}

std::string params_str(const Params& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : p) {
        out << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    return out.str();
}

std::vector<RegistryEntry> registry_patterns() {
    std::vector<RegistryEntry> out;
    for (const auto& f : catalog()) {
        for (const auto& params : f.registry_params) {
            RegistryEntry e;
            e.family_id = f.id;
            e.params = params;
            e.pattern = f.build(params);
            e.name = f.id + (params.empty() ? "" : "[" + params_str(params) + "]");
            out.push_back(e);
            RegistryEntry c = out.back();
            c.name += "-complement";
            c.pattern = Pattern::complement(out.back().pattern);
            c.is_complement = true;
            out.push_back(std::move(c));
        }
    }
    return out;
}

const CertifyReport& registry_certify(const RegistryEntry& e, int radius) {
    static std::map<std::string, CertifyReport> cache;
    static std::mutex mu;
    const std::string key = e.name + "@" + std::to_string(radius);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Point center;
    center.dim = 2;
    CertifyReport rep = certify_up_to_radius(e.pattern, center, radius, e.name);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(rep)).first->second;
}

}  // namespace latmin
