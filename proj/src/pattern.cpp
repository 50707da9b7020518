#include "latmin/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace latmin {

using json = nlohmann::ordered_json;
using NodePtr = std::shared_ptr<const Pattern::Node>;

namespace {

bool eval_node(const Pattern::Node& n, Point p) {
    switch (n.op) {
        case Pattern::Op::Halfspace:
            return n.sign * p[n.axis] >= n.c;
        case Pattern::Op::Box:
            for (int i = 0; i < p.dim; ++i)
                if (p[i] < n.lo[i] || p[i] > n.hi[i]) return false;
            return true;
        case Pattern::Op::Cells:
            return std::binary_search(n.cells.begin(), n.cells.end(), p);
        case Pattern::Op::Orthant:
            for (int i = 0; i < p.dim; ++i)
                if (n.signs[i] * p[i] < n.signs[i] * n.corner[i]) return false;
            return true;
        case Pattern::Op::Union:
            for (const auto& a : n.args)
                if (eval_node(*a, p)) return true;
            return false;
        case Pattern::Op::Intersection:
            for (const auto& a : n.args)
                if (!eval_node(*a, p)) return false;
            return true;
        case Pattern::Op::Complement:
            return !eval_node(*n.args[0], p);
        case Pattern::Op::Translate:
            return eval_node(*n.args[0], p - n.offset);
        case Pattern::Op::Extrude: {
            Point q;
            q.dim = p.dim - 1;
            int j = 0;
            for (int i = 0; i < p.dim; ++i)
                if (i != n.axis) q[j++] = p[i];
            return eval_node(*n.args[0], q);
        }
        case Pattern::Op::Func:
            return n.func(p);
    }
    return false;
}

}  // namespace

bool Pattern::eval(const Point& p) const {
    if (p.dim != dim_) throw std::invalid_argument("pattern eval: dimension mismatch");
    return eval_node(*root_, p);
}

namespace {

// Set-algebra evaluator over dilated-box bitmaps, deliberately disjoint from
// eval_node(): primitives are re-derived arithmetically, composites by set
// operations on whole bitmaps.
std::vector<uint8_t> table_node(const NodePtr& node, const Window& w) {
    const Pattern::Node& n = *node;
    std::vector<uint8_t> bits(w.dilated_volume(), 0);
    switch (n.op) {
        case Pattern::Op::Halfspace:
            w.for_each_dilated([&](const Point& p) {
                if (static_cast<long long>(n.sign) * p[n.axis] >= n.c) bits[w.index(p)] = 1;
            });
            return bits;
        case Pattern::Op::Box:
            w.for_each_dilated([&](const Point& p) {
                bool in = true;
                for (int i = 0; i < w.dim() && in; ++i) in = n.lo[i] <= p[i] && p[i] <= n.hi[i];
                if (in) bits[w.index(p)] = 1;
            });
            return bits;
        case Pattern::Op::Orthant:
            w.for_each_dilated([&](const Point& p) {
                bool in = true;
                for (int i = 0; i < w.dim() && in; ++i)
                    in = (n.signs[i] > 0) ? p[i] >= n.corner[i] : p[i] <= n.corner[i];
                if (in) bits[w.index(p)] = 1;
            });
            return bits;
        case Pattern::Op::Cells:
            for (const auto& p : n.cells)
                if (w.contains_dilated(p)) bits[w.index(p)] = 1;
            return bits;
        case Pattern::Op::Func:
            w.for_each_dilated([&](const Point& p) {
                if (n.func(p)) bits[w.index(p)] = 1;
            });
            return bits;
        case Pattern::Op::Union:
            for (const auto& a : n.args) {
                auto b = table_node(a, w);
                for (size_t i = 0; i < bits.size(); ++i) bits[i] |= b[i];
            }
            return bits;
        case Pattern::Op::Intersection: {
            std::fill(bits.begin(), bits.end(), 1);
            for (const auto& a : n.args) {
                auto b = table_node(a, w);
                for (size_t i = 0; i < bits.size(); ++i) bits[i] &= b[i];
            }
            return bits;
        }
        case Pattern::Op::Complement: {
            auto b = table_node(n.args[0], w);
            for (size_t i = 0; i < bits.size(); ++i) bits[i] = !b[i];
            return bits;
        }
        case Pattern::Op::Translate: {
            Window ws(w.lo - n.offset, w.hi - n.offset);
            auto tb = table_node(n.args[0], ws);
            w.for_each_dilated([&](const Point& p) {
                bits[w.index(p)] = tb[ws.index(p - n.offset)];
            });
            return bits;
        }
        case Pattern::Op::Extrude: {
            Point lo, hi;
            lo.dim = hi.dim = w.dim() - 1;
            int j = 0;
            for (int i = 0; i < w.dim(); ++i)
                if (i != n.axis) {
                    lo[j] = w.lo[i];
                    hi[j] = w.hi[i];
                    ++j;
                }
            Window ws(lo, hi);
            auto tb = table_node(n.args[0], ws);
            w.for_each_dilated([&](const Point& p) {
                Point q;
                q.dim = w.dim() - 1;
                int k = 0;
                for (int i = 0; i < w.dim(); ++i)
                    if (i != n.axis) q[k++] = p[i];
                bits[w.index(p)] = ws.contains_dilated(q) ? tb[ws.index(q)] : eval_node(*n.args[0], q);
            });
            return bits;
        }
    }
    return bits;
}

}  // namespace

std::vector<uint8_t> Pattern::table(const Window& w) const {
    if (w.dim() != dim_) throw std::invalid_argument("pattern table: dimension mismatch");
    return table_node(root_, w);
}

Pattern Pattern::halfspace(int dim, int axis, int sign, int c) {
    if (axis < 0 || axis >= dim) throw std::invalid_argument("halfspace: bad axis");
    if (sign != 1 && sign != -1) throw std::invalid_argument("halfspace: sign must be +/-1");
    auto n = std::make_shared<Node>();
    n->op = Op::Halfspace;
    n->axis = axis;
    n->sign = sign;
    n->c = c;
    return Pattern(dim, n);
}

Pattern Pattern::box(const Point& lo, const Point& hi) {
    (void)Window(lo, hi);  // validates lo <= hi and dimensions
    auto n = std::make_shared<Node>();
    n->op = Op::Box;
    n->lo = lo;
    n->hi = hi;
    return Pattern(lo.dim, n);
}

Pattern Pattern::cells(int dim, std::vector<Point> pts) {
    for (const auto& p : pts)
        if (p.dim != dim) throw std::invalid_argument("cells: dimension mismatch");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto n = std::make_shared<Node>();
    n->op = Op::Cells;
    n->cells = std::move(pts);
    return Pattern(dim, n);
}

Pattern Pattern::orthant(const Point& corner, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != corner.dim)
        throw std::invalid_argument("orthant: one sign per axis required");
    auto n = std::make_shared<Node>();
    n->op = Op::Orthant;
    n->corner = corner;
    n->signs = signs;
    return Pattern(corner.dim, n);
}

static Pattern nary(Pattern::Op op, std::vector<Pattern> ps) {
    if (ps.empty()) throw std::invalid_argument("union/intersection: empty");
    auto n = std::make_shared<Pattern::Node>();
    n->op = op;
    int dim = ps[0].dim();
    for (auto& p : ps) {
        if (p.dim() != dim) throw std::invalid_argument("union/intersection: mixed dims");
        n->args.push_back(p.root());
    }
    return Pattern(dim, n);
}

Pattern Pattern::union_of(std::vector<Pattern> ps) { return nary(Op::Union, std::move(ps)); }
Pattern Pattern::intersection_of(std::vector<Pattern> ps) {
    return nary(Op::Intersection, std::move(ps));
}

Pattern Pattern::complement(const Pattern& p) {
    auto n = std::make_shared<Node>();
    n->op = Op::Complement;
    n->args.push_back(p.root());
    return Pattern(p.dim(), n);
}

Pattern Pattern::translate(const Pattern& p, const Point& offset) {
    if (offset.dim != p.dim()) throw std::invalid_argument("translate: dimension mismatch");
    auto n = std::make_shared<Node>();
    n->op = Op::Translate;
    n->offset = offset;
    n->args.push_back(p.root());
    return Pattern(p.dim(), n);
}

Pattern Pattern::extrude(const Pattern& p, int axis) {
    if (axis < 0 || axis > p.dim()) throw std::invalid_argument("extrude: bad axis");
    auto n = std::make_shared<Node>();
    n->op = Op::Extrude;
    n->axis = axis;
    n->args.push_back(p.root());
    return Pattern(p.dim() + 1, n);
}

Pattern Pattern::from_func(int dim, std::function<bool(const Point&)> f) {
    auto n = std::make_shared<Node>();
    n->op = Op::Func;
    n->func = std::move(f);
    return Pattern(dim, n);
}

namespace {

json point_json(const Point& p) {
    json a = json::array();
    for (int i = 0; i < p.dim; ++i) a.push_back(p[i]);
    return a;
}
Point point_from_json(const json& a) {
    if (!a.is_array() || a.empty() || a.size() > kMaxDim)
        throw std::invalid_argument("pattern json: bad point");
    Point p;
    p.dim = static_cast<int>(a.size());
    for (int i = 0; i < p.dim; ++i) p[i] = a[i].get<int>();
    return p;
}

json node_json(const Pattern::Node& n) {
    json j;
    switch (n.op) {
        case Pattern::Op::Halfspace:
            j["op"] = "halfspace";
            j["axis"] = n.axis;
            j["sign"] = n.sign > 0 ? "+" : "-";
            j["c"] = n.c;
            break;
        case Pattern::Op::Box:
            j["op"] = "box";
            j["lo"] = point_json(n.lo);
            j["hi"] = point_json(n.hi);
            break;
        case Pattern::Op::Cells: {
            j["op"] = "cells";
            json a = json::array();
            for (const auto& p : n.cells) a.push_back(point_json(p));
            j["cells"] = a;
            break;
        }
        case Pattern::Op::Orthant:
            j["op"] = "orthant";
            j["corner"] = point_json(n.corner);
            {
                json s = json::array();
                for (int v : n.signs) s.push_back(v > 0 ? "+" : "-");
                j["signs"] = s;
            }
            break;
        case Pattern::Op::Union:
        case Pattern::Op::Intersection: {
            j["op"] = n.op == Pattern::Op::Union ? "union" : "intersection";
            json a = json::array();
            for (const auto& c : n.args) a.push_back(node_json(*c));
            j["args"] = a;
            break;
        }
        case Pattern::Op::Complement:
            j["op"] = "complement";
            j["arg"] = node_json(*n.args[0]);
            break;
        case Pattern::Op::Translate:
            j["op"] = "translate";
            j["offset"] = point_json(n.offset);
            j["arg"] = node_json(*n.args[0]);
            break;
        case Pattern::Op::Extrude:
            j["op"] = "extrude";
            j["axis"] = n.axis;
            j["arg"] = node_json(*n.args[0]);
            break;
        case Pattern::Op::Func:
            throw std::invalid_argument("pattern json: func nodes are not serializable");
    }
    return j;
}

NodePtr node_from_json(const json& j, int dim);

std::vector<NodePtr> args_from_json(const json& j, int dim) {
    std::vector<NodePtr> out;
    for (const auto& a : j) out.push_back(node_from_json(a, dim));
    return out;
}

NodePtr node_from_json(const json& j, int dim) {
    const std::string op = j.at("op").get<std::string>();
    auto n = std::make_shared<Pattern::Node>();
    if (op == "halfspace") {
        n->op = Pattern::Op::Halfspace;
        n->axis = j.at("axis").get<int>();
        if (n->axis < 0 || n->axis >= dim) throw std::invalid_argument("halfspace: bad axis");
        std::string s = j.at("sign").get<std::string>();
        if (s != "+" && s != "-") throw std::invalid_argument("halfspace: bad sign");
        n->sign = s == "+" ? 1 : -1;
        n->c = j.at("c").get<int>();
    } else if (op == "box") {
        n->op = Pattern::Op::Box;
        n->lo = point_from_json(j.at("lo"));
        n->hi = point_from_json(j.at("hi"));
        if (n->lo.dim != dim || n->hi.dim != dim) throw std::invalid_argument("box: bad dim");
    } else if (op == "cells") {
        n->op = Pattern::Op::Cells;
        for (const auto& c : j.at("cells")) {
            Point p = point_from_json(c);
            if (p.dim != dim) throw std::invalid_argument("cells: bad dim");
            n->cells.push_back(p);
        }
        std::sort(n->cells.begin(), n->cells.end());
        n->cells.erase(std::unique(n->cells.begin(), n->cells.end()), n->cells.end());
    } else if (op == "orthant") {
        n->op = Pattern::Op::Orthant;
        n->corner = point_from_json(j.at("corner"));
        if (n->corner.dim != dim) throw std::invalid_argument("orthant: bad dim");
        for (const auto& s : j.at("signs"))
            n->signs.push_back(s.get<std::string>() == "+" ? 1 : -1);
        if (static_cast<int>(n->signs.size()) != dim)
            throw std::invalid_argument("orthant: bad signs");
    } else if (op == "union" || op == "intersection") {
        n->op = op == "union" ? Pattern::Op::Union : Pattern::Op::Intersection;
        n->args = args_from_json(j.at("args"), dim);
        if (n->args.empty()) throw std::invalid_argument(op + ": empty args");
    } else if (op == "complement") {
        n->op = Pattern::Op::Complement;
        n->args.push_back(node_from_json(j.at("arg"), dim));
    } else if (op == "translate") {
        n->op = Pattern::Op::Translate;
        n->offset = point_from_json(j.at("offset"));
        if (n->offset.dim != dim) throw std::invalid_argument("translate: bad dim");
        n->args.push_back(node_from_json(j.at("arg"), dim));
    } else if (op == "extrude") {
        n->op = Pattern::Op::Extrude;
        n->axis = j.at("axis").get<int>();
        if (n->axis < 0 || n->axis >= dim) throw std::invalid_argument("extrude: bad axis");
        n->args.push_back(node_from_json(j.at("arg"), dim - 1));
    } else {
        throw std::invalid_argument("pattern json: unknown op '" + op + "'");
    }
    return n;
}

}  // namespace

std::string Pattern::to_json() const {
    json j;
    j["dim"] = dim_;
    j["expr"] = node_json(*root_);
    return j.dump(2) + "\n";
}

Pattern Pattern::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("pattern json: parse error: ") + e.what());
    }
    int dim = j.at("dim").get<int>();
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("pattern json: bad dim");
    return Pattern(dim, node_from_json(j.at("expr"), dim));
}

Pattern Pattern::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void Pattern::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write pattern file: " + path);
    out << to_json();
}

std::vector<Point> pattern_vertex_boundary(const Pattern& a, const Window& w) {
    std::vector<Point> out;
    w.for_each([&](const Point& p) {
        if (!a.eval(p)) return;
        for (const auto& q : neighbors(p))
            if (!a.eval(q)) {
                out.push_back(p);
                return;
            }
    });
    return out;
}

std::vector<Point> pattern_exterior_boundary(const Pattern& a, const Window& w) {
    std::vector<Point> out;
    w.for_each([&](const Point& p) {
        if (a.eval(p)) return;
        for (const auto& q : neighbors(p))
            if (a.eval(q)) {
                out.push_back(p);
                return;
            }
    });
    return out;
}

int pattern_degree(const Pattern& a, const Point& p) {
    int d = 0;
    for (const auto& q : neighbors(p))
        if (a.eval(q)) ++d;
    return d;
}

}  // namespace latmin
