#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latmin/boundary.hpp"
#include "latmin/catalog.hpp"
#include "latmin/currents.hpp"
#include "latmin/energy.hpp"
#include "latmin/enumerate.hpp"
#include "latmin/mincut.hpp"
#include "latmin/props.hpp"
#include "latmin/render.hpp"
#include "latmin/skeleton.hpp"

namespace py = pybind11;
using namespace latmin;

namespace {

Point point_of(const std::vector<int>& v) {
    if (v.empty() || v.size() > kMaxDim) throw std::invalid_argument("bad point");
    return Point::of(static_cast<int>(v.size()), v.data());
}

std::vector<int> point_list(const Point& p) {
    return std::vector<int>(p.c.begin(), p.c.begin() + p.dim);
}

py::dict certify_dict(const CertifyReport& rep) {
    py::dict d;
    d["refuted"] = rep.refuted;
    d["refuted_at"] = rep.refuted_at;
    d["certified_to"] = rep.certified_to;
    py::list rows;
    for (const auto& rr : rep.per_radius) {
        py::dict row;
        if (std::holds_alternative<Certificate>(rr)) {
            const auto& c = std::get<Certificate>(rr);
            row["kind"] = "certificate";
            row["radius"] = c.radius;
            row["hash"] = c.hash;
        } else {
            const auto& r = std::get<Refutation>(rr);
            row["kind"] = "refutation";
            row["radius"] = r.radius;
            row["pattern_perimeter"] = r.pattern_perimeter;
            row["witness_perimeter"] = r.witness_perimeter;
            row["witness_grid"] = grid2_emit(grid2_of(r.witness));
        }
        rows.append(row);
    }
    d["per_radius"] = rows;
    return d;
}

}  // namespace

PYBIND11_MODULE(_latmin, m) {
    m.doc() = "lattice least-perimeter solving and minimality certificates";

    py::class_<Pattern>(m, "Pattern")
        .def_static("from_json", &Pattern::from_json)
        .def("to_json", &Pattern::to_json)
        .def("dim", &Pattern::dim)
        .def("eval", [](const Pattern& p, const std::vector<int>& x) {
            return p.eval(point_of(x));
        })
        .def_static("complement", &Pattern::complement)
        .def_static("extrude", &Pattern::extrude)
        .def_static("halfspace", &Pattern::halfspace)
        .def_static("box", [](const std::vector<int>& lo, const std::vector<int>& hi) {
            return Pattern::box(point_of(lo), point_of(hi));
        })
        .def_static("orthant", [](const std::vector<int>& corner, const std::vector<int>& signs) {
            return Pattern::orthant(point_of(corner), signs);
        })
        .def_static("union_of", &Pattern::union_of)
        .def_static("intersection_of", &Pattern::intersection_of)
        .def_static("cells", [](int dim, const std::vector<std::vector<int>>& pts) {
            std::vector<Point> ps;
            for (const auto& v : pts) ps.push_back(point_of(v));
            return Pattern::cells(dim, std::move(ps));
        });

    m.def("solve_grid", [](const std::string& phi_text) {
        VertexSet trace = vertexset_of_grid(grid2_parse(phi_text));
        auto res = least_perimeter_solve(trace.window(), trace);
        py::dict d;
        d["value"] = res.value;
        d["optimizer_grid"] = grid2_emit(grid2_of(res.k_opt));
        return d;
    }, "least-perimeter solve; the trace is the tau row of the grid's window");

    m.def("is_least_perimeter_grid", [](const std::string& grid_text) {
        VertexSet k = vertexset_of_grid(grid2_parse(grid_text));
        return is_least_perimeter(k, k.window());
    });

    m.def("certify", [](const Pattern& a, const std::vector<int>& center, int r_max) {
        return certify_dict(certify_up_to_radius(a, point_of(center), r_max));
    }, py::arg("pattern"), py::arg("center"), py::arg("r_max"));

    m.def("certificate_text", [](const Pattern& a, const std::vector<int>& center, int r) {
        auto rep = certify_up_to_radius(a, point_of(center), r);
        if (rep.refuted || rep.per_radius.empty()) throw std::runtime_error("pattern refuted");
        return std::get<Certificate>(rep.per_radius.back()).serialize();
    });

    m.def("validate_certificate", [](const std::string& text, const Pattern& a) {
        return validate_certificate(Certificate::parse(text), a);
    });

    m.def("dirichlet_energy", [](const std::string& func2_text) {
        VertexFunction f = func2_parse(func2_text);
        return rat_str(dirichlet_energy(f, f.window()));
    });

    m.def("coarea_check", [](const std::string& func2_text) {
        VertexFunction f = func2_parse(func2_text);
        auto res = coarea_check(f, f.window());
        return py::make_tuple(rat_str(res.lhs), rat_str(res.rhs), res.equal);
    });

    m.def("catalog_list", [] {
        py::list out;
        for (const auto& f : catalog()) {
            py::dict d;
            d["id"] = f.id;
            d["params"] = f.param_names;
            d["constraint"] = f.constraint_text;
            d["geometry"] = f.reconstruction;
            out.append(d);
        }
        return out;
    });

    m.def("catalog_gen", [](const std::string& id, const Params& params, bool force) {
        return generate(id, params, force);
    }, py::arg("id"), py::arg("params"), py::arg("force") = false);

    m.def("registry_names", [] {
        std::vector<std::string> names;
        for (const auto& e : registry_patterns()) names.push_back(e.name);
        return names;
    });

    m.def("skeleton_stats", [](const Pattern& a, int r) {
        Point c;
        c.dim = a.dim();
        auto st = rough_isometry_stats(a, c, r);
        py::dict d;
        d["vol_ratio"] = st.vol_ratio;
        d["bdy_ratio"] = st.bdy_ratio;
        d["max_skeleton_dist"] = st.max_skeleton_dist;
        d["c1"] = st.c1_bound;
        d["mn_empty"] = st.mn_empty;
        return d;
    });

    m.def("props_all", [](const Pattern& a, int window_radius) {
        Point c;
        c.dim = a.dim();
        Window w = Window::ball(c, window_radius);
        std::vector<std::string> lines;
        lines.push_back(check_min_degree(a, w).line("pattern"));
        lines.push_back(check_convexity(a, w).line("pattern"));
        lines.push_back(check_no_parallel_rays(a, w).line("pattern"));
        lines.push_back(check_slab_refutation(a, c, window_radius).line("pattern"));
        return lines;
    });

    m.def("enumerate_candidates", [](int r, long long budget) {
        auto res = enumerate_candidates(r, budget);
        py::dict d;
        d["radius"] = res.radius;
        d["survivors"] = res.survivors;
        d["local_forms"] = res.local_forms.size();
        d["isolated_geodesic_path3"] = res.with_isolated_geodesic_path3;
        d["nonsquare_loop"] = res.with_nonsquare_loop;
        d["partial"] = res.budget_exhausted;
        return d;
    }, py::arg("r"), py::arg("budget") = 400000000LL);

    m.def("render_ascii", [](const Pattern& a, const std::vector<int>& lo,
                             const std::vector<int>& hi) {
        return render_ascii(a, Window(point_of(lo), point_of(hi)));
    });

    m.def("neighbors", [](const std::vector<int>& p) {
        std::vector<std::vector<int>> out;
        for (const auto& q : neighbors(point_of(p))) out.push_back(point_list(q));
        return out;
    });
}
