#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "latmin/boundary.hpp"
#include "latmin/catalog.hpp"
#include "latmin/currents.hpp"
#include "latmin/energy.hpp"
#include "latmin/enumerate.hpp"
#include "latmin/mincut.hpp"
#include "latmin/props.hpp"
#include "latmin/render.hpp"
#include "latmin/skeleton.hpp"

using namespace latmin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Window window_from_flags(const std::vector<int>& w) {
    if (w.size() % 2 != 0 || w.empty()) throw std::runtime_error("--window needs lo.. hi..");
    int dim = static_cast<int>(w.size()) / 2;
    Point lo = Point::of(dim, w.data());
    Point hi = Point::of(dim, w.data() + dim);
    return Window(lo, hi);
}

Point origin(int dim) {
    Point p;
    p.dim = dim;
    return p;
}

int worker_count() {
    if (const char* env = std::getenv("LATMIN_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latmin: least-perimeter solving, minimality certificates and the Z^2 "
                 "catalog on integer lattices"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "least-perimeter Dirichlet solve on a window");
    std::vector<int> solve_window;
    std::string solve_phi, solve_out;
    solve->add_option("--window", solve_window, "lo coords then hi coords")->required();
    solve->add_option("--phi", solve_phi, "GRID2 file fixing the trace on tau(U)")->required();
    solve->add_option("--out", solve_out, "write the optimizer as GRID2");
    solve->callback([&] {
        Window u = window_from_flags(solve_window);
        VertexSet trace = vertexset_of_grid(grid2_parse(slurp(solve_phi)));
        auto res = least_perimeter_solve(u, trace);
        std::cout << "value " << res.value << "\n";
        if (!solve_out.empty()) spit(solve_out, grid2_emit(grid2_of(res.k_opt)));
    });

    // --- certify ---
    auto* certify = app.add_subcommand("certify", "certify or refute a pattern per radius");
    std::string cert_pattern, cert_dir, cert_witness;
    int cert_radius = 8;
    std::vector<int> cert_center;
    certify->add_option("--pattern", cert_pattern, "pattern JSON file")->required();
    certify->add_option("--radius", cert_radius, "largest window radius");
    certify->add_option("--center", cert_center, "center coordinates (default origin)");
    certify->add_option("--cert-dir", cert_dir, "write CERT files into this directory");
    certify->add_option("--witness", cert_witness, "write the refutation witness grid here");
    certify->callback([&] {
        Pattern a = Pattern::from_json(slurp(cert_pattern));
        Point c = cert_center.empty() ? origin(a.dim())
                                      : Point::of(a.dim(), cert_center.data());
        auto rep = certify_up_to_radius(a, c, cert_radius, cert_pattern);
        for (const auto& rr : rep.per_radius) {
            if (std::holds_alternative<Certificate>(rr)) {
                const auto& ct = std::get<Certificate>(rr);
                std::cout << "CERT r=" << ct.radius << " edges=" << ct.current.edges.size()
                          << " hash=" << std::hex << ct.hash << std::dec << "\n";
                if (!cert_dir.empty())
                    spit(cert_dir + "/r" + std::to_string(ct.radius) + ".cert", ct.serialize());
            } else {
                const auto& rf = std::get<Refutation>(rr);
                std::cout << "REFUTED r=" << rf.radius << " pattern-perimeter="
                          << rf.pattern_perimeter << " witness-perimeter="
                          << rf.witness_perimeter << "\n";
                if (!cert_witness.empty() && a.dim() == 2)
                    spit(cert_witness, grid2_emit(grid2_of(rf.witness)));
                exit_code = kExitRefuted;
            }
        }
        if (!rep.refuted)
            std::cout << "certified to radius " << rep.certified_to
                      << " (evidence, not a proof of minimality)\n";
    });

    // --- energy / coarea ---
    auto* energy = app.add_subcommand("energy", "1-Dirichlet energy of a FUNC2 function");
    std::string energy_func;
    energy->add_option("--func", energy_func, "FUNC2 file")->required();
    energy->callback([&] {
        VertexFunction f = func2_parse(slurp(energy_func));
        std::cout << "J " << rat_str(dirichlet_energy(f, f.window())) << "\n";
    });

    auto* coarea = app.add_subcommand("coarea", "co-area identity check for a FUNC2 function");
    std::string coarea_func;
    coarea->add_option("--func", coarea_func, "FUNC2 file")->required();
    coarea->callback([&] {
        VertexFunction f = func2_parse(slurp(coarea_func));
        auto res = coarea_check(f, f.window());
        std::cout << "lhs " << rat_str(res.lhs) << "\nrhs " << rat_str(res.rhs) << "\nequal "
                  << (res.equal ? "true" : "false") << "\n";
        if (!res.equal) exit_code = kExitRefuted;
    });

    // --- catalog ---
    auto* cat = app.add_subcommand("catalog", "the Z^2 family catalog");
    auto* cat_list = cat->add_subcommand("list", "list families and registry instances");
    cat_list->callback([&] {
        for (const auto& f : latmin::catalog()) {
            std::cout << f.id << " params=[";
            for (size_t i = 0; i < f.param_names.size(); ++i)
                std::cout << (i ? "," : "") << f.param_names[i];
            std::cout << "] constraint=\"" << f.constraint_text << "\" geometry="
                      << f.reconstruction << "\n";
        }
    });
    auto* cat_gen = cat->add_subcommand("gen", "generate a family member");
    std::string gen_id, gen_out;
    int gh = 0, gd = 0, ga = 0, gb = 0;
    bool gen_force = false;
    cat_gen->add_option("family", gen_id, "family id, e.g. F3-2-1")->required();
    auto* oh = cat_gen->add_option("--h", gh);
    auto* od = cat_gen->add_option("--d", gd);
    auto* oa = cat_gen->add_option("--a", ga);
    auto* ob = cat_gen->add_option("--b", gb);
    cat_gen->add_option("--out", gen_out, "pattern JSON output path");
    cat_gen->add_flag("--force", gen_force, "skip the caption constraint (counterexamples)");
    cat_gen->callback([&] {
        Params params;
        if (*oh) params["h"] = gh;
        if (*od) params["d"] = gd;
        if (*oa) params["a"] = ga;
        if (*ob) params["b"] = gb;
        Pattern p = generate(gen_id, params, gen_force);
        if (gen_out.empty())
            std::cout << p.to_json();
        else
            p.save_file(gen_out);
    });
    auto* cat_verify = cat->add_subcommand("verify", "certify registry patterns");
    std::string verify_id;
    int verify_radius = 12;
    bool verify_all = false;
    cat_verify->add_option("--id", verify_id, "single registry entry (family id)");
    cat_verify->add_flag("--all", verify_all, "verify the whole registry");
    cat_verify->add_option("--radius", verify_radius);
    cat_verify->callback([&] {
        auto entries = registry_patterns();
        std::vector<const RegistryEntry*> todo;
        for (const auto& e : entries)
            if (verify_all || e.family_id == verify_id) todo.push_back(&e);
        if (todo.empty()) throw std::runtime_error("nothing selected; use --all or --id");
        std::vector<std::string> lines(todo.size());
        int nthreads = std::min<int>(worker_count(), static_cast<int>(todo.size()));
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (size_t i = next++; i < todo.size(); i = next++) {
                const auto& rep = registry_certify(*todo[i], verify_radius);
                std::ostringstream line;
                if (rep.refuted) {
                    line << todo[i]->name << " REFUTED at r=" << rep.refuted_at;
                    exit_code = kExitRefuted;
                } else {
                    line << todo[i]->name << " certified to r=" << rep.certified_to;
                }
                lines[i] = line.str();
            }
        };
        std::vector<std::thread> pool;
        for (int k = 1; k < nthreads; ++k) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        for (const auto& l : lines) std::cout << l << "\n";
    });

    // --- skeleton ---
    auto* skel = app.add_subcommand("skeleton", "k-skeletons and skeleton statistics");
    std::string skel_pattern;
    int skel_k = -1, skel_stats_r = 0;
    std::vector<int> skel_window;
    bool skel_check3d = false;
    int skel_check_r = 6;
    skel->add_option("--pattern", skel_pattern)->required();
    skel->add_option("--k", skel_k, "emit M^k over --window as a grid (dim 2)");
    skel->add_option("--window", skel_window);
    skel->add_option("--stats", skel_stats_r, "rough-isometry stats at this radius");
    skel->add_flag("--check3d", skel_check3d, "check the M3 u M2 reduction");
    skel->add_option("--check3d-radius", skel_check_r);
    skel->callback([&] {
        Pattern a = Pattern::from_json(slurp(skel_pattern));
        if (skel_k >= 0) {
            Window w = window_from_flags(skel_window);
            VertexSet v = k_skeleton(a, skel_k, w);
            if (a.dim() == 2)
                std::cout << grid2_emit(grid2_of(v));
            else
                std::cout << "cells " << v.count_window() << "\n";
        }
        if (skel_stats_r > 0) {
            auto st = rough_isometry_stats(a, origin(a.dim()), skel_stats_r);
            std::cout << "r=" << skel_stats_r << " vol_ratio=" << st.vol_ratio
                      << " bdy_ratio=" << st.bdy_ratio
                      << " max_skeleton_dist=" << st.max_skeleton_dist
                      << " c1=" << st.c1_bound << " mn_empty=" << st.mn_empty << "\n";
        }
        if (skel_check3d) {
            auto rep = check_skeleton_reduction_3d(a, skel_check_r);
            std::cout << "base certified_to=" << rep.base.certified_to << "\n";
            std::cout << "m3um2 " << (rep.reduced.refuted ? "REFUTED" : "certified") << " to r="
                      << rep.reduced.certified_to << " restriction_valid="
                      << rep.restriction_valid << "\n";
            if (rep.reduced.refuted) exit_code = kExitRefuted;
        }
    });

    // --- props ---
    auto* props = app.add_subcommand("props", "structural property suite");
    std::string props_pattern;
    int props_window = 10;
    bool props_all = false;
    props->add_option("--pattern", props_pattern)->required();
    props->add_option("--window", props_window, "ball radius for the checks");
    props->add_flag("--all", props_all, "run every checker");
    props->callback([&] {
        Pattern a = Pattern::from_json(slurp(props_pattern));
        (void)props_all;
        Window w = Window::ball(origin(a.dim()), props_window);
        std::vector<PropertyReport> reports;
        reports.push_back(check_min_degree(a, w));
        reports.push_back(check_convexity(a, w));
        reports.push_back(check_no_parallel_rays(a, w));
        std::mt19937 rng(12345);
        for (int axis = 0; axis < a.dim(); ++axis) {
            auto omega1 = random_admissible_omega1(a, axis, w, rng);
            if (!omega1.empty())
                reports.push_back(check_max_principle(a, axis, omega1, w));
        }
        reports.push_back(check_slab_refutation(a, origin(a.dim()), props_window));
        auto growth = growth_report(a, origin(a.dim()), props_window);
        for (const auto& rep : reports) {
            std::cout << rep.line(props_pattern) << "\n";
            if (rep.verdict == Verdict::Violated) exit_code = kExitRefuted;
        }
        for (const auto& pt : growth.series)
            std::cout << "GROWTH r=" << pt.radius << " boundary=" << pt.boundary
                      << " volume=" << pt.volume << "\n";
        if (!growth.upper_bound_ok || !growth.boundary_nonempty_ok) exit_code = kExitRefuted;
    });

    // --- enumerate ---
    auto* enumc = app.add_subcommand("enumerate", "sweep certified window patterns");
    int enum_r = 1;
    long long enum_budget = 400000000LL;
    enumc->add_option("--radius", enum_r)->required();
    enumc->add_option("--budget", enum_budget, "node budget (partial result when exhausted)");
    enumc->callback([&] {
        auto res = enumerate_candidates(enum_r, enum_budget);
        std::cout << "radius " << res.radius << "\nnodes " << res.nodes << "\nleaves "
                  << res.leaves_checked << "\nsurvivors " << res.survivors << "\nlocal_forms "
                  << res.local_forms.size() << "\nisolated_geodesic_path3 "
                  << res.with_isolated_geodesic_path3 << "\nsquare_loop " << res.with_square_loop
                  << "\nnonsquare_loop " << res.with_nonsquare_loop << "\n";
        if (res.budget_exhausted) std::cout << "PARTIAL (budget exhausted)\n";
    });

    // --- render ---
    auto* render = app.add_subcommand("render", "ASCII or SVG display of a pattern window");
    std::string render_pattern, render_svg_path;
    std::vector<int> render_window;
    bool render_currents = false;
    render->add_option("--pattern", render_pattern)->required();
    render->add_option("--window", render_window)->required();
    render->add_option("--svg", render_svg_path, "SVG output path");
    render->add_flag("--currents", render_currents, "overlay a minimal current if one exists");
    render->callback([&] {
        Pattern a = Pattern::from_json(slurp(render_pattern));
        Window w = window_from_flags(render_window);
        if (render_svg_path.empty()) {
            std::cout << render_ascii(a, w);
            return;
        }
        std::optional<Current> cur;
        if (render_currents) cur = find_minimal_current(VertexSet::from_pattern(a, w), w);
        spit(render_svg_path, render_svg(a, w, cur));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
