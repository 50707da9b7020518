#pragma once

#include <string>
#include <vector>

#include "latmin/geometry.hpp"
#include "latmin/rational.hpp"
#include "latmin/vertexset.hpp"

namespace latmin {

/// Rational-valued function on a window closure. Cells may be left undefined;
/// the energy operations require totality on the closure and throw otherwise.
class VertexFunction {
public:
    VertexFunction() = default;
    explicit VertexFunction(const Window& w)
        : win_(w),
          vals_(w.dilated_volume(), Rat(0)),
          defined_(w.dilated_volume(), 0) {}

    static VertexFunction constant(const Window& w, const Rat& v) {
        VertexFunction f(w);
        w.for_each_dilated([&](const Point& p) { f.set(p, v); });
        return f;
    }
    /// Indicator 1_K over K's closure.
    static VertexFunction indicator(const VertexSet& k) {
        VertexFunction f(k.window());
        k.window().for_each_dilated([&](const Point& p) {
            f.set(p, Rat(k.contains_indexed(p) ? 1 : 0));
        });
        return f;
    }

    const Window& window() const { return win_; }

    void set(const Point& p, const Rat& v) {
        auto i = win_.index(p);
        vals_[i] = v;
        defined_[i] = 1;
    }
    bool is_defined(const Point& p) const { return defined_[win_.index(p)] != 0; }
    const Rat& at(const Point& p) const {
        auto i = win_.index(p);
        if (!defined_[i]) throw std::runtime_error("vertex function: undefined at " + p.str());
        return vals_[i];
    }

    /// True when every cell of the true closure U ∪ τU carries a value.
    bool total_on_closure() const {
        bool ok = true;
        win_.for_each_dilated([&](const Point& p) {
            if (win_.contains_closure(p) && !defined_[win_.index(p)]) ok = false;
        });
        return ok;
    }

private:
    Window win_;
    std::vector<Rat> vals_;
    std::vector<uint8_t> defined_;
};

/// J_U(f) = Σ over undirected E_U edges of |f(y) − f(x)|. The paper's ½
/// applies to the doubled directed sum; each undirected edge counts once.
Rat dirichlet_energy(const VertexFunction& f, const Window& u);

/// |∂K ∩ E_U|.
long long perimeter(const VertexSet& k, const Window& u);

/// Strict superlevel set {f > t} over the closure.
VertexSet superlevel(const VertexFunction& f, const Rat& t);

struct CoareaResult {
    Rat lhs;   // J_U(f)
    Rat rhs;   // Σ (v_{i+1}-v_i) · |∂{f>v_i} ∩ E_U| over sorted distinct values
    bool equal;
};

/// Exact evaluation of the discrete co-area identity; the threshold integral
/// is a finite sum since the integrand is a step function in t.
CoareaResult coarea_check(const VertexFunction& f, const Window& u);

// --- FUNC2 text format ---------------------------------------------------
// Header `FUNC2 x0 y0 w h`, then w*h rationals `p/q` row-major, top row
// (y = y0+h-1) first, matching GRID2's screen orientation.

std::string func2_emit(const VertexFunction& f);
VertexFunction func2_parse(const std::string& text);

}  // namespace latmin
