#include "liext/extending.hpp"

#include <utility>

namespace liext {

namespace {

void require_shape(const Tensor3& t, std::size_t d0, std::size_t d1, std::size_t d2,
                   const FieldSpec& field, const char* what) {
    if (t.d0() != d0 || t.d1() != d1 || t.d2() != d2) {
        throw Error(std::string(what) + " table has the wrong shape");
    }
    if (t.field() != field) {
        throw Error(std::string(what) + " table is over the wrong field");
    }
}

/// Copies the first witness of a failed sub-report under a single label.
void adopt_failure(AxiomReport& rep, const std::string& label, const AxiomReport& sub) {
    for (const auto& c : sub.checks()) {
        if (!c.passed) {
            if (c.witness) {
                rep.fail(label, c.witness->tuple, c.witness->defect);
            } else {
                rep.fail(label, {}, {});
            }
            return;
        }
    }
}

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + n); }
Vec tail(const Vec& v, std::size_t n) { return Vec(v.begin() + n, v.end()); }

}  // namespace

ExtendingDatum::ExtendingDatum(LieAlgebra g, std::size_t dimv, Tensor3 laction, Tensor3 raction,
                               Tensor3 cocycle, Tensor3 vbracket)
    : g_(std::move(g)),
      dimv_(dimv),
      laction_(std::move(laction)),
      raction_(std::move(raction)),
      cocycle_(std::move(cocycle)),
      vbracket_(std::move(vbracket)) {
    const std::size_t n = g_.dim();
    const std::size_t m = dimv_;
    require_shape(laction_, m, n, m, g_.field(), "laction");
    require_shape(raction_, m, n, n, g_.field(), "raction");
    require_shape(cocycle_, m, m, n, g_.field(), "cocycle");
    require_shape(vbracket_, m, m, m, g_.field(), "vbracket");
}

ExtendingDatum ExtendingDatum::trivial(const LieAlgebra& g, std::size_t dimv) {
    const std::size_t n = g.dim();
    const FieldSpec& f = g.field();
    return ExtendingDatum(g, dimv, Tensor3(dimv, n, dimv, f), Tensor3(dimv, n, n, f),
                          Tensor3(dimv, dimv, n, f), Tensor3(dimv, dimv, dimv, f));
}

Vec ExtendingDatum::lact(std::size_t x, const Vec& gv) const {
    Vec out = zero_vec(dimv_, field());
    for (std::size_t k = 0; k < g_.dim(); ++k) {
        if (!gv[k].is_zero()) out = axpy(out, gv[k], laction_.fiber(x, k));
    }
    return out;
}

Vec ExtendingDatum::lact(const Vec& xv, std::size_t i) const {
    Vec out = zero_vec(dimv_, field());
    for (std::size_t y = 0; y < dimv_; ++y) {
        if (!xv[y].is_zero()) out = axpy(out, xv[y], laction_.fiber(y, i));
    }
    return out;
}

Vec ExtendingDatum::lact(const Vec& xv, const Vec& gv) const {
    Vec out = zero_vec(dimv_, field());
    for (std::size_t y = 0; y < dimv_; ++y) {
        if (!xv[y].is_zero()) out = axpy(out, xv[y], lact(y, gv));
    }
    return out;
}

Vec ExtendingDatum::ract(std::size_t x, const Vec& gv) const {
    Vec out = zero_vec(g_.dim(), field());
    for (std::size_t k = 0; k < g_.dim(); ++k) {
        if (!gv[k].is_zero()) out = axpy(out, gv[k], raction_.fiber(x, k));
    }
    return out;
}

Vec ExtendingDatum::ract(const Vec& xv, std::size_t i) const {
    Vec out = zero_vec(g_.dim(), field());
    for (std::size_t y = 0; y < dimv_; ++y) {
        if (!xv[y].is_zero()) out = axpy(out, xv[y], raction_.fiber(y, i));
    }
    return out;
}

Vec ExtendingDatum::ract(const Vec& xv, const Vec& gv) const {
    Vec out = zero_vec(g_.dim(), field());
    for (std::size_t y = 0; y < dimv_; ++y) {
        if (!xv[y].is_zero()) out = axpy(out, xv[y], ract(y, gv));
    }
    return out;
}

Vec ExtendingDatum::coc(std::size_t x, const Vec& yv) const {
    Vec out = zero_vec(g_.dim(), field());
    for (std::size_t z = 0; z < dimv_; ++z) {
        if (!yv[z].is_zero()) out = axpy(out, yv[z], cocycle_.fiber(x, z));
    }
    return out;
}

Vec ExtendingDatum::coc(const Vec& xv, std::size_t y) const {
    Vec out = zero_vec(g_.dim(), field());
    for (std::size_t z = 0; z < dimv_; ++z) {
        if (!xv[z].is_zero()) out = axpy(out, xv[z], cocycle_.fiber(z, y));
    }
    return out;
}

Vec ExtendingDatum::coc(const Vec& xv, const Vec& yv) const {
    Vec out = zero_vec(g_.dim(), field());
    for (std::size_t x = 0; x < dimv_; ++x) {
        if (!xv[x].is_zero()) out = axpy(out, xv[x], coc(x, yv));
    }
    return out;
}

Vec ExtendingDatum::vbr(std::size_t x, const Vec& yv) const {
    Vec out = zero_vec(dimv_, field());
    for (std::size_t z = 0; z < dimv_; ++z) {
        if (!yv[z].is_zero()) out = axpy(out, yv[z], vbracket_.fiber(x, z));
    }
    return out;
}

Vec ExtendingDatum::vbr(const Vec& xv, std::size_t y) const {
    Vec out = zero_vec(dimv_, field());
    for (std::size_t z = 0; z < dimv_; ++z) {
        if (!xv[z].is_zero()) out = axpy(out, xv[z], vbracket_.fiber(z, y));
    }
    return out;
}

Vec ExtendingDatum::vbr(const Vec& xv, const Vec& yv) const {
    Vec out = zero_vec(dimv_, field());
    for (std::size_t x = 0; x < dimv_; ++x) {
        if (!xv[x].is_zero()) out = axpy(out, xv[x], vbr(x, yv));
    }
    return out;
}

bool ExtendingDatum::operator==(const ExtendingDatum& rhs) const {
    return g_ == rhs.g_ && dimv_ == rhs.dimv_ && laction_ == rhs.laction_ &&
           raction_ == rhs.raction_ && cocycle_ == rhs.cocycle_ && vbracket_ == rhs.vbracket_;
}

AxiomReport check_extending_structure(const ExtendingDatum& d) {
    const LieAlgebra& g = d.g();
    const std::size_t n = g.dim();
    const std::size_t m = d.dimv();
    const FieldSpec& f = d.field();

    AxiomReport rep;
    for (const char* label : {"LE1", "LE2", "LE3", "LE4", "LE5", "LE6", "LE7"}) {
        rep.begin(label);
    }

    // LE1: f and {-,-} are alternating. Diagonal entries must vanish and the
    // two triangles must cancel, which pins the maps on every vector, not
    // just on basis vectors.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x; y < m; ++y) {
            Vec fd = x == y ? d.cocycle().fiber(x, x)
                            : add(d.cocycle().fiber(x, y), d.cocycle().fiber(y, x));
            if (!is_zero_vec(fd)) rep.fail("LE1", {x, y}, fd);
            Vec vd = x == y ? d.vbracket().fiber(x, x)
                            : add(d.vbracket().fiber(x, y), d.vbracket().fiber(y, x));
            if (!is_zero_vec(vd)) rep.fail("LE1", {x, y}, vd);
        }
    }

    // LE2: x <| [g,h] = (x <| g) <| h - (x <| h) <| g.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec lhs = d.lact(x, g.bracket_basis(i, j));
                Vec rhs = sub(d.lact(d.laction().fiber(x, i), j),
                              d.lact(d.laction().fiber(x, j), i));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("LE2", {x, i, j}, defect);
            }
        }
    }

    // LE3: x |> [g,h] = [x|>g, h] + [g, x|>h] + (x<|g) |> h - (x<|h) |> g.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec lhs = d.ract(x, g.bracket_basis(i, j));
                Vec rhs = g.bracket(d.raction().fiber(x, i), unit_vec(n, j, f));
                rhs = add(rhs, g.bracket(unit_vec(n, i, f), d.raction().fiber(x, j)));
                rhs = add(rhs, d.ract(d.laction().fiber(x, i), j));
                rhs = sub(rhs, d.ract(d.laction().fiber(x, j), i));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("LE3", {x, i, j}, defect);
            }
        }
    }

    // LE4: {x,y} <| g = {x, y<|g} + {x<|g, y} + x <| (y|>g) - y <| (x|>g).
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = d.lact(d.vbracket().fiber(x, y), i);
                Vec rhs = d.vbr(x, d.laction().fiber(y, i));
                rhs = add(rhs, d.vbr(d.laction().fiber(x, i), y));
                rhs = add(rhs, d.lact(x, d.raction().fiber(y, i)));
                rhs = sub(rhs, d.lact(y, d.raction().fiber(x, i)));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("LE4", {x, y, i}, defect);
            }
        }
    }

    // LE5: {x,y} |> g = x|>(y|>g) - y|>(x|>g) + [g, f(x,y)] + f(x, y<|g) + f(x<|g, y).
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = d.ract(d.vbracket().fiber(x, y), i);
                Vec rhs = d.ract(x, d.raction().fiber(y, i));
                rhs = sub(rhs, d.ract(y, d.raction().fiber(x, i)));
                rhs = add(rhs, g.bracket(unit_vec(n, i, f), d.cocycle().fiber(x, y)));
                rhs = add(rhs, d.coc(x, d.laction().fiber(y, i)));
                rhs = add(rhs, d.coc(d.laction().fiber(x, i), y));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("LE5", {x, y, i}, defect);
            }
        }
    }

    // LE6: cyclic sum of f(x, {y,z}) + x |> f(y,z) over (x,y,z).
    // LE7: cyclic sum of {x, {y,z}} + x <| f(y,z) over (x,y,z).
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t z = y + 1; z < m; ++z) {
                Vec s6 = d.coc(x, d.vbracket().fiber(y, z));
                s6 = add(s6, d.coc(y, d.vbracket().fiber(z, x)));
                s6 = add(s6, d.coc(z, d.vbracket().fiber(x, y)));
                s6 = add(s6, d.ract(x, d.cocycle().fiber(y, z)));
                s6 = add(s6, d.ract(y, d.cocycle().fiber(z, x)));
                s6 = add(s6, d.ract(z, d.cocycle().fiber(x, y)));
                if (!is_zero_vec(s6)) rep.fail("LE6", {x, y, z}, s6);

                Vec s7 = d.vbr(x, d.vbracket().fiber(y, z));
                s7 = add(s7, d.vbr(y, d.vbracket().fiber(z, x)));
                s7 = add(s7, d.vbr(z, d.vbracket().fiber(x, y)));
                s7 = add(s7, d.lact(x, d.cocycle().fiber(y, z)));
                s7 = add(s7, d.lact(y, d.cocycle().fiber(z, x)));
                s7 = add(s7, d.lact(z, d.cocycle().fiber(x, y)));
                if (!is_zero_vec(s7)) rep.fail("LE7", {x, y, z}, s7);
            }
        }
    }

    return rep;
}

LieAlgebra assemble_unified(const ExtendingDatum& d) {
    const LieAlgebra& g = d.g();
    const std::size_t n = g.dim();
    const std::size_t m = d.dimv();
    const std::size_t total = n + m;
    Tensor3 c(total, total, total, d.field());

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = g.sc().at(i, j, k);
        }
    }

    // [(e_i, 0), (0, x)] = (-(x |> e_i), -(x <| e_i)) and its mirror.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < m; ++x) {
            const Vec rg = d.raction().fiber(x, i);
            const Vec lg = d.laction().fiber(x, i);
            for (std::size_t k = 0; k < n; ++k) {
                c.at(i, n + x, k) = -rg[k];
                c.at(n + x, i, k) = rg[k];
            }
            for (std::size_t z = 0; z < m; ++z) {
                c.at(i, n + x, n + z) = -lg[z];
                c.at(n + x, i, n + z) = lg[z];
            }
        }
    }

    // [(0, x), (0, y)] = (f(x,y), {x,y}), copied for every ordered pair so
    // that a non-alternating raw table shows up verbatim in the result.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            const Vec fg = d.cocycle().fiber(x, y);
            const Vec fv = d.vbracket().fiber(x, y);
            for (std::size_t k = 0; k < n; ++k) c.at(n + x, n + y, k) = fg[k];
            for (std::size_t z = 0; z < m; ++z) c.at(n + x, n + y, n + z) = fv[z];
        }
    }

    return LieAlgebra::from_tensor(g.name() + ".uni" + std::to_string(m), std::move(c));
}

LieAlgebra unified_product(const ExtendingDatum& d) {
    AxiomReport rep = check_extending_structure(d);
    if (!rep.passed()) throw AxiomError("unified product", std::move(rep));
    return assemble_unified(d);
}

AxiomReport check_twisted_data(const LieAlgebra& g, const LieAlgebra& v,
                               const Tensor3& cocycle) {
    const std::size_t n = g.dim();
    const std::size_t m = v.dim();
    if (v.field() != g.field()) throw Error("factors are over different fields");
    require_shape(cocycle, m, m, n, g.field(), "cocycle");

    AxiomReport rep;
    for (const char* label : {"VLIE", "CC1", "CC2", "CC3"}) rep.begin(label);

    adopt_failure(rep, "VLIE", check_lie(v));

    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x; y < m; ++y) {
            Vec fd = x == y ? cocycle.fiber(x, x) : add(cocycle.fiber(x, y), cocycle.fiber(y, x));
            if (!is_zero_vec(fd)) rep.fail("CC1", {x, y}, fd);
        }
    }

    // CC2: every value of f is central in g.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t i = 0; i < n; ++i) {
                Vec defect = g.bracket(unit_vec(n, i, g.field()), cocycle.fiber(x, y));
                if (!is_zero_vec(defect)) rep.fail("CC2", {x, y, i}, defect);
            }
        }
    }

    // CC3: f(x,{y,z}) + f(y,{z,x}) + f(z,{x,y}) = 0.
    ExtendingDatum shell(g, m, Tensor3(m, n, m, g.field()), Tensor3(m, n, n, g.field()),
                         cocycle, v.sc());
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t z = y + 1; z < m; ++z) {
                Vec s = shell.coc(x, v.bracket_basis(y, z));
                s = add(s, shell.coc(y, v.bracket_basis(z, x)));
                s = add(s, shell.coc(z, v.bracket_basis(x, y)));
                if (!is_zero_vec(s)) rep.fail("CC3", {x, y, z}, s);
            }
        }
    }

    return rep;
}

LieAlgebra twisted_product(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& cocycle) {
    AxiomReport rep = check_twisted_data(g, v, cocycle);
    if (!rep.passed()) throw AxiomError("twisted product", std::move(rep));
    const std::size_t n = g.dim();
    const std::size_t m = v.dim();
    ExtendingDatum d(g, m, Tensor3(m, n, m, g.field()), Tensor3(m, n, n, g.field()), cocycle,
                     v.sc());
    return assemble_unified(d).renamed(g.name() + ".tw" + std::to_string(m));
}

AxiomReport check_crossed_system(const LieAlgebra& g, const LieAlgebra& v,
                                 const Tensor3& raction, const Tensor3& cocycle) {
    const std::size_t n = g.dim();
    const std::size_t m = v.dim();
    if (v.field() != g.field()) throw Error("factors are over different fields");
    require_shape(raction, m, n, n, g.field(), "raction");
    require_shape(cocycle, m, m, n, g.field(), "cocycle");

    AxiomReport rep;
    for (const char* label : {"VLIE", "CS1", "CS2", "CS3", "CS4"}) rep.begin(label);

    adopt_failure(rep, "VLIE", check_lie(v));

    ExtendingDatum d(g, m, Tensor3(m, n, m, g.field()), raction, cocycle, v.sc());
    const FieldSpec& f = g.field();

    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x; y < m; ++y) {
            Vec fd = x == y ? cocycle.fiber(x, x) : add(cocycle.fiber(x, y), cocycle.fiber(y, x));
            if (!is_zero_vec(fd)) rep.fail("CS1", {x, y}, fd);
        }
    }

    // CS2: x |> [g,h] = [x|>g, h] + [g, x|>h].
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec lhs = d.ract(x, g.bracket_basis(i, j));
                Vec rhs = g.bracket(raction.fiber(x, i), unit_vec(n, j, f));
                rhs = add(rhs, g.bracket(unit_vec(n, i, f), raction.fiber(x, j)));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("CS2", {x, i, j}, defect);
            }
        }
    }

    // CS3: {x,y} |> g = x|>(y|>g) - y|>(x|>g) + [g, f(x,y)].
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = d.ract(v.bracket_basis(x, y), i);
                Vec rhs = d.ract(x, raction.fiber(y, i));
                rhs = sub(rhs, d.ract(y, raction.fiber(x, i)));
                rhs = add(rhs, g.bracket(unit_vec(n, i, f), cocycle.fiber(x, y)));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("CS3", {x, y, i}, defect);
            }
        }
    }

    // CS4: cyclic sum of f(x, {y,z}) + x |> f(y,z).
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t z = y + 1; z < m; ++z) {
                Vec s = d.coc(x, v.bracket_basis(y, z));
                s = add(s, d.coc(y, v.bracket_basis(z, x)));
                s = add(s, d.coc(z, v.bracket_basis(x, y)));
                s = add(s, d.ract(x, cocycle.fiber(y, z)));
                s = add(s, d.ract(y, cocycle.fiber(z, x)));
                s = add(s, d.ract(z, cocycle.fiber(x, y)));
                if (!is_zero_vec(s)) rep.fail("CS4", {x, y, z}, s);
            }
        }
    }

    return rep;
}

LieAlgebra crossed_product(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& raction,
                           const Tensor3& cocycle) {
    AxiomReport rep = check_crossed_system(g, v, raction, cocycle);
    if (!rep.passed()) throw AxiomError("crossed product", std::move(rep));
    const std::size_t n = g.dim();
    const std::size_t m = v.dim();
    ExtendingDatum d(g, m, Tensor3(m, n, m, g.field()), raction, cocycle, v.sc());
    return assemble_unified(d).renamed(g.name() + ".cr" + std::to_string(m));
}

AxiomReport check_matched_pair(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& laction,
                               const Tensor3& raction) {
    const std::size_t n = g.dim();
    const std::size_t m = v.dim();
    if (v.field() != g.field()) throw Error("factors are over different fields");
    require_shape(laction, m, n, m, g.field(), "laction");
    require_shape(raction, m, n, n, g.field(), "raction");

    AxiomReport rep;
    for (const char* label : {"VLIE", "RMOD", "LMOD", "MP1", "MP2"}) rep.begin(label);

    adopt_failure(rep, "VLIE", check_lie(v));

    ExtendingDatum d(g, m, laction, raction, Tensor3(m, m, n, g.field()), v.sc());
    const FieldSpec& f = g.field();

    // RMOD: x <| [g,h] = (x<|g) <| h - (x<|h) <| g.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec lhs = d.lact(x, g.bracket_basis(i, j));
                Vec rhs = sub(d.lact(laction.fiber(x, i), j), d.lact(laction.fiber(x, j), i));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("RMOD", {x, i, j}, defect);
            }
        }
    }

    // LMOD: {x,y} |> g = x|>(y|>g) - y|>(x|>g).
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = d.ract(v.bracket_basis(x, y), i);
                Vec rhs = sub(d.ract(x, raction.fiber(y, i)), d.ract(y, raction.fiber(x, i)));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("LMOD", {x, y, i}, defect);
            }
        }
    }

    // MP1: x |> [g,h] = [x|>g, h] + [g, x|>h] + (x<|g) |> h - (x<|h) |> g.
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec lhs = d.ract(x, g.bracket_basis(i, j));
                Vec rhs = g.bracket(raction.fiber(x, i), unit_vec(n, j, f));
                rhs = add(rhs, g.bracket(unit_vec(n, i, f), raction.fiber(x, j)));
                rhs = add(rhs, d.ract(laction.fiber(x, i), j));
                rhs = sub(rhs, d.ract(laction.fiber(x, j), i));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("MP1", {x, i, j}, defect);
            }
        }
    }

    // MP2: {x,y} <| g = {x, y<|g} + {x<|g, y} + x <| (y|>g) - y <| (x|>g).
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t i = 0; i < n; ++i) {
                Vec lhs = d.lact(v.bracket_basis(x, y), i);
                Vec rhs = d.vbr(x, laction.fiber(y, i));
                rhs = add(rhs, d.vbr(laction.fiber(x, i), y));
                rhs = add(rhs, d.lact(x, raction.fiber(y, i)));
                rhs = sub(rhs, d.lact(y, raction.fiber(x, i)));
                Vec defect = sub(lhs, rhs);
                if (!is_zero_vec(defect)) rep.fail("MP2", {x, y, i}, defect);
            }
        }
    }

    return rep;
}

LieAlgebra bicrossed_product(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& laction,
                             const Tensor3& raction) {
    AxiomReport rep = check_matched_pair(g, v, laction, raction);
    if (!rep.passed()) throw AxiomError("bicrossed product", std::move(rep));
    const std::size_t n = g.dim();
    const std::size_t m = v.dim();
    ExtendingDatum d(g, m, laction, raction, Tensor3(m, m, n, g.field()), v.sc());
    return assemble_unified(d).renamed(g.name() + ".bi" + std::to_string(m));
}

ExtendingDatum extract_datum(const LieAlgebra& e, std::size_t g_dim,
                             const std::optional<LinearMap>& p_opt) {
    const std::size_t total = e.dim();
    if (g_dim > total) throw Error("subalgebra dimension exceeds the algebra");
    const std::size_t n = g_dim;
    const std::size_t m = total - n;
    const FieldSpec& f = e.field();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!is_zero_vec(tail(e.bracket_basis(i, j), n))) {
                throw Error("first block is not closed under the bracket");
            }
        }
    }

    LinearMap p = [&]() {
        if (p_opt) return *p_opt;
        Matrix proj(n, total, f);
        for (std::size_t i = 0; i < n; ++i) proj.at(i, i) = Scalar::one(f);
        return proj;
    }();
    if (p.rows() != n || p.cols() != total || p.field() != f) {
        throw Error("retraction has the wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (p.col(i) != unit_vec(n, i, f)) throw Error("p is not a retraction");
    }

    // Complement basis: v_x = e_{n+x} - (p(e_{n+x}) embedded back), which
    // spans Ker(p); a kernel vector's complement coordinates are exactly its
    // trailing coordinates.
    std::vector<Vec> vbasis;
    for (std::size_t x = 0; x < m; ++x) {
        Vec vx = unit_vec(total, n + x, f);
        const Vec px = p.col(n + x);
        for (std::size_t k = 0; k < n; ++k) vx[k] -= px[k];
        vbasis.push_back(std::move(vx));
    }

    Tensor3 gsc(n, n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec fib = e.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) gsc.at(i, j, k) = fib[k];
        }
    }
    LieAlgebra gsub = LieAlgebra::from_tensor(e.name() + ".g" + std::to_string(n),
                                              std::move(gsc));

    Tensor3 laction(m, n, m, f);
    Tensor3 raction(m, n, n, f);
    Tensor3 cocycle(m, m, n, f);
    Tensor3 vbracket(m, m, m, f);

    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vec b = e.bracket(vbasis[x], unit_vec(total, i, f));
            raction.set_fiber(x, i, p.apply(b));
            laction.set_fiber(x, i, tail(b, n));
        }
        for (std::size_t y = 0; y < m; ++y) {
            const Vec b = e.bracket(vbasis[x], vbasis[y]);
            cocycle.set_fiber(x, y, p.apply(b));
            vbracket.set_fiber(x, y, tail(b, n));
        }
    }

    return ExtendingDatum(std::move(gsub), m, std::move(laction), std::move(raction),
                          std::move(cocycle), std::move(vbracket));
}

CrossedSystem extract_crossed_system(const LieAlgebra& e, std::size_t g_dim,
                                     const std::optional<LinearMap>& s_opt) {
    const std::size_t total = e.dim();
    if (g_dim > total) throw Error("ideal dimension exceeds the algebra");
    const std::size_t n = g_dim;
    const std::size_t m = total - n;
    const FieldSpec& f = e.field();

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (!is_zero_vec(tail(e.bracket_basis(i, j), n))) {
                throw Error("first block is not an ideal");
            }
        }
    }

    Tensor3 gsc(n, n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec fib = e.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) gsc.at(i, j, k) = fib[k];
        }
    }
    LieAlgebra ideal = LieAlgebra::from_tensor(e.name() + ".g" + std::to_string(n),
                                               std::move(gsc));

    Tensor3 hsc(m, m, m, f);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            hsc.set_fiber(x, y, tail(e.bracket_basis(n + x, n + y), n));
        }
    }
    LieAlgebra quotient = LieAlgebra::from_tensor(e.name() + ".q" + std::to_string(m), hsc);

    LinearMap s = [&]() {
        if (s_opt) return *s_opt;
        Matrix sec(total, m, f);
        for (std::size_t x = 0; x < m; ++x) sec.at(n + x, x) = Scalar::one(f);
        return sec;
    }();
    if (s.rows() != total || s.cols() != m || s.field() != f) {
        throw Error("section has the wrong shape");
    }
    for (std::size_t x = 0; x < m; ++x) {
        if (tail(s.col(x), n) != unit_vec(m, x, f)) throw Error("s is not a section");
    }

    Tensor3 raction(m, n, n, f);
    Tensor3 cocycle(m, m, n, f);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            raction.set_fiber(x, i, head(e.bracket(s.col(x), unit_vec(total, i, f)), n));
        }
        for (std::size_t y = 0; y < m; ++y) {
            Vec b = e.bracket(s.col(x), s.col(y));
            b = sub(b, s.apply(hsc.fiber(x, y)));
            cocycle.set_fiber(x, y, head(b, n));
        }
    }

    return CrossedSystem{std::move(ideal), std::move(quotient), std::move(raction),
                         std::move(cocycle)};
}

namespace {

void require_morphism_shapes(const ExtendingDatum& datum, const ExtendingDatum& target,
                             const MorphismData& mo) {
    if (datum.g() != target.g() || datum.dimv() != target.dimv()) {
        throw Error("morphism endpoints are built on different g or V");
    }
    const std::size_t n = datum.dim_g();
    const std::size_t m = datum.dimv();
    if (mo.r.rows() != n || mo.r.cols() != m || mo.r.field() != datum.field()) {
        throw Error("r has the wrong shape");
    }
    if (mo.v.rows() != m || mo.v.cols() != m || mo.v.field() != datum.field()) {
        throw Error("v has the wrong shape");
    }
}

}  // namespace

MorphismReport check_morphism(const ExtendingDatum& datum, const ExtendingDatum& target,
                              const MorphismData& mo) {
    require_morphism_shapes(datum, target, mo);
    const LieAlgebra& g = datum.g();
    const std::size_t n = g.dim();
    const std::size_t m = datum.dimv();
    const FieldSpec& f = datum.field();

    AxiomReport rep;
    for (const char* label : {"ML1", "ML2", "ML3", "ML4"}) rep.begin(label);

    // ML1: v(x) <|' g = v(x <| g).   ML2: r(x <| g) = [r(x), g] - x |> g + v(x) |>' g.
    for (std::size_t x = 0; x < m; ++x) {
        const Vec vx = mo.v.col(x);
        const Vec rx = mo.r.col(x);
        for (std::size_t i = 0; i < n; ++i) {
            Vec d1 = sub(target.lact(vx, i), mo.v.apply(datum.laction().fiber(x, i)));
            if (!is_zero_vec(d1)) rep.fail("ML1", {x, i}, d1);

            Vec rhs = g.bracket(rx, unit_vec(n, i, f));
            rhs = sub(rhs, datum.raction().fiber(x, i));
            rhs = add(rhs, target.ract(vx, i));
            Vec d2 = sub(mo.r.apply(datum.laction().fiber(x, i)), rhs);
            if (!is_zero_vec(d2)) rep.fail("ML2", {x, i}, d2);
        }
    }

    // ML3: v({x,y}) = {v(x), v(y)}' + v(x) <|' r(y) - v(y) <|' r(x).
    // ML4: r({x,y}) = [r(x), r(y)] + v(x) |>' r(y) - v(y) |>' r(x)
    //                 + f'(v(x), v(y)) - f(x,y).
    for (std::size_t x = 0; x < m; ++x) {
        const Vec vx = mo.v.col(x);
        const Vec rx = mo.r.col(x);
        for (std::size_t y = 0; y < m; ++y) {
            const Vec vy = mo.v.col(y);
            const Vec ry = mo.r.col(y);

            Vec rhs3 = target.vbr(vx, vy);
            rhs3 = add(rhs3, target.lact(vx, ry));
            rhs3 = sub(rhs3, target.lact(vy, rx));
            Vec d3 = sub(mo.v.apply(datum.vbracket().fiber(x, y)), rhs3);
            if (!is_zero_vec(d3)) rep.fail("ML3", {x, y}, d3);

            Vec rhs4 = g.bracket(rx, ry);
            rhs4 = add(rhs4, target.ract(vx, ry));
            rhs4 = sub(rhs4, target.ract(vy, rx));
            rhs4 = add(rhs4, target.coc(vx, vy));
            rhs4 = sub(rhs4, datum.cocycle().fiber(x, y));
            Vec d4 = sub(mo.r.apply(datum.vbracket().fiber(x, y)), rhs4);
            if (!is_zero_vec(d4)) rep.fail("ML4", {x, y}, d4);
        }
    }

    const bool iso = try_inverse(mo.v).has_value();
    return MorphismReport{std::move(rep), iso};
}

ExtendingDatum transform_datum(const ExtendingDatum& datum, const MorphismData& mo) {
    require_morphism_shapes(datum, datum, mo);
    const LieAlgebra& g = datum.g();
    const std::size_t n = g.dim();
    const std::size_t m = datum.dimv();
    const FieldSpec& f = datum.field();

    const Matrix vinv = inverse(mo.v);

    std::vector<Vec> u;   // u_x = v^{-1}(x)
    std::vector<Vec> ru;  // r(u_x)
    for (std::size_t x = 0; x < m; ++x) {
        u.push_back(vinv.col(x));
        ru.push_back(mo.r.apply(u[x]));
    }

    Tensor3 laction(m, n, m, f);
    Tensor3 raction(m, n, n, f);
    Tensor3 cocycle(m, m, n, f);
    Tensor3 vbracket(m, m, m, f);

    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vec ug = datum.lact(u[x], i);
            laction.set_fiber(x, i, mo.v.apply(ug));

            Vec rg = datum.ract(u[x], i);
            rg = add(rg, mo.r.apply(ug));
            rg = sub(rg, g.bracket(ru[x], unit_vec(n, i, f)));
            raction.set_fiber(x, i, rg);
        }
        for (std::size_t y = 0; y < m; ++y) {
            Vec vb = datum.vbr(u[x], u[y]);
            vb = sub(vb, datum.lact(u[x], ru[y]));
            vb = add(vb, datum.lact(u[y], ru[x]));
            vbracket.set_fiber(x, y, mo.v.apply(vb));

            Vec fc = datum.coc(u[x], u[y]);
            fc = add(fc, mo.r.apply(datum.vbr(u[x], u[y])));
            fc = add(fc, g.bracket(ru[x], ru[y]));
            fc = sub(fc, mo.r.apply(datum.lact(u[x], ru[y])));
            fc = sub(fc, datum.ract(u[x], ru[y]));
            fc = add(fc, mo.r.apply(datum.lact(u[y], ru[x])));
            fc = add(fc, datum.ract(u[y], ru[x]));
            cocycle.set_fiber(x, y, fc);
        }
    }

    return ExtendingDatum(g, m, std::move(laction), std::move(raction), std::move(cocycle),
                          std::move(vbracket));
}

bool datum_equivalent(const ExtendingDatum& datum, const ExtendingDatum& target,
                      const MorphismData& mo) {
    require_morphism_shapes(datum, target, mo);
    return transform_datum(datum, mo) == target;
}

bool datum_cohomologous(const ExtendingDatum& datum, const ExtendingDatum& target,
                        const LinearMap& r) {
    if (datum.g() != target.g() || datum.dimv() != target.dimv()) return false;
    const LieAlgebra& g = datum.g();
    const std::size_t n = g.dim();
    const std::size_t m = datum.dimv();
    const FieldSpec& f = datum.field();
    if (r.rows() != n || r.cols() != m || r.field() != f) {
        throw Error("r has the wrong shape");
    }

    if (datum.laction() != target.laction()) return false;

    Tensor3 raction(m, n, n, f);
    Tensor3 cocycle(m, m, n, f);
    Tensor3 vbracket(m, m, m, f);

    for (std::size_t x = 0; x < m; ++x) {
        const Vec rx = r.col(x);
        for (std::size_t i = 0; i < n; ++i) {
            Vec rg = datum.raction().fiber(x, i);
            rg = add(rg, r.apply(datum.laction().fiber(x, i)));
            rg = sub(rg, g.bracket(rx, unit_vec(n, i, f)));
            raction.set_fiber(x, i, rg);
        }
        for (std::size_t y = 0; y < m; ++y) {
            const Vec ry = r.col(y);

            Vec fc = datum.cocycle().fiber(x, y);
            fc = add(fc, r.apply(datum.vbracket().fiber(x, y)));
            fc = add(fc, g.bracket(rx, ry));
            fc = add(fc, datum.ract(y, rx));
            fc = sub(fc, datum.ract(x, ry));
            fc = add(fc, r.apply(datum.lact(y, rx)));
            fc = sub(fc, r.apply(datum.lact(x, ry)));
            cocycle.set_fiber(x, y, fc);

            Vec vb = datum.vbracket().fiber(x, y);
            vb = sub(vb, datum.lact(x, ry));
            vb = add(vb, datum.lact(y, rx));
            vbracket.set_fiber(x, y, vb);
        }
    }

    return raction == target.raction() && cocycle == target.cocycle() &&
           vbracket == target.vbracket();
}

ComplexProductReport check_complex_product_structure(const LieAlgebra& l, const LinearMap& phi) {
    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();
    if (f.characteristic() == 2) {
        throw Error("eigenvalue splitting needs characteristic different from 2");
    }
    if (phi.rows() != n || phi.cols() != n || phi.field() != f) {
        throw Error("phi has the wrong shape");
    }

    AxiomReport rep;
    for (const char* label : {"CP1", "CP2", "CP3"}) rep.begin(label);

    const Matrix id = Matrix::identity(n, f);
    Matrix neg_id(n, n, f);
    for (std::size_t i = 0; i < n; ++i) neg_id.at(i, i) = -Scalar::one(f);

    if (phi == id || phi == neg_id) rep.fail("CP1", {}, {});

    const Matrix phisq = phi * phi;
    const bool squares_to_identity = phisq == id;
    const bool squares_to_phi = phisq == phi;
    if (!squares_to_identity) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec defect = sub(phisq.col(j), unit_vec(n, j, f));
            if (!is_zero_vec(defect)) {
                rep.fail("CP2", {j}, defect);
                break;
            }
        }
    }

    // CP3: phi([g,h]) = [phi(g), h] + [g, phi(h)] - phi([phi(g), phi(h)]).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = phi.apply(l.bracket_basis(i, j));
            Vec rhs = l.bracket(phi.col(i), unit_vec(n, j, f));
            rhs = add(rhs, l.bracket(unit_vec(n, i, f), phi.col(j)));
            rhs = sub(rhs, phi.apply(l.bracket(phi.col(i), phi.col(j))));
            Vec defect = sub(lhs, rhs);
            if (!is_zero_vec(defect)) rep.fail("CP3", {i, j}, defect);
        }
    }

    SubspaceBasis plus(n, f);
    SubspaceBasis minus(n, f);
    bool plus_closed = false;
    bool minus_closed = false;
    bool decomposition = false;

    if (rep.passed()) {
        plus = nullspace(phi - id);
        minus = nullspace(phi + id);
        auto closed = [&](const SubspaceBasis& space) {
            for (std::size_t a = 0; a < space.dim(); ++a) {
                for (std::size_t b = a + 1; b < space.dim(); ++b) {
                    if (!space.contains(l.bracket(space.vectors()[a], space.vectors()[b]))) {
                        return false;
                    }
                }
            }
            return true;
        };
        plus_closed = closed(plus);
        minus_closed = closed(minus);
        decomposition = plus.dim() + minus.dim() == n;
    }

    return ComplexProductReport{std::move(rep), squares_to_identity, squares_to_phi,
                                std::move(plus),  std::move(minus),   plus_closed,
                                minus_closed,     decomposition};
}

}  // namespace liext
