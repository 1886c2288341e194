#include "liext/lie_algebra.hpp"

namespace liext {

LieAlgebra::LieAlgebra(std::string name, const FieldSpec& field, std::size_t dim)
    : name_(std::move(name)), sc_(dim, dim, dim, field) {}

LieAlgebra LieAlgebra::from_entries(std::string name, const FieldSpec& field,
                                    std::size_t dim,
                                    const std::vector<BracketEntry>& entries) {
    Tensor3 sc(dim, dim, dim, field);
    std::vector<bool> seen(dim * dim, false);
    for (const auto& e : entries) {
        if (e.i >= dim || e.j >= dim) throw Error("bracket entry index out of range");
        if (e.i >= e.j) throw Error("bracket entries must have i < j");
        if (e.value.size() != dim) throw Error("bracket entry value length mismatch");
        if (seen[e.i * dim + e.j]) {
            throw Error("duplicate bracket entry (" + std::to_string(e.i + 1) + "," +
                        std::to_string(e.j + 1) + ")");
        }
        seen[e.i * dim + e.j] = true;
        for (std::size_t k = 0; k < dim; ++k) {
            sc.at(e.i, e.j, k) = e.value[k];
            sc.at(e.j, e.i, k) = -e.value[k];
        }
    }
    return LieAlgebra(std::move(name), std::move(sc));
}

LieAlgebra LieAlgebra::from_tensor(std::string name, Tensor3 sc) {
    if (sc.d0() != sc.d1() || sc.d1() != sc.d2()) {
        throw Error("structure tensor must be cubical");
    }
    return LieAlgebra(std::move(name), std::move(sc));
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n) throw Error("bracket operand length mismatch");
    Vec out = zero_vec(n, field());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            const Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) out[k] += uv * sc_.at(i, j, k);
        }
    }
    return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
    LieAlgebra out = *this;
    out.name_ = std::move(name);
    return out;
}

LieAlgebra make_lie_algebra(std::string name, const FieldSpec& field, std::size_t dim,
                            const std::vector<BracketEntry>& entries) {
    return LieAlgebra::from_entries(std::move(name), field, dim, entries);
}

AxiomReport check_lie(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    AxiomReport report;

    // Alternating: zero diagonal plus antisymmetry. Both halves are needed
    // over fields of characteristic 2, where antisymmetry alone is vacuous.
    report.begin("alternating");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec diag = l.bracket_basis(i, i);
        if (!is_zero_vec(diag)) report.fail("alternating", {i, i}, diag);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec defect = add(l.bracket_basis(i, j), l.bracket_basis(j, i));
            if (!is_zero_vec(defect)) report.fail("alternating", {i, j}, defect);
        }
    }

    report.begin("jacobi");
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = zero_vec(n, l.field());
        ei[i] = Scalar::one(l.field());
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec ej = zero_vec(n, l.field());
            ej[j] = Scalar::one(l.field());
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec ek = zero_vec(n, l.field());
                ek[k] = Scalar::one(l.field());
                Vec defect = l.bracket(ei, l.bracket(ej, ek));
                defect = add(defect, l.bracket(ej, l.bracket(ek, ei)));
                defect = add(defect, l.bracket(ek, l.bracket(ei, ej)));
                if (!is_zero_vec(defect)) report.fail("jacobi", {i, j, k}, defect);
            }
        }
    }
    return report;
}

LinearMap ad(const LieAlgebra& l, const Vec& g) {
    const std::size_t n = l.dim();
    Matrix out(n, n, l.field());
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej = zero_vec(n, l.field());
        ej[j] = Scalar::one(l.field());
        const Vec image = l.bracket(g, ej);
        for (std::size_t k = 0; k < n; ++k) out.at(k, j) = image[k];
    }
    return out;
}

SubspaceBasis derived_subalgebra(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Vec> values;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) values.push_back(l.bracket_basis(i, j));
    }
    return SubspaceBasis::span(n, values, l.field());
}

SubspaceBasis center(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    // v is central iff sum_i v_i c[i][j][k] = 0 for every (j, k).
    Matrix a(n * n, n, l.field());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                a.at(j * n + k, i) = l.sc().at(i, j, k);
            }
        }
    }
    return nullspace(a);
}

Vec flatten_endo(const LinearMap& m) {
    if (m.rows() != m.cols()) throw Error("flatten expects a square matrix");
    const std::size_t n = m.rows();
    Vec out;
    out.reserve(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) out.push_back(m.at(r, c));
    }
    return out;
}

LinearMap unflatten_endo(const Vec& v, std::size_t n, const FieldSpec& field) {
    if (v.size() != n * n) throw Error("flattened endomorphism length mismatch");
    Matrix out(n, n, field);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) out.at(r, c) = v[c * n + r];
    }
    return out;
}

SubspaceBasis derivations(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    const std::size_t pairs = n * (n - 1) / 2;
    // Unknowns: D (n x n), flattened column-major. One block of n equations
    // per basis pair i < j:
    //   sum_k c[i][j][k] D[c][k] - sum_r c[r][j][c] D[r][i]
    //                            - sum_r c[i][r][c] D[r][j] = 0   for each c.
    Matrix a(pairs * n, n * n, l.field());
    std::size_t block = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++block) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t row = block * n + c;
                for (std::size_t k = 0; k < n; ++k) {
                    a.at(row, k * n + c) += l.sc().at(i, j, k);  // D[c][k]
                }
                for (std::size_t r = 0; r < n; ++r) {
                    a.at(row, i * n + r) -= l.sc().at(r, j, c);  // D[r][i]
                    a.at(row, j * n + r) -= l.sc().at(i, r, c);  // D[r][j]
                }
            }
        }
    }
    return nullspace(a);
}

SubspaceBasis inner_derivations(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Vec> generators;
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = zero_vec(n, l.field());
        ei[i] = Scalar::one(l.field());
        generators.push_back(flatten_endo(ad(l, ei)));
    }
    return SubspaceBasis::span(n * n, generators, l.field());
}

std::size_t outer_dimension(const LieAlgebra& l) {
    return derivations(l).dim() - inner_derivations(l).dim();
}

bool is_perfect(const LieAlgebra& l) { return derived_subalgebra(l).dim() == l.dim(); }

bool is_derivation(const LieAlgebra& l, const LinearMap& d) {
    const std::size_t n = l.dim();
    if (d.rows() != n || d.cols() != n) throw Error("derivation shape mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec ei = zero_vec(n, l.field());
            Vec ej = zero_vec(n, l.field());
            ei[i] = Scalar::one(l.field());
            ej[j] = Scalar::one(l.field());
            const Vec lhs = d.apply(l.bracket_basis(i, j));
            const Vec rhs = add(l.bracket(d.apply(ei), ej), l.bracket(ei, d.apply(ej)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_isomorphism(const LieAlgebra& a, const LieAlgebra& b, const LinearMap& phi) {
    if (a.dim() != b.dim() || a.field() != b.field()) return false;
    if (phi.rows() != a.dim() || phi.cols() != a.dim()) return false;
    if (!try_inverse(phi).has_value()) return false;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec lhs = phi.apply(a.bracket_basis(i, j));
            const Vec rhs = b.bracket(phi.col(i), phi.col(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace liext
