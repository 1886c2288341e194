#include "liext/twder.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "liext/error.hpp"

namespace liext {

namespace {

void require_pair_shapes(const LieAlgebra& l, const LinearFunctional& lambda,
                         const LinearMap& d) {
    if (lambda.size() != l.dim()) {
        throw Error("functional length does not match the algebra dimension");
    }
    if (d.rows() != l.dim() || d.cols() != l.dim() || d.field() != l.field()) {
        throw Error("endomorphism shape does not match the algebra");
    }
}

Scalar eval_functional(const LinearFunctional& lambda, const Vec& v, const FieldSpec& field) {
    Scalar out = Scalar::zero(field);
    for (std::size_t k = 0; k < v.size(); ++k) out += lambda[k] * v[k];
    return out;
}

bool vanishes_on_derived(const LieAlgebra& l, const LinearFunctional& lambda) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            if (!eval_functional(lambda, l.bracket_basis(i, j), l.field()).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

AxiomReport check_twisted_derivation(const LieAlgebra& l, const LinearFunctional& lambda,
                                     const LinearMap& d) {
    require_pair_shapes(l, lambda, d);
    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();

    std::vector<Vec> dcol;
    dcol.reserve(n);
    for (std::size_t i = 0; i < n; ++i) dcol.push_back(d.col(i));

    AxiomReport rep;
    rep.begin("TD1");
    rep.begin("TD2");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec w = l.bracket_basis(i, j);
            if (rep.passed("TD1")) {
                const Scalar s = eval_functional(lambda, w, f);
                if (!s.is_zero()) rep.fail("TD1", {i, j}, Vec{s});
            }
            if (rep.passed("TD2")) {
                Vec defect = d.apply(w);
                defect = sub(defect, l.bracket(dcol[i], unit_vec(n, j, f)));
                defect = sub(defect, l.bracket(unit_vec(n, i, f), dcol[j]));
                defect = sub(defect, scale(lambda[i], dcol[j]));
                defect = add(defect, scale(lambda[j], dcol[i]));
                if (!is_zero_vec(defect)) rep.fail("TD2", {i, j}, defect);
            }
        }
    }
    return rep;
}

SubspaceBasis lambda_space(const LieAlgebra& l) {
    const SubspaceBasis derived = derived_subalgebra(l);
    // lambda(w) = 0 for every w in the derived subalgebra: the kernel of the
    // matrix whose rows are the derived-subalgebra basis vectors.
    const Matrix rows = Matrix::from_rows(l.dim(), derived.vectors(), l.field());
    return nullspace(rows);
}

SubspaceBasis dspace_for_lambda(const LieAlgebra& l, const LinearFunctional& lambda) {
    if (lambda.size() != l.dim()) {
        throw Error("functional length does not match the algebra dimension");
    }
    if (!vanishes_on_derived(l, lambda)) {
        throw Error("functional does not vanish on the derived subalgebra");
    }
    const std::size_t n = l.dim();
    const std::size_t pairs = n * (n - 1) / 2;
    // Same unknowns and block layout as the derivation solver (D flattened
    // column-major), with the two twist terms -lambda_i D[c][j] + lambda_j D[c][i]
    // appended to each equation.
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
                a.at(row, j * n + c) -= lambda[i];  // D[c][j]
                a.at(row, i * n + c) += lambda[j];  // D[c][i]
            }
        }
    }
    return nullspace(a);
}

TwistedDerivation inner_twisted_derivation(const LieAlgebra& l, const Vec& g0,
                                           const LinearFunctional& lambda) {
    if (g0.size() != l.dim() || lambda.size() != l.dim()) {
        throw Error("vector length does not match the algebra dimension");
    }
    if (!vanishes_on_derived(l, lambda)) {
        throw Error("functional does not vanish on the derived subalgebra");
    }
    // Column j is [g0, e_j] - lambda_j g0.
    LinearMap d = ad(l, g0);
    for (std::size_t j = 0; j < l.dim(); ++j) {
        for (std::size_t r = 0; r < l.dim(); ++r) {
            d.at(r, j) -= lambda[j] * g0[r];
        }
    }
    return TwistedDerivation{lambda, std::move(d)};
}

ExtendingDatum codim1_datum(const LieAlgebra& l, const LinearFunctional& lambda,
                            const LinearMap& d) {
    require_pair_shapes(l, lambda, d);
    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();
    Tensor3 laction(1, n, 1, f);
    Tensor3 raction(1, n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        laction.at(0, i, 0) = lambda[i];     // x <| e_i = lambda_i x
        raction.set_fiber(0, i, d.col(i));   // x |> e_i = D(e_i)
    }
    return ExtendingDatum(l, 1, std::move(laction), std::move(raction),
                          Tensor3(1, 1, n, f), Tensor3(1, 1, 1, f));
}

LieAlgebra codim1_product(const LieAlgebra& l, const LinearFunctional& lambda,
                          const LinearMap& d) {
    AxiomReport rep = check_twisted_derivation(l, lambda, d);
    if (!rep.passed()) {
        throw AxiomError("codimension-1 extension of " + l.name(), std::move(rep));
    }
    return assemble_unified(codim1_datum(l, lambda, d)).renamed(l.name() + ".ext");
}

std::optional<EquivalenceWitness> twder_equivalent(const LieAlgebra& l,
                                                   const TwistedDerivation& a,
                                                   const TwistedDerivation& b) {
    require_pair_shapes(l, a.lambda, a.d);
    require_pair_shapes(l, b.lambda, b.d);
    if (a.lambda != b.lambda) return std::nullopt;
    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();

    // Unknowns (q, g0_0..g0_{n-1}); one equation per (basis vector e_i,
    // coordinate c) of D(e_i) = q D'(e_i) + [g0, e_i] - lambda_i g0.
    Matrix m(n * n, 1 + n, f);
    Vec rhs = zero_vec(n * n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = i * n + c;
            m.at(row, 0) = -b.d.at(c, i);
            for (std::size_t k = 0; k < n; ++k) {
                m.at(row, 1 + k) -= l.sc().at(k, i, c);
            }
            m.at(row, 1 + c) += a.lambda[i];
            rhs[row] = -a.d.at(c, i);
        }
    }
    const AffineSolution sol = solve_affine(m, rhs);
    if (!sol.feasible) return std::nullopt;

    Vec point = sol.particular;
    if (point[0].is_zero()) {
        // Shift along a kernel direction whose q-coordinate is nonzero; if
        // none exists every solution has q = 0 and the pairs are unrelated.
        bool shifted = false;
        for (const Vec& h : sol.homogeneous.vectors()) {
            if (!h[0].is_zero()) {
                point = add(point, h);
                shifted = true;
                break;
            }
        }
        if (!shifted) return std::nullopt;
    }
    return EquivalenceWitness{point[0], Vec(point.begin() + 1, point.end())};
}

std::optional<Vec> twder_cohomologous(const LieAlgebra& l, const TwistedDerivation& a,
                                      const TwistedDerivation& b) {
    require_pair_shapes(l, a.lambda, a.d);
    require_pair_shapes(l, b.lambda, b.d);
    if (a.lambda != b.lambda) return std::nullopt;
    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();

    // Unknowns g0; one equation per (i, c) of
    // [g0, e_i] - lambda_i g0 = D(e_i) - D'(e_i).
    Matrix m(n * n, n, f);
    Vec rhs = zero_vec(n * n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = i * n + c;
            for (std::size_t k = 0; k < n; ++k) {
                m.at(row, k) = l.sc().at(k, i, c);
            }
            m.at(row, c) -= a.lambda[i];
            rhs[row] = a.d.at(c, i) - b.d.at(c, i);
        }
    }
    const AffineSolution sol = solve_affine(m, rhs);
    if (!sol.feasible) return std::nullopt;
    return sol.particular;
}

namespace {

/// Disjoint-set forest used for the prime-field class census.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t x, std::size_t y) { parent_[find(x)] = parent_[find(y)]; }

    std::size_t component_count() {
        std::size_t count = 0;
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            if (find(x) == x) ++count;
        }
        return count;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

ClassificationReport classify_codim1(const LieAlgebra& l,
                                     const std::vector<Scalar>& multipliers,
                                     std::size_t cap) {
    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();
    ClassificationReport out{lambda_space(l), {}, false, 0, 0, 0};

    std::vector<Scalar> points = multipliers;
    if (points.empty()) {
        for (std::int64_t v : {0, 1, -1, 2, 3, 5}) points.push_back(Scalar::from_int(v, f));
    }
    std::vector<Scalar> deduped;
    for (const Scalar& s : points) {
        bool seen = false;
        for (const Scalar& t : deduped) seen = seen || s == t;
        if (!seen) deduped.push_back(s);
    }

    // D-space dimension along each basis functional at each sample multiplier.
    std::vector<Vec> sampled;
    auto add_sample = [&](const Scalar& mult, const Vec& lambda) {
        for (const Vec& prev : sampled) {
            if (prev == lambda) return;
        }
        sampled.push_back(lambda);
        out.samples.push_back(
            ClassificationSample{mult, lambda, dspace_for_lambda(l, lambda).dim()});
    };
    if (out.lambda_basis.dim() == 0) {
        add_sample(Scalar::zero(f), zero_vec(n, f));
    } else {
        for (const Vec& phi : out.lambda_basis.vectors()) {
            for (const Scalar& mult : deduped) add_sample(mult, scale(mult, phi));
        }
    }

    if (!f.is_prime()) return out;

    // Exhaustive census: every admissible lambda, and for each one every D in
    // its D-space. Both relations only ever identify pairs sharing the same
    // lambda, so the census runs lambda by lambda.
    std::vector<std::vector<Vec>> groups;  // flattened D's per lambda
    std::size_t total = 1;
    for (std::size_t a = 0; a < out.lambda_basis.dim(); ++a) {
        total *= static_cast<std::size_t>(f.modulus());
        if (total > cap) return out;
    }
    std::vector<Vec> lambdas = span_points(out.lambda_basis);
    total = 0;
    for (const Vec& lambda : lambdas) {
        std::size_t count = 1;
        const SubspaceBasis dspace = dspace_for_lambda(l, lambda);
        for (std::size_t a = 0; a < dspace.dim(); ++a) {
            count *= static_cast<std::size_t>(f.modulus());
            if (total + count > cap) return out;
        }
        if (total + count > cap) return out;
        total += count;
        groups.push_back(span_points(dspace));
    }

    out.enumerated = true;
    out.twder_count = total;
    for (std::size_t gi = 0; gi < lambdas.size(); ++gi) {
        const Vec& lambda = lambdas[gi];
        std::vector<TwistedDerivation> members;
        members.reserve(groups[gi].size());
        for (const Vec& flat : groups[gi]) {
            members.push_back(TwistedDerivation{lambda, unflatten_endo(flat, n, f)});
        }
        UnionFind scaled(members.size());
        UnionFind shift(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (scaled.find(i) != scaled.find(j) &&
                    twder_equivalent(l, members[i], members[j]).has_value()) {
                    scaled.unite(i, j);
                }
                if (shift.find(i) != shift.find(j) &&
                    twder_cohomologous(l, members[i], members[j]).has_value()) {
                    shift.unite(i, j);
                }
            }
        }
        out.class_count_scaled += scaled.component_count();
        out.class_count_shift += shift.component_count();
    }
    return out;
}

std::vector<LieAlgebra> flag_extend(const LieAlgebra& l,
                                    const std::vector<TwistedDerivation>& steps) {
    std::vector<LieAlgebra> chain;
    chain.push_back(l);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const LieAlgebra& current = chain.back();
        const std::string where = "flag step " + std::to_string(i + 1);
        if (steps[i].lambda.size() != current.dim() || steps[i].d.rows() != current.dim() ||
            steps[i].d.cols() != current.dim()) {
            throw Error(where + ": pair shape does not match the current dimension " +
                        std::to_string(current.dim()));
        }
        AxiomReport rep = check_twisted_derivation(current, steps[i].lambda, steps[i].d);
        if (!rep.passed()) throw AxiomError(where, std::move(rep));
        chain.push_back(assemble_unified(codim1_datum(current, steps[i].lambda, steps[i].d))
                            .renamed(l.name() + ".flag" + std::to_string(i + 1)));
    }
    return chain;
}

}  // namespace liext
