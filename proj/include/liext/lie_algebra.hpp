#pragma once

#include <string>
#include <vector>

#include "liext/report.hpp"
#include "liext/tensor.hpp"

namespace liext {

/// A linear map between coordinate spaces, stored as its matrix
/// (codomain_dim x domain_dim). Columns are images of basis vectors.
using LinearMap = Matrix;

/// A linear functional on an algebra, stored as the row of its values on the
/// basis.
using LinearFunctional = Vec;

/// One supplied bracket value [e_i, e_j] = value, with 0-based i < j.
struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    Vec value;
};

/// A finite-dimensional algebra over an exact field, stored as the full
/// antisymmetric structure-constant tensor c with
/// bracket(e_i, e_j) = sum_k c[i][j][k] e_k.
/// Construction enforces the alternating shape (zero diagonal, antisymmetry);
/// the Jacobi identity is checked on demand by check_lie so that raw search
/// candidates can be represented too.
class LieAlgebra {
public:
    /// The abelian algebra of the given dimension (all brackets zero).
    LieAlgebra(std::string name, const FieldSpec& field, std::size_t dim);

    /// Builds from entries on pairs i < j; the mirrored pairs and the zero
    /// diagonal are filled automatically. Throws on out-of-range indices,
    /// i >= j, a duplicate (i, j), or a value of the wrong length.
    static LieAlgebra from_entries(std::string name, const FieldSpec& field,
                                   std::size_t dim, const std::vector<BracketEntry>& entries);

    /// Wraps an arbitrary (dim x dim x dim) tensor without any validation.
    /// The tensor need not even be alternating; check_lie reports on it.
    static LieAlgebra from_tensor(std::string name, Tensor3 sc);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return sc_.field(); }
    std::size_t dim() const { return sc_.d0(); }
    const Tensor3& sc() const { return sc_; }

    /// Coordinates of [e_i, e_j].
    Vec bracket_basis(std::size_t i, std::size_t j) const { return sc_.fiber(i, j); }

    /// Bilinear extension: coordinates of [u, v].
    Vec bracket(const Vec& u, const Vec& v) const;

    /// Structural equality: same field, dimension, and tensor. Names are
    /// labels only and do not participate.
    bool operator==(const LieAlgebra& rhs) const { return sc_ == rhs.sc_; }
    bool operator!=(const LieAlgebra& rhs) const { return !(*this == rhs); }

    /// Copy with a different display name.
    LieAlgebra renamed(std::string name) const;

private:
    LieAlgebra(std::string name, Tensor3 sc) : name_(std::move(name)), sc_(std::move(sc)) {}

    std::string name_;
    Tensor3 sc_;
};

/// Convenience spelling of LieAlgebra::from_entries.
LieAlgebra make_lie_algebra(std::string name, const FieldSpec& field, std::size_t dim,
                            const std::vector<BracketEntry>& entries);

/// Verifies the algebra axioms: "alternating" ([u,u] = 0, checked as zero
/// diagonal plus antisymmetry on all pairs) and "jacobi" on basis triples
/// i < j < k. Failing checks carry a witness tuple and defect vector.
AxiomReport check_lie(const LieAlgebra& l);

/// Coordinates of the value of ad(g) = [g, -] on basis vectors, as a matrix.
LinearMap ad(const LieAlgebra& l, const Vec& g);

/// Canonical basis of the span of all bracket values [e_i, e_j].
SubspaceBasis derived_subalgebra(const LieAlgebra& l);

/// Canonical basis of {v : [v, x] = 0 for all x}.
SubspaceBasis center(const LieAlgebra& l);

/// Endomorphisms are flattened column-major: entry (r, c) of an n x n matrix
/// lands at coordinate c*n + r of a length-n^2 vector. All endomorphism-space
/// computations share this convention.
Vec flatten_endo(const LinearMap& m);
LinearMap unflatten_endo(const Vec& v, std::size_t n, const FieldSpec& field);

/// Canonical basis of Der(l) inside the n^2-dimensional endomorphism space:
/// all D with D([g,h]) = [D(g),h] + [g,D(h)].
SubspaceBasis derivations(const LieAlgebra& l);

/// Canonical basis of span{ad(e_i)} inside the endomorphism space.
SubspaceBasis inner_derivations(const LieAlgebra& l);

/// dim Der(l) - dim Inn(l).
std::size_t outer_dimension(const LieAlgebra& l);

/// True iff the derived subalgebra is the whole algebra.
bool is_perfect(const LieAlgebra& l);

/// True iff the matrix satisfies the derivation identity on all basis pairs.
bool is_derivation(const LieAlgebra& l, const LinearMap& d);

/// True iff phi is an invertible linear map with
/// phi([x,y]_a) = [phi(x), phi(y)]_b on all basis pairs.
bool is_isomorphism(const LieAlgebra& a, const LieAlgebra& b, const LinearMap& phi);

}  // namespace liext
