#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "liext/lie_algebra.hpp"
#include "liext/report.hpp"
#include "liext/tensor.hpp"

namespace liext {

/// The raw material for building an algebra on g x V: a base algebra g of
/// dimension n, a complement dimension m, and four bilinear-map tables.
/// Shapes (with V-indices written x, y, z and g-indices i, j):
///   laction  (m, n, m): x <| e_i expressed in the V basis,
///   raction  (m, n, n): x |> e_i expressed in the g basis,
///   cocycle  (m, m, n): f(x, y) in the g basis,
///   vbracket (m, m, m): {x, y} in the V basis.
/// No axiom is enforced at construction: exhaustive searches need to hold
/// arbitrary tables. check_extending_structure delivers the verdict.
class ExtendingDatum {
public:
    ExtendingDatum(LieAlgebra g, std::size_t dimv, Tensor3 laction, Tensor3 raction,
                   Tensor3 cocycle, Tensor3 vbracket);

    /// All four maps zero: the direct-sum datum.
    static ExtendingDatum trivial(const LieAlgebra& g, std::size_t dimv);

    const LieAlgebra& g() const { return g_; }
    const FieldSpec& field() const { return g_.field(); }
    std::size_t dim_g() const { return g_.dim(); }
    std::size_t dimv() const { return dimv_; }

    const Tensor3& laction() const { return laction_; }
    const Tensor3& raction() const { return raction_; }
    const Tensor3& cocycle() const { return cocycle_; }
    const Tensor3& vbracket() const { return vbracket_; }

    Tensor3& laction() { return laction_; }
    Tensor3& raction() { return raction_; }
    Tensor3& cocycle() { return cocycle_; }
    Tensor3& vbracket() { return vbracket_; }

    /// Bilinear evaluators. Index arguments name basis vectors; vector
    /// arguments are coordinate vectors (length m for V, length n for g).
    Vec lact(std::size_t x, const Vec& gv) const;   // x <| gv, length m
    Vec lact(const Vec& xv, std::size_t i) const;   // xv <| e_i
    Vec lact(const Vec& xv, const Vec& gv) const;
    Vec ract(std::size_t x, const Vec& gv) const;   // x |> gv, length n
    Vec ract(const Vec& xv, std::size_t i) const;
    Vec ract(const Vec& xv, const Vec& gv) const;
    Vec coc(std::size_t x, const Vec& yv) const;    // f(x, yv), length n
    Vec coc(const Vec& xv, std::size_t y) const;
    Vec coc(const Vec& xv, const Vec& yv) const;
    Vec vbr(std::size_t x, const Vec& yv) const;    // {x, yv}, length m
    Vec vbr(const Vec& xv, std::size_t y) const;
    Vec vbr(const Vec& xv, const Vec& yv) const;

    /// Structural equality: same g (tensor-wise), same dimv, same four tables.
    bool operator==(const ExtendingDatum& rhs) const;
    bool operator!=(const ExtendingDatum& rhs) const { return !(*this == rhs); }

private:
    LieAlgebra g_;
    std::size_t dimv_;
    Tensor3 laction_;
    Tensor3 raction_;
    Tensor3 cocycle_;
    Tensor3 vbracket_;
};

/// Verdict on the seven compatibility axioms (labels LE1..LE7) that make a
/// raw datum an extending structure. LE1 runs over all pairs including the
/// diagonal (so it forces both maps V x V -> * to be alternating); the other
/// axioms run over the reduced tuple sets that, together with LE1, decide the
/// full quantified statements.
AxiomReport check_extending_structure(const ExtendingDatum& datum);

/// Structure constants of the bracket
///   [(g,x),(h,y)] = ([g,h] + x|>h - y|>g + f(x,y), {x,y} + x<|h - y<|g)
/// on the concatenated basis (g first, V second), with no validation at all.
/// On invalid data the result simply fails check_lie; that contrast is
/// exactly what the exhaustive cross-check exercises.
LieAlgebra assemble_unified(const ExtendingDatum& datum);

/// Validating constructor: checks the axioms, then assembles. Throws
/// AxiomError carrying the report when the datum is not an extending
/// structure.
LieAlgebra unified_product(const ExtendingDatum& datum);

/// Cocycle conditions for the two-sided special case with both actions zero
/// (labels VLIE, CC1, CC2, CC3): v is a Lie algebra, f is alternating,
/// [g, f(x,y)] = 0, and the cyclic f-sum over {x,y,z} vanishes.
AxiomReport check_twisted_data(const LieAlgebra& g, const LieAlgebra& v,
                               const Tensor3& cocycle);

/// Builds the algebra with bracket [(g,x),(h,y)] = ([g,h] + f(x,y), {x,y}).
/// Throws AxiomError on a cocycle violation.
LieAlgebra twisted_product(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& cocycle);

/// Crossed-system conditions (labels VLIE, CS1..CS4): v a Lie algebra, f
/// alternating, |> acts by derivations, the twisted-module law
/// {x,y} |> g = x|>(y|>g) - y|>(x|>g) + [g, f(x,y)], and the cyclic sum
/// f(x,{y,z}) + f(y,{z,x}) + f(z,{x,y}) + x|>f(y,z) + y|>f(z,x) + z|>f(x,y) = 0.
AxiomReport check_crossed_system(const LieAlgebra& g, const LieAlgebra& v,
                                 const Tensor3& raction, const Tensor3& cocycle);

/// Builds the algebra with bracket
///   [(g,x),(h,y)] = ([g,h] + x|>h - y|>g + f(x,y), {x,y});
/// its first block is an ideal. Throws AxiomError on an axiom violation.
LieAlgebra crossed_product(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& raction,
                           const Tensor3& cocycle);

/// Matched-pair conditions (labels VLIE, RMOD, LMOD, MP1, MP2): v a Lie
/// algebra, <| a right g-module, |> a left v-module action on g, and the two
/// mixed compatibilities.
AxiomReport check_matched_pair(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& laction,
                               const Tensor3& raction);

/// Builds the algebra with bracket
///   [(g,x),(h,y)] = ([g,h] + x|>h - y|>g, {x,y} + x<|h - y<|g);
/// both blocks are subalgebras. Throws AxiomError on an axiom violation.
LieAlgebra bicrossed_product(const LieAlgebra& g, const LieAlgebra& v, const Tensor3& laction,
                             const Tensor3& raction);

/// Reads a datum off a big algebra e whose first g_dim basis vectors span a
/// subalgebra, using a retraction p (g_dim x dim(e), with p restricted to the
/// first block the identity). The complement basis is v_x = e_{g_dim+x} -
/// p(e_{g_dim+x}), and the tables are
///   x |> g = p([x,g]),  x <| g = [x,g] - p([x,g]),
///   f(x,y) = p([x,y]),  {x,y} = [x,y] - p([x,y]).
/// Omitting p selects the coordinate projection onto the first block, in
/// which case unified_product(extract_datum(e, k)) reproduces e entry-wise.
/// Throws Error when the first block is not closed under the bracket or p is
/// not a retraction.
ExtendingDatum extract_datum(const LieAlgebra& e, std::size_t g_dim,
                             const std::optional<LinearMap>& p = std::nullopt);

/// The pieces recovered from an algebra with a designated ideal: the ideal
/// with its own bracket, the quotient algebra, and the action/cocycle tables
/// of the crossed presentation.
struct CrossedSystem {
    LieAlgebra ideal;
    LieAlgebra quotient;
    Tensor3 raction;  // (m, g_dim, g_dim)
    Tensor3 cocycle;  // (m, m, g_dim)
};

/// Splits e over the ideal spanned by its first g_dim basis vectors, using a
/// section s (dim(e) x m, tail coordinates the identity) of the quotient
/// projection. Tables: x |> g = [s(x), g] and f(x,y) = [s(x),s(y)] - s([x,y]).
/// Omitting s selects the coordinate section. Throws Error when the first
/// block is not an ideal or s is not a section.
CrossedSystem extract_crossed_system(const LieAlgebra& e, std::size_t g_dim,
                                     const std::optional<LinearMap>& s = std::nullopt);

/// A candidate map between two products built on the same g and V:
/// psi(g, x) = (g + r(x), v(x)) with r: V -> g and v: V -> V.
struct MorphismData {
    LinearMap r;  // n x m
    LinearMap v;  // m x m
};

/// Verdict of the four morphism conditions (labels ML1..ML4) for
/// psi: product(datum) -> product(target), plus whether psi is invertible
/// (equivalent to v being invertible).
struct MorphismReport {
    AxiomReport axioms;
    bool isomorphism = false;

    bool passed() const { return axioms.passed(); }
};

MorphismReport check_morphism(const ExtendingDatum& datum, const ExtendingDatum& target,
                              const MorphismData& m);

/// Pushes a datum forward through an invertible change of complement
/// (r, v): the unique target datum for which psi(g,x) = (g + r(x), v(x)) is
/// an isomorphism of the products. Throws on a non-invertible v.
ExtendingDatum transform_datum(const ExtendingDatum& datum, const MorphismData& m);

/// True iff target is exactly the (r, v)-transform of datum. Throws on a
/// non-invertible v.
bool datum_equivalent(const ExtendingDatum& datum, const ExtendingDatum& target,
                      const MorphismData& m);

/// True iff the data share <| and target is the r-shift of datum with the
/// complement fixed:
///   x |>' g = x|>g + r(x<|g) - [r(x), g],
///   f'(x,y) = f(x,y) + r({x,y}) + [r(x),r(y)] + y|>r(x) - x|>r(y)
///             + r(y<|r(x)) - r(x<|r(y)),
///   {x,y}' = {x,y} - x<|r(y) + y<|r(x).
bool datum_cohomologous(const ExtendingDatum& datum, const ExtendingDatum& target,
                        const LinearMap& r);

/// Verdict on a product-splitting endomorphism phi of an algebra l
/// (labels CP1: phi != +-Id, CP2: phi squares to the identity, CP3: the
/// integrability law phi([g,h]) = [phi(g),h] + [g,phi(h)] - phi([phi(g),phi(h)])).
/// When all three pass, the +1/-1 eigenspaces are reported along with
/// closure of each under the bracket and the direct-sum decomposition.
/// squares_to_phi records the idempotency observation without judging it.
struct ComplexProductReport {
    AxiomReport axioms;
    bool squares_to_identity = false;
    bool squares_to_phi = false;
    SubspaceBasis plus_space;
    SubspaceBasis minus_space;
    bool plus_closed = false;
    bool minus_closed = false;
    bool decomposition = false;

    bool passed() const {
        return axioms.passed() && plus_closed && minus_closed && decomposition;
    }
};

/// Requires characteristic != 2 (throws Error otherwise).
ComplexProductReport check_complex_product_structure(const LieAlgebra& l, const LinearMap& phi);

}  // namespace liext
