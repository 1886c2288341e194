#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liext/extending.hpp"
#include "liext/lie_algebra.hpp"
#include "liext/report.hpp"

namespace liext {

/// A pair (lambda, D) of a functional and an endomorphism of the same
/// algebra, subject to the two laws of check_twisted_derivation:
///   lambda([g,h]) = 0,
///   D([g,h]) = [D(g),h] + [g,D(h)] + lambda(g) D(h) - lambda(h) D(g).
struct TwistedDerivation {
    LinearFunctional lambda;  // length n
    LinearMap d;              // n x n
};

/// Certificate that two pairs are related: D = q D' + [g0,-] - lambda(-) g0.
/// q is nonzero for the scaled relation and pinned to 1 for the shift
/// relation.
struct EquivalenceWitness {
    Scalar q;
    Vec g0;
};

/// Verdict on the two defining laws, labelled TD1 (lambda kills brackets)
/// and TD2 (the twisted Leibniz identity), each over basis pairs i < j.
AxiomReport check_twisted_derivation(const LieAlgebra& l, const LinearFunctional& lambda,
                                     const LinearMap& d);

/// Canonical basis of the functionals vanishing on the derived subalgebra —
/// exactly the lambdas admissible in a twisted derivation. Dimension is
/// n - dim [l, l]; in particular zero for perfect algebras.
SubspaceBasis lambda_space(const LieAlgebra& l);

/// Canonical basis (inside the n^2 endomorphism space, column-major
/// flattening) of all D forming a twisted derivation with this fixed lambda.
/// Throws Error when lambda does not vanish on the derived subalgebra.
/// At lambda = 0 this is exactly derivations(l).
SubspaceBasis dspace_for_lambda(const LieAlgebra& l, const LinearFunctional& lambda);

/// The pair (lambda, D_{g0,lambda}) with D_{g0,lambda}(h) = [g0,h] - lambda(h) g0.
/// Throws Error when lambda is not admissible; the result always passes
/// check_twisted_derivation.
TwistedDerivation inner_twisted_derivation(const LieAlgebra& l, const Vec& g0,
                                           const LinearFunctional& lambda);

/// The one-line extending datum of a pair (lambda, D):
///   x <| g = lambda(g) x,  x |> g = D(g),  f = 0,  {-,-} = 0.
ExtendingDatum codim1_datum(const LieAlgebra& l, const LinearFunctional& lambda,
                            const LinearMap& d);

/// The (n+1)-dimensional algebra on basis (e_1..e_n, x) with
///   [(g,0),(h,0)] = ([g,h], 0),  [(g,0),(0,x)] = -(D(g), lambda(g) x).
/// Validates the pair first and throws AxiomError when it fails.
LieAlgebra codim1_product(const LieAlgebra& l, const LinearFunctional& lambda,
                          const LinearMap& d);

/// Decides whether D = q D' + [g0,-] - lambda(-) g0 admits a solution with
/// q != 0, by solving one affine system in the unknowns (q, g0) and, when the
/// particular solution has q = 0, shifting it along a kernel vector with a
/// nonzero q-coordinate. Returns a concrete witness, or nothing when the
/// lambdas differ or every solution has q = 0. Inputs are taken as given and
/// not revalidated.
std::optional<EquivalenceWitness> twder_equivalent(const LieAlgebra& l,
                                                   const TwistedDerivation& a,
                                                   const TwistedDerivation& b);

/// Decides whether D - D' is an inner twisted derivation, i.e. whether
/// D(h) = D'(h) + [g0,h] - lambda(h) g0 for some g0; returns such a g0.
/// Nothing when the lambdas differ or the system is infeasible.
std::optional<Vec> twder_cohomologous(const LieAlgebra& l, const TwistedDerivation& a,
                                      const TwistedDerivation& b);

/// One sampled admissible functional with the dimension of its D-space.
struct ClassificationSample {
    Scalar multiplier;       // lambda = multiplier * (basis functional)
    Vec lambda;
    std::size_t dspace_dim = 0;
};

/// Summary of the codimension-1 landscape over a base algebra: the space of
/// admissible functionals, D-space dimensions at sample points, and — over a
/// prime field small enough to sweep — the exhaustive census of pairs with
/// their class counts under the scaled (q free) and shift (q = 1) relations.
/// Over the rationals the relations stay available as pairwise deciders; no
/// enumeration is attempted.
struct ClassificationReport {
    SubspaceBasis lambda_basis;
    std::vector<ClassificationSample> samples;
    bool enumerated = false;
    std::size_t twder_count = 0;
    std::size_t class_count_scaled = 0;
    std::size_t class_count_shift = 0;
};

/// Samples are taken along each lambda_space basis functional at the given
/// multipliers (default 0, 1, -1, 2 plus two generic values, deduplicated
/// after mapping into the field). The census runs only when the field is
/// prime and the pair count stays within cap.
ClassificationReport classify_codim1(const LieAlgebra& l,
                                     const std::vector<Scalar>& multipliers = {},
                                     std::size_t cap = 4096);

/// Iterated one-line extensions: E_0 = l and E_{i+1} = the codim1_product of
/// E_i with steps[i]. Returns the whole chain E_0, ..., E_m; each E_i sits
/// inside E_{i+1} on the leading coordinates. An invalid step throws
/// AxiomError naming the 1-based step index.
std::vector<LieAlgebra> flag_extend(const LieAlgebra& l,
                                    const std::vector<TwistedDerivation>& steps);

}  // namespace liext
