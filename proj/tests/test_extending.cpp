#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "liext/catalog.hpp"
#include "liext/extending.hpp"
#include "liext/lie_algebra.hpp"

using namespace liext;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Vec e(std::size_t dim, std::size_t k, const FieldSpec& field = kQ) {
    Vec v = zero_vec(dim, field);
    v[k] = Scalar::one(field);
    return v;
}

Vec vec_q(const std::vector<int>& entries) {
    Vec v;
    for (int x : entries) v.push_back(Scalar::from_int(x, kQ));
    return v;
}

/// All raw data over a prime field for the given base algebra and complement
/// dimension, in odometer order over the flat tensor slots.
std::vector<ExtendingDatum> all_raw_data(const LieAlgebra& g, std::size_t m) {
    const std::size_t n = g.dim();
    const FieldSpec& f = g.field();
    const std::int64_t p = static_cast<std::int64_t>(f.characteristic());
    const std::size_t slots = m * n * m + m * n * n + m * m * n + m * m * m;

    std::vector<ExtendingDatum> out;
    std::vector<std::int64_t> digits(slots, 0);
    while (true) {
        Tensor3 la(m, n, m, f), ra(m, n, n, f), co(m, m, n, f), vb(m, m, m, f);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < la.size(); ++i) la.flat(i) = Scalar::from_int(digits[pos++], f);
        for (std::size_t i = 0; i < ra.size(); ++i) ra.flat(i) = Scalar::from_int(digits[pos++], f);
        for (std::size_t i = 0; i < co.size(); ++i) co.flat(i) = Scalar::from_int(digits[pos++], f);
        for (std::size_t i = 0; i < vb.size(); ++i) vb.flat(i) = Scalar::from_int(digits[pos++], f);
        out.emplace_back(g, m, la, ra, co, vb);

        std::size_t carry = 0;
        while (carry < slots && ++digits[carry] == p) digits[carry++] = 0;
        if (carry == slots) break;
    }
    return out;
}

Scalar random_scalar(std::mt19937& rng, const FieldSpec& f) {
    if (f.characteristic() != 0) {
        std::uniform_int_distribution<std::int64_t> dist(
            0, static_cast<std::int64_t>(f.characteristic()) - 1);
        return Scalar::from_int(dist(rng), f);
    }
    std::uniform_int_distribution<int> num(-3, 3);
    return Scalar::from_int(num(rng), f);
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, const FieldSpec& f) {
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, f);
    }
    return m;
}

Matrix random_invertible(std::mt19937& rng, std::size_t n, const FieldSpec& f) {
    while (true) {
        Matrix m = random_matrix(rng, n, n, f);
        if (try_inverse(m).has_value()) return m;
    }
}

}  // namespace

TEST_CASE("datum construction validates table shapes") {
    LieAlgebra g = catalog("sl2", kQ);
    CHECK_NOTHROW(ExtendingDatum::trivial(g, 2));
    CHECK_THROWS_AS(ExtendingDatum(g, 2, Tensor3(2, 3, 2, kQ), Tensor3(2, 3, 3, kQ),
                                   Tensor3(2, 2, 3, kQ), Tensor3(2, 2, 3, kQ)),
                    Error);
    CHECK_THROWS_AS(ExtendingDatum(g, 2, Tensor3(1, 3, 2, kQ), Tensor3(2, 3, 3, kQ),
                                   Tensor3(2, 2, 3, kQ), Tensor3(2, 2, 2, kQ)),
                    Error);
    const FieldSpec f7 = FieldSpec::prime(7);
    CHECK_THROWS_AS(ExtendingDatum(g, 2, Tensor3(2, 3, 2, f7), Tensor3(2, 3, 3, kQ),
                                   Tensor3(2, 2, 3, kQ), Tensor3(2, 2, 2, kQ)),
                    Error);
}

TEST_CASE("trivial datum passes and builds the direct sum") {
    LieAlgebra g = catalog("sl2", kQ);
    ExtendingDatum d = ExtendingDatum::trivial(g, 2);

    AxiomReport rep = check_extending_structure(d);
    CHECK(rep.passed());
    for (const char* label : {"LE1", "LE2", "LE3", "LE4", "LE5", "LE6", "LE7"}) {
        CHECK(rep.has(label));
        CHECK(rep.passed(label));
    }

    LieAlgebra sum = unified_product(d);
    CHECK(sum.dim() == 5);
    CHECK(check_lie(sum).passed());
    // Block structure: g on the first three coordinates, zero elsewhere.
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Vec inner = g.bracket_basis(i, j);
            inner.insert(inner.end(), 2, Scalar::zero(kQ));
            CHECK(sum.bracket_basis(i, j) == inner);
        }
    }
    CHECK(is_zero_vec(sum.bracket_basis(0, 3)));
    CHECK(is_zero_vec(sum.bracket_basis(3, 4)));
}

TEST_CASE("a nonzero diagonal cocycle entry fails LE1 with its witness") {
    LieAlgebra g(std::string("a2"), kQ, 2);
    ExtendingDatum d = ExtendingDatum::trivial(g, 2);
    d.cocycle().at(0, 0, 0) = Scalar::one(kQ);

    AxiomReport rep = check_extending_structure(d);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.passed("LE1"));
    CHECK(rep.passed("LE2"));
    const auto& checks = rep.checks();
    REQUIRE(!checks.empty());
    REQUIRE(checks[0].witness.has_value());
    CHECK(checks[0].witness->tuple == std::vector<std::size_t>{0, 0});
    CHECK(checks[0].witness->defect == vec_q({1, 0}));

    CHECK_THROWS_AS(unified_product(d), AxiomError);
    try {
        unified_product(d);
    } catch (const AxiomError& err) {
        CHECK(err.report().failing_labels() == std::vector<std::string>{"LE1"});
    }
}

TEST_CASE("axiom verdict matches direct bracket verification on every F_2 datum") {
    const FieldSpec f2 = FieldSpec::prime(2);
    LieAlgebra g(std::string("a1"), f2, 1);
    std::vector<ExtendingDatum> data = all_raw_data(g, 1);
    REQUIRE(data.size() == 16);

    std::size_t valid = 0;
    for (const ExtendingDatum& d : data) {
        const bool structure = check_extending_structure(d).passed();
        const bool lie = check_lie(assemble_unified(d)).passed();
        CHECK(structure == lie);
        if (structure) ++valid;
    }
    CHECK(valid == 4);
}

TEST_CASE("scalar action data build the expected 1-extension brackets") {
    LieAlgebra g = catalog("gl2", kQ);
    // x <| g = t(g) x with t the trace functional, x |> g = 0, f = 0, {} = 0.
    ExtendingDatum d = ExtendingDatum::trivial(g, 1);
    const Vec lambda = vec_q({1, 0, 0, 1});
    for (std::size_t i = 0; i < 4; ++i) d.laction().at(0, i, 0) = lambda[i];

    CHECK(check_extending_structure(d).passed());
    LieAlgebra ext = unified_product(d);
    CHECK(ext.dim() == 5);
    CHECK(check_lie(ext).passed());

    // [(g,0),(0,x)] = (0, -t(g) x): the V-coordinate of [e_i, x] is -t(e_i).
    for (std::size_t i = 0; i < 4; ++i) {
        Vec b = ext.bracket_basis(i, 4);
        CHECK(b[4] == -lambda[i]);
        for (std::size_t k = 0; k < 4; ++k) CHECK(b[k].is_zero());
    }
}

TEST_CASE("random valid F_3 data produce honest Lie brackets") {
    const FieldSpec f3 = FieldSpec::prime(3);
    LieAlgebra g = make_lie_algebra("n2", f3, 2, {{0, 1, {Scalar::zero(f3), Scalar::one(f3)}}});
    std::mt19937 rng(12345);

    std::size_t found = 0;
    for (int trial = 0; trial < 400 && found < 10; ++trial) {
        ExtendingDatum d = ExtendingDatum::trivial(g, 1);
        for (std::size_t i = 0; i < d.laction().size(); ++i) {
            d.laction().flat(i) = random_scalar(rng, f3);
        }
        for (std::size_t i = 0; i < d.raction().size(); ++i) {
            d.raction().flat(i) = random_scalar(rng, f3);
        }
        if (!check_extending_structure(d).passed()) continue;
        ++found;
        CHECK(check_lie(unified_product(d)).passed());
    }
    CHECK(found == 10);
}

TEST_CASE("a central cocycle on two abelian lines builds the Heisenberg algebra") {
    LieAlgebra g(std::string("a1"), kQ, 1);
    LieAlgebra v(std::string("a2"), kQ, 2);
    Tensor3 f(2, 2, 1, kQ);
    f.at(0, 1, 0) = Scalar::one(kQ);
    f.at(1, 0, 0) = -Scalar::one(kQ);

    CHECK(check_twisted_data(g, v, f).passed());
    LieAlgebra tw = twisted_product(g, v, f);
    CHECK(check_lie(tw).passed());
    // Basis order (e1, x1, x2): the only bracket is [x1, x2] = e1.
    CHECK(tw.bracket_basis(1, 2) == vec_q({1, 0, 0}));
    CHECK(is_zero_vec(tw.bracket_basis(0, 1)));
    CHECK(is_zero_vec(tw.bracket_basis(0, 2)));

    // Same algebra as the catalog one after the basis rotation
    // (x1, x2, e1) -> (e1', e2', e3').
    LieAlgebra h3 = catalog("heisenberg3", kQ);
    Matrix phi(3, 3, kQ);
    phi.at(2, 0) = Scalar::one(kQ);  // e1 -> e3'
    phi.at(0, 1) = Scalar::one(kQ);  // x1 -> e1'
    phi.at(1, 2) = Scalar::one(kQ);  // x2 -> e2'
    CHECK(is_isomorphism(tw, h3, phi));
}

TEST_CASE("non-central cocycle values are rejected with a CC2 witness") {
    LieAlgebra g = catalog("sl2", kQ);
    LieAlgebra v(std::string("a2"), kQ, 2);
    Tensor3 f(2, 2, 3, kQ);
    f.at(0, 1, 0) = Scalar::one(kQ);
    f.at(1, 0, 0) = -Scalar::one(kQ);

    AxiomReport rep = check_twisted_data(g, v, f);
    CHECK_FALSE(rep.passed());
    CHECK(rep.passed("VLIE"));
    CHECK(rep.passed("CC1"));
    CHECK_FALSE(rep.passed("CC2"));
    CHECK_THROWS_AS(twisted_product(g, v, f), AxiomError);
}

TEST_CASE("crossed product with no action reduces to the twisted product") {
    LieAlgebra g(std::string("a1"), kQ, 1);
    LieAlgebra v(std::string("a2"), kQ, 2);
    Tensor3 f(2, 2, 1, kQ);
    f.at(0, 1, 0) = Scalar::one(kQ);
    f.at(1, 0, 0) = -Scalar::one(kQ);
    Tensor3 zero_action(2, 1, 1, kQ);

    CHECK(check_crossed_system(g, v, zero_action, f).passed());
    CHECK(crossed_product(g, v, zero_action, f) == twisted_product(g, v, f));
}

TEST_CASE("crossed product on an abelian base realizes the dual-pair bracket") {
    // Two commuting actions of an abelian plane on an abelian plane.
    LieAlgebra g(std::string("a2"), kQ, 2);
    LieAlgebra v(std::string("v2"), kQ, 2);
    Tensor3 act(2, 2, 2, kQ);
    act.at(0, 0, 0) = Scalar::one(kQ);  // x1 |> e1 = e1
    act.at(1, 1, 1) = Scalar::one(kQ);  // x2 |> e2 = e2
    Tensor3 f(2, 2, 2, kQ);

    AxiomReport rep = check_crossed_system(g, v, act, f);
    CHECK(rep.passed());
    LieAlgebra cr = crossed_product(g, v, act, f);
    CHECK(check_lie(cr).passed());

    // [(0,x),(h,0)] = (x |> h, 0) and the first block is an ideal.
    CHECK(cr.bracket_basis(2, 0) == vec_q({1, 0, 0, 0}));
    CHECK(cr.bracket_basis(3, 1) == vec_q({0, 1, 0, 0}));
    CHECK(is_zero_vec(cr.bracket_basis(2, 1)));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            Vec b = cr.bracket_basis(i, j);
            CHECK(b[2].is_zero());
            CHECK(b[3].is_zero());
        }
    }

    // Non-commuting actions violate the module law CS3.
    Tensor3 bad(2, 2, 2, kQ);
    bad.at(0, 0, 1) = Scalar::one(kQ);  // x1 |> e1 = e2
    bad.at(1, 1, 0) = Scalar::one(kQ);  // x2 |> e2 = e1
    AxiomReport bad_rep = check_crossed_system(g, v, bad, f);
    CHECK_FALSE(bad_rep.passed());
    CHECK_FALSE(bad_rep.passed("CS3"));
}

TEST_CASE("matched-pair verdict matches direct bracket verification over F_2") {
    const FieldSpec f2 = FieldSpec::prime(2);
    LieAlgebra g(std::string("a1"), f2, 1);
    LieAlgebra v(std::string("a2"), f2, 2);

    std::size_t agreements = 0;
    for (std::size_t bits = 0; bits < 64; ++bits) {
        Tensor3 la(2, 1, 2, f2);
        Tensor3 ra(2, 1, 1, f2);
        std::size_t b = bits;
        for (std::size_t i = 0; i < 4; ++i, b >>= 1) {
            la.flat(i) = Scalar::from_int(static_cast<std::int64_t>(b & 1), f2);
        }
        for (std::size_t i = 0; i < 2; ++i, b >>= 1) {
            ra.flat(i) = Scalar::from_int(static_cast<std::int64_t>(b & 1), f2);
        }

        const bool ok = check_matched_pair(g, v, la, ra).passed();
        ExtendingDatum d(g, 2, la, ra, Tensor3(2, 2, 1, f2), v.sc());
        const bool lie = check_lie(assemble_unified(d)).passed();
        CHECK(ok == lie);
        if (ok == lie) ++agreements;

        if (ok) {
            LieAlgebra bi = bicrossed_product(g, v, la, ra);
            CHECK(check_lie(bi).passed());
            // Both blocks close: V-components of [g,g] and g-components of [V,V].
            CHECK(is_zero_vec(Vec{bi.bracket_basis(1, 2)[0]}));
        }
    }
    CHECK(agreements == 64);
}

TEST_CASE("extraction inverts the unified product on every valid F_2 datum") {
    const FieldSpec f2 = FieldSpec::prime(2);
    LieAlgebra g(std::string("a1"), f2, 1);
    std::size_t valid = 0;
    for (const ExtendingDatum& d : all_raw_data(g, 1)) {
        if (!check_extending_structure(d).passed()) continue;
        ++valid;
        LieAlgebra prod = unified_product(d);
        ExtendingDatum back = extract_datum(prod, 1);
        CHECK(back == d);
    }
    CHECK(valid == 4);
}

TEST_CASE("extraction of a direct product gives the trivial datum") {
    LieAlgebra g = catalog("sl2", kQ);
    LieAlgebra sum = unified_product(ExtendingDatum::trivial(g, 2));
    ExtendingDatum d = extract_datum(sum, 3);
    CHECK(d == ExtendingDatum::trivial(g, 2));
}

TEST_CASE("extraction preconditions are enforced") {
    LieAlgebra h3 = catalog("heisenberg3", kQ);
    // [e1, e2] = e3 escapes the span of the first two vectors.
    CHECK_THROWS_AS(extract_datum(h3, 2), Error);

    LieAlgebra g(std::string("a1"), kQ, 1);
    LieAlgebra v(std::string("a2"), kQ, 2);
    Tensor3 f(2, 2, 1, kQ);
    f.at(0, 1, 0) = Scalar::one(kQ);
    f.at(1, 0, 0) = -Scalar::one(kQ);
    LieAlgebra tw = twisted_product(g, v, f);

    Matrix bad_p(1, 3, kQ);
    bad_p.at(0, 0) = Scalar::from_int(2, kQ);
    CHECK_THROWS_AS(extract_datum(tw, 1, bad_p), Error);
    Matrix bad_shape(2, 3, kQ);
    CHECK_THROWS_AS(extract_datum(tw, 1, bad_shape), Error);
}

TEST_CASE("an arbitrary retraction extracts an isomorphic presentation") {
    LieAlgebra g(std::string("a1"), kQ, 1);
    LieAlgebra v(std::string("a2"), kQ, 2);
    Tensor3 f(2, 2, 1, kQ);
    f.at(0, 1, 0) = Scalar::one(kQ);
    f.at(1, 0, 0) = -Scalar::one(kQ);
    LieAlgebra tw = twisted_product(g, v, f);

    Matrix p(1, 3, kQ);
    p.at(0, 0) = Scalar::one(kQ);
    p.at(0, 1) = Scalar::from_int(2, kQ);
    p.at(0, 2) = Scalar::from_int(3, kQ);

    ExtendingDatum d = extract_datum(tw, 1, p);
    CHECK(check_extending_structure(d).passed());
    CHECK(d.cocycle().at(0, 1, 0) == Scalar::one(kQ));

    // phi(g, x) = g + x sends the product back onto tw.
    LieAlgebra prod = unified_product(d);
    Matrix phi = Matrix::identity(3, kQ);
    phi.at(0, 1) = -Scalar::from_int(2, kQ);
    phi.at(0, 2) = -Scalar::from_int(3, kQ);
    CHECK(is_isomorphism(prod, tw, phi));
}

TEST_CASE("crossed-system extraction recovers the Heisenberg central cocycle") {
    // Heisenberg with the center first: basis (c, a, b), [a, b] = c.
    LieAlgebra heis = make_lie_algebra("h3c", kQ, 3, {{1, 2, vec_q({1, 0, 0})}});
    CHECK(check_lie(heis).passed());

    CrossedSystem cs = extract_crossed_system(heis, 1);
    CHECK(cs.ideal.dim() == 1);
    CHECK(cs.quotient.dim() == 2);
    CHECK(cs.quotient.sc().is_zero());
    CHECK(cs.raction.is_zero());
    CHECK(cs.cocycle.at(0, 1, 0) == Scalar::one(kQ));
    CHECK(cs.cocycle.at(1, 0, 0) == -Scalar::one(kQ));

    // Rebuilding from the canonical section reproduces the algebra verbatim.
    CHECK(crossed_product(cs.ideal, cs.quotient, cs.raction, cs.cocycle) == heis);

    // sl(2) has no 1-dimensional leading ideal.
    CHECK_THROWS_AS(extract_crossed_system(catalog("sl2", kQ), 1), Error);
}

TEST_CASE("crossed-system extraction round-trips a built crossed product") {
    LieAlgebra g(std::string("a2"), kQ, 2);
    LieAlgebra v(std::string("v2"), kQ, 2);
    Tensor3 act(2, 2, 2, kQ);
    act.at(0, 0, 0) = Scalar::one(kQ);
    act.at(1, 1, 1) = Scalar::one(kQ);
    Tensor3 f(2, 2, 2, kQ);
    f.at(0, 1, 0) = Scalar::from_int(5, kQ);
    f.at(1, 0, 0) = Scalar::from_int(-5, kQ);

    REQUIRE(check_crossed_system(g, v, act, f).passed());
    LieAlgebra cr = crossed_product(g, v, act, f);
    CrossedSystem cs = extract_crossed_system(cr, 2);
    CHECK(cs.ideal == g);
    CHECK(cs.quotient == v);
    CHECK(cs.raction == act);
    CHECK(cs.cocycle == f);
}

TEST_CASE("identity morphism data pass and flag an isomorphism") {
    LieAlgebra g = catalog("sl2", kQ);
    ExtendingDatum d = ExtendingDatum::trivial(g, 2);
    MorphismData mo{Matrix(3, 2, kQ), Matrix::identity(2, kQ)};

    MorphismReport rep = check_morphism(d, d, mo);
    CHECK(rep.passed());
    CHECK(rep.isomorphism);
    for (const char* label : {"ML1", "ML2", "ML3", "ML4"}) CHECK(rep.axioms.passed(label));

    // v = 0 still satisfies the conditions here but is no isomorphism.
    MorphismData degenerate{Matrix(3, 2, kQ), Matrix(2, 2, kQ)};
    MorphismReport deg = check_morphism(d, d, degenerate);
    CHECK(deg.passed());
    CHECK_FALSE(deg.isomorphism);
}

TEST_CASE("mismatched scalar actions break the first morphism condition") {
    LieAlgebra g = catalog("gl2", kQ);
    ExtendingDatum d1 = ExtendingDatum::trivial(g, 1);
    ExtendingDatum d2 = ExtendingDatum::trivial(g, 1);
    for (std::size_t i : {std::size_t(0), std::size_t(3)}) {
        d1.laction().at(0, i, 0) = Scalar::one(kQ);
        d2.laction().at(0, i, 0) = Scalar::from_int(2, kQ);
    }
    REQUIRE(check_extending_structure(d1).passed());
    REQUIRE(check_extending_structure(d2).passed());

    MorphismData mo{Matrix(4, 1, kQ), Matrix::identity(1, kQ)};
    MorphismReport rep = check_morphism(d1, d2, mo);
    CHECK_FALSE(rep.axioms.passed("ML1"));
}

TEST_CASE("transform-based and morphism-based equivalence agree exhaustively over F_2") {
    const FieldSpec f2 = FieldSpec::prime(2);
    LieAlgebra g(std::string("a1"), f2, 1);

    std::vector<ExtendingDatum> valid;
    for (const ExtendingDatum& d : all_raw_data(g, 1)) {
        if (check_extending_structure(d).passed()) valid.push_back(d);
    }
    REQUIRE(valid.size() == 4);

    for (const ExtendingDatum& a : valid) {
        for (const ExtendingDatum& b : valid) {
            for (int rbit = 0; rbit < 2; ++rbit) {
                Matrix r(1, 1, f2);
                r.at(0, 0) = Scalar::from_int(rbit, f2);
                MorphismData mo{r, Matrix::identity(1, f2)};
                const bool via_transform = datum_equivalent(a, b, mo);
                MorphismReport rep = check_morphism(a, b, mo);
                CHECK(via_transform == (rep.passed() && rep.isomorphism));
            }
        }
    }
}

TEST_CASE("transforms of a valid datum stay valid and remain equivalent") {
    LieAlgebra g = catalog("gl2", kQ);
    ExtendingDatum d = ExtendingDatum::trivial(g, 2);
    // A valid starting structure: both complement lines act by the trace.
    for (std::size_t x = 0; x < 2; ++x) {
        d.laction().at(x, 0, x) = Scalar::one(kQ);
        d.laction().at(x, 3, x) = Scalar::one(kQ);
    }
    REQUIRE(check_extending_structure(d).passed());

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 12; ++trial) {
        MorphismData mo{random_matrix(rng, 4, 2, kQ), random_invertible(rng, 2, kQ)};
        ExtendingDatum moved = transform_datum(d, mo);
        CHECK(check_extending_structure(moved).passed());
        CHECK(datum_equivalent(d, moved, mo));
        MorphismReport rep = check_morphism(d, moved, mo);
        CHECK(rep.passed());
        CHECK(rep.isomorphism);
        // The products really are isomorphic Lie algebras.
        CHECK(check_lie(unified_product(moved)).passed());
    }

    Matrix singular(2, 2, kQ);
    singular.at(0, 0) = Scalar::one(kQ);
    CHECK_THROWS_AS(transform_datum(d, MorphismData{Matrix(4, 2, kQ), singular}), Error);
}

TEST_CASE("complement shifts are exactly the equivalences with identity v") {
    LieAlgebra g = catalog("gl2", kQ);
    ExtendingDatum d = ExtendingDatum::trivial(g, 2);
    for (std::size_t x = 0; x < 2; ++x) {
        d.laction().at(x, 0, x) = Scalar::one(kQ);
        d.laction().at(x, 3, x) = Scalar::one(kQ);
    }
    REQUIRE(check_extending_structure(d).passed());

    std::mt19937 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        Matrix r = random_matrix(rng, 4, 2, kQ);
        MorphismData mo{r, Matrix::identity(2, kQ)};
        ExtendingDatum shifted = transform_datum(d, mo);
        CHECK(datum_cohomologous(d, shifted, r));
        CHECK(datum_equivalent(d, shifted, mo));
    }

    // r = 0 relates a datum only to itself.
    CHECK(datum_cohomologous(d, d, Matrix(4, 2, kQ)));
    ExtendingDatum other = d;
    other.raction().at(0, 1, 1) = Scalar::one(kQ);
    CHECK_FALSE(datum_cohomologous(d, other, Matrix(4, 2, kQ)));
}

TEST_CASE("block reflection is a product-splitting map on a direct sum") {
    LieAlgebra g = catalog("sl2", kQ);
    LieAlgebra sum = unified_product(ExtendingDatum::trivial(g, 2));

    Matrix phi(5, 5, kQ);
    for (std::size_t i = 0; i < 3; ++i) phi.at(i, i) = Scalar::one(kQ);
    for (std::size_t i = 3; i < 5; ++i) phi.at(i, i) = -Scalar::one(kQ);

    ComplexProductReport rep = check_complex_product_structure(sum, phi);
    CHECK(rep.passed());
    CHECK(rep.squares_to_identity);
    CHECK_FALSE(rep.squares_to_phi);
    CHECK(rep.plus_space.dim() == 3);
    CHECK(rep.minus_space.dim() == 2);
    CHECK(rep.plus_space.contains(e(5, 0)));
    CHECK(rep.minus_space.contains(e(5, 4)));
    CHECK(rep.plus_closed);
    CHECK(rep.minus_closed);
    CHECK(rep.decomposition);
}

TEST_CASE("degenerate or non-integrable splitting candidates are rejected") {
    LieAlgebra g = catalog("sl2", kQ);

    ComplexProductReport id_rep =
        check_complex_product_structure(g, Matrix::identity(3, kQ));
    CHECK_FALSE(id_rep.axioms.passed("CP1"));
    CHECK(id_rep.squares_to_identity);
    CHECK(id_rep.squares_to_phi);

    Matrix neg(3, 3, kQ);
    for (std::size_t i = 0; i < 3; ++i) neg.at(i, i) = -Scalar::one(kQ);
    CHECK_FALSE(check_complex_product_structure(g, neg).axioms.passed("CP1"));

    // diag(1, 1, -1) fails the integrability law on sl(2).
    Matrix refl = Matrix::identity(3, kQ);
    refl.at(2, 2) = -Scalar::one(kQ);
    ComplexProductReport bad = check_complex_product_structure(g, refl);
    CHECK(bad.axioms.passed("CP1"));
    CHECK(bad.axioms.passed("CP2"));
    CHECK_FALSE(bad.axioms.passed("CP3"));
    CHECK_FALSE(bad.passed());

    // A projection squares to itself, not to the identity.
    LieAlgebra plane(std::string("a2"), kQ, 2);
    Matrix proj(2, 2, kQ);
    proj.at(0, 0) = Scalar::one(kQ);
    ComplexProductReport prep = check_complex_product_structure(plane, proj);
    CHECK_FALSE(prep.axioms.passed("CP2"));
    CHECK(prep.squares_to_phi);
    CHECK_FALSE(prep.squares_to_identity);

    const FieldSpec f2 = FieldSpec::prime(2);
    LieAlgebra mod2(std::string("a2"), f2, 2);
    CHECK_THROWS_AS(check_complex_product_structure(mod2, Matrix::identity(2, f2)), Error);
}
