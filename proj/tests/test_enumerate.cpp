#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "liext/catalog.hpp"
#include "liext/enumerate.hpp"
#include "liext/twder.hpp"

using namespace liext;

namespace {

const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

/// Two-dimensional solvable algebra with [e1,e2] = e2.
LieAlgebra make_aff(const FieldSpec& field) {
    Vec e2{Scalar::zero(field), Scalar::one(field)};
    return LieAlgebra::from_entries("aff2", field, 2, {{0, 1, e2}});
}

} // namespace

TEST_CASE("sweep counts tiny spaces and keeps the bracket cross-check clean") {
    SUBCASE("one-dimensional base over F_2") {
        const EnumerationResult r = enumerate_extending_structures(SearchSpec{LieAlgebra("a1", kF2, 1), 1});
        CHECK(r.census.raw_count == 16);
        CHECK(r.census.valid_count == 4);
        CHECK(r.census.cross_check_failures == 0);
        CHECK(r.valid.size() == 4);
        // The all-zero datum is decoded first and is always consistent.
        CHECK(r.valid.front() == ExtendingDatum::trivial(LieAlgebra("a1", kF2, 1), 1));
    }
    SUBCASE("two-dimensional abelian base over F_2") {
        const EnumerationResult r = enumerate_extending_structures(SearchSpec{LieAlgebra("a2", kF2, 2), 1});
        CHECK(r.census.raw_count == 512);
        CHECK(r.census.valid_count == 28);
        CHECK(r.census.cross_check_failures == 0);
    }
    SUBCASE("one-dimensional base over F_3") {
        const EnumerationResult r = enumerate_extending_structures(SearchSpec{LieAlgebra("a1", kF3, 1), 1});
        CHECK(r.census.raw_count == 81);
        CHECK(r.census.valid_count == 9);
        CHECK(r.census.cross_check_failures == 0);
    }
    SUBCASE("nonabelian two-dimensional base over F_3") {
        const EnumerationResult r = enumerate_extending_structures(SearchSpec{make_aff(kF3), 1});
        CHECK(r.census.raw_count == 19683);
        CHECK(r.census.valid_count == 45);
        CHECK(r.census.cross_check_failures == 0);
    }
}

TEST_CASE("every enumerated valid datum assembles and extracts back") {
    std::vector<LieAlgebra> bases;
    bases.push_back(LieAlgebra("a1", kF2, 1));
    bases.push_back(make_aff(kF3));
    for (const LieAlgebra& g : bases) {
        CAPTURE(g.name());
        const EnumerationResult r = enumerate_extending_structures(SearchSpec{g, 1});
        for (const ExtendingDatum& d : r.valid) {
            const LieAlgebra e = assemble_unified(d);
            CHECK(check_lie(e).passed());
            CHECK(extract_datum(e, g.dim()) == d);
        }
    }
}

TEST_CASE("thread workers produce the identical census and ordering") {
    SearchSpec serial{LieAlgebra("a2", kF3, 2), 1};
    SearchSpec threaded = serial;
    threaded.threads = 3;
    const EnumerationResult a = enumerate_extending_structures(serial);
    const EnumerationResult b = enumerate_extending_structures(threaded);
    CHECK(a.census.raw_count == b.census.raw_count);
    CHECK(a.census.valid_count == b.census.valid_count);
    CHECK(a.census.cross_check_failures == b.census.cross_check_failures);
    REQUIRE(a.valid.size() == b.valid.size());
    for (size_t i = 0; i < a.valid.size(); ++i) CHECK(a.valid[i] == b.valid[i]);
    CHECK(a.census.valid_count == 153);

    // More workers than partition slices degrades gracefully.
    SearchSpec tiny{LieAlgebra("a1", kF2, 1), 1};
    tiny.threads = 8;
    const EnumerationResult c = enumerate_extending_structures(tiny);
    CHECK(c.census.raw_count == 16);
    CHECK(c.census.valid_count == 4);
}

TEST_CASE("caps and field preconditions are enforced") {
    SUBCASE("default cap rejects a 2^32 search space") {
        SearchSpec spec{LieAlgebra("a2", kF2, 2), 2};
        CHECK_THROWS_WITH_AS((void)enumerate_extending_structures(spec), "cap exceeded", Error);
    }
    SUBCASE("explicit cap boundary") {
        SearchSpec spec{LieAlgebra("a1", kF2, 1), 1};
        spec.cap = 15;
        CHECK_THROWS_WITH_AS((void)enumerate_extending_structures(spec), "cap exceeded", Error);
        spec.cap = 16;
        CHECK(enumerate_extending_structures(spec).census.raw_count == 16);
    }
    SUBCASE("rational base field cannot be swept") {
        SearchSpec spec{LieAlgebra("a1", FieldSpec::rationals(), 1), 1};
        CHECK_THROWS_AS((void)enumerate_extending_structures(spec), Error);
    }
    SUBCASE("empty complement is rejected") {
        SearchSpec spec{LieAlgebra("a1", kF2, 1), 0};
        CHECK_THROWS_AS((void)enumerate_extending_structures(spec), Error);
    }
}

TEST_CASE("invertible matrix tables match the general linear group sizes") {
    auto distinct = [](const std::vector<LinearMap>& ms) {
        std::set<std::vector<std::int64_t>> keys;
        for (const LinearMap& m : ms) {
            std::vector<std::int64_t> key;
            for (size_t c = 0; c < m.cols(); ++c)
                for (size_t r = 0; r < m.rows(); ++r) key.push_back(m.at(r, c).res());
            keys.insert(key);
        }
        return keys.size();
    };
    const std::vector<LinearMap> g1f2 = invertible_matrices(1, kF2);
    const std::vector<LinearMap> g1f3 = invertible_matrices(1, kF3);
    const std::vector<LinearMap> g2f2 = invertible_matrices(2, kF2);
    const std::vector<LinearMap> g2f3 = invertible_matrices(2, kF3);
    const std::vector<LinearMap> g3f2 = invertible_matrices(3, kF2);
    CHECK(g1f2.size() == 1);
    CHECK(g1f3.size() == 2);
    CHECK(g2f2.size() == 6);
    CHECK(g2f3.size() == 48);
    CHECK(g3f2.size() == 168);
    CHECK(distinct(g2f3) == 48);
    CHECK(distinct(g3f2) == 168);
    for (const LinearMap& m : g2f3) CHECK(try_inverse(m).has_value());
}

TEST_CASE("orbit censuses agree with the pairwise classification counts") {
    SUBCASE("one-dimensional base over F_2") {
        const Census eq = orbit_census(SearchSpec{LieAlgebra("a1", kF2, 1), 1}, Relation::equiv);
        const Census co = orbit_census(SearchSpec{LieAlgebra("a1", kF2, 1), 1}, Relation::cohom);
        CHECK(eq.orbit_count_equiv == 3);
        CHECK(co.orbit_count_cohom == 3);
        CHECK(eq.cross_check_failures == 0);
        CHECK(co.cross_check_failures == 0);
        // Only the requested relation's slot is filled.
        CHECK(eq.orbit_count_cohom == 0);
        CHECK(co.orbit_count_equiv == 0);
        const ClassificationReport cls = classify_codim1(LieAlgebra("a1", kF2, 1));
        CHECK(cls.twder_count == eq.valid_count);
        CHECK(cls.class_count_scaled == eq.orbit_count_equiv);
        CHECK(cls.class_count_shift == co.orbit_count_cohom);
    }
    SUBCASE("one-dimensional base over F_3") {
        const Census eq = orbit_census(SearchSpec{LieAlgebra("a1", kF3, 1), 1}, Relation::equiv);
        const Census co = orbit_census(SearchSpec{LieAlgebra("a1", kF3, 1), 1}, Relation::cohom);
        CHECK(eq.orbit_count_equiv == 4);
        CHECK(co.orbit_count_cohom == 5);
        const ClassificationReport cls = classify_codim1(LieAlgebra("a1", kF3, 1));
        CHECK(cls.class_count_scaled == 4);
        CHECK(cls.class_count_shift == 5);
    }
    SUBCASE("two-dimensional abelian base over F_3") {
        const Census eq = orbit_census(SearchSpec{LieAlgebra("a2", kF3, 2), 1}, Relation::equiv);
        const Census co = orbit_census(SearchSpec{LieAlgebra("a2", kF3, 2), 1}, Relation::cohom);
        CHECK(eq.valid_count == 153);
        CHECK(eq.orbit_count_equiv == 49);
        CHECK(co.orbit_count_cohom == 89);
        CHECK(eq.cross_check_failures == 0);
        CHECK(co.cross_check_failures == 0);
        const ClassificationReport cls = classify_codim1(LieAlgebra("a2", kF3, 2));
        CHECK(cls.twder_count == 153);
        CHECK(cls.class_count_scaled == 49);
        CHECK(cls.class_count_shift == 89);
    }
    SUBCASE("nonabelian two-dimensional base over F_2") {
        const Census eq = orbit_census(SearchSpec{make_aff(kF2), 1}, Relation::equiv);
        const Census co = orbit_census(SearchSpec{make_aff(kF2), 1}, Relation::cohom);
        CHECK(eq.valid_count == 12);
        CHECK(eq.orbit_count_equiv == 5);
        CHECK(co.orbit_count_cohom == 5);
        const ClassificationReport cls = classify_codim1(make_aff(kF2));
        CHECK(cls.twder_count == 12);
        CHECK(cls.class_count_scaled == 5);
        CHECK(cls.class_count_shift == 5);
    }
    SUBCASE("coarser relation never has more orbits") {
        // Scaling witnesses include every shift witness's q = 1 case.
        for (const FieldSpec& f : {kF2, kF3}) {
            const Census eq = orbit_census(SearchSpec{LieAlgebra("a1", f, 1), 1}, Relation::equiv);
            const Census co = orbit_census(SearchSpec{LieAlgebra("a1", f, 1), 1}, Relation::cohom);
            CHECK(eq.orbit_count_equiv <= co.orbit_count_cohom);
        }
    }
}

TEST_CASE("a rank-two complement exercises the invertible-witness path") {
    SearchSpec spec{LieAlgebra("a1", kF2, 1), 2};
    spec.cap = size_t{1} << 20;
    spec.threads = 4;
    const EnumerationResult r = enumerate_extending_structures(spec);
    CHECK(r.census.raw_count == 262144);
    CHECK(r.census.valid_count == 120);
    CHECK(r.census.cross_check_failures == 0);
    const Census eq = orbit_census(spec, Relation::equiv);
    CHECK(eq.orbit_count_equiv == 17);
    CHECK(eq.cross_check_failures == 0);
}

TEST_CASE("one-dimensional data biject with the twisted-derivation pairs") {
    struct Row {
        LieAlgebra base;
        size_t count;
    };
    std::vector<Row> rows;
    rows.push_back({LieAlgebra("a1", kF2, 1), 4});
    rows.push_back({LieAlgebra("a1", kF3, 1), 9});
    rows.push_back({LieAlgebra("a2", kF3, 2), 153});
    rows.push_back({make_aff(kF2), 12});
    rows.push_back({make_aff(kF3), 45});
    for (const Row& row : rows) {
        CAPTURE(row.base.name());
        CAPTURE(row.base.field().str());
        const BijectionReport rep = verify_unifdim1_bijection(row.base);
        CHECK(rep.match);
        CHECK(rep.datum_count == row.count);
        CHECK(rep.pair_count == row.count);
        CHECK(rep.unmatched_data == 0);
        CHECK(rep.unmatched_pairs == 0);
    }
}
