#pragma once

#include <cstddef>
#include <vector>

#include "liext/extending.hpp"
#include "liext/lie_algebra.hpp"

namespace liext {

/// One exhaustive sweep: every raw datum on (g, V) over the prime field g is
/// built on, capped so a typo cannot launch an astronomically large run.
struct SearchSpec {
    LieAlgebra g;
    std::size_t dimv = 1;
    std::size_t cap = std::size_t{1} << 20;
    std::size_t threads = 1;
};

/// Tally of a sweep. cross_check_failures counts data where the axiom
/// checker and an independently computed verdict disagreed — zero on a
/// correct implementation, so any nonzero value flags a bug, not bad input.
struct Census {
    std::size_t raw_count = 0;
    std::size_t valid_count = 0;
    std::size_t orbit_count_equiv = 0;
    std::size_t orbit_count_cohom = 0;
    std::size_t cross_check_failures = 0;
};

struct EnumerationResult {
    Census census;
    std::vector<ExtendingDatum> valid;
};

/// The two relations on valid data: `equiv` searches witnesses (r, v) with v
/// invertible, `cohom` restricts to v = Id.
enum class Relation { equiv, cohom };

/// Every invertible m x m matrix over a prime field, in odometer order over
/// the entries. Grows like p^(m^2); intended for tiny m.
std::vector<LinearMap> invertible_matrices(std::size_t m, const FieldSpec& field);

/// Sweeps every raw datum in lexicographic slot order (laction block most
/// significant, then raction, cocycle, vbracket). For each datum the
/// seven-axiom verdict is recorded alongside the verdict of check_lie on the
/// assembled bracket — the two must agree datum by datum, and a disagreement
/// increments cross_check_failures. Valid data are returned in sweep order
/// regardless of thread count (workers own disjoint laction-prefix slices and
/// results are merged in prefix order). Throws "cap exceeded" when the raw
/// count overruns spec.cap, and Error when the field is not prime.
EnumerationResult enumerate_extending_structures(const SearchSpec& spec);

/// Partitions the valid data of the sweep into classes of the requested
/// relation by applying every witness to every valid datum and uniting the
/// endpoints, after verifying each witness step is reversible (failures count
/// as cross-check failures). Fills orbit_count_equiv or orbit_count_cohom;
/// the other count is left zero.
Census orbit_census(const SearchSpec& spec, Relation relation);

/// Two independent enumerations of the same one-line landscape: valid data
/// with dim V = 1 on one side, valid (lambda, D) pairs mapped through
/// codim1_datum on the other.
struct BijectionReport {
    std::size_t datum_count = 0;     // enumerated valid one-line data
    std::size_t pair_count = 0;      // enumerated valid (lambda, D) pairs
    std::size_t unmatched_data = 0;  // data hit by no pair
    std::size_t unmatched_pairs = 0; // pair images outside the valid set
    bool match = false;              // both directions exhausted: a bijection
};

/// Asserts set equality between the two sides over a prime field.
BijectionReport verify_unifdim1_bijection(const LieAlgebra& l,
                                          std::size_t cap = std::size_t{1} << 20);

}  // namespace liext
