#include "liext/enumerate.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "liext/error.hpp"
#include "liext/twder.hpp"

namespace liext {

namespace {

/// Slot bookkeeping for one (n, m) search space. The flat slot order is
/// laction | raction | cocycle | vbracket, each block in its tensor's
/// row-major order; a raw datum is the base-p number over those slots with
/// the first slot most significant.
struct SearchShape {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t la_slots = 0;
    std::size_t rest_slots = 0;  // raction + cocycle + vbracket

    SearchShape(std::size_t n_, std::size_t m_) : n(n_), m(m_) {
        la_slots = m * n * m;
        rest_slots = m * n * n + m * m * n + m * m * m;
    }
};

/// p^exponent, guarded against exceeding the cap (returns cap + 1 instead of
/// overflowing).
std::size_t checked_power(std::int64_t p, std::size_t exponent, std::size_t cap) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (out > cap / static_cast<std::size_t>(p)) return cap + 1;
        out *= static_cast<std::size_t>(p);
    }
    return out;
}

ExtendingDatum build_datum(const LieAlgebra& g, std::size_t m,
                           const std::vector<std::int64_t>& la_digits,
                           const std::vector<std::int64_t>& rest_digits) {
    const std::size_t n = g.dim();
    const FieldSpec& f = g.field();
    Tensor3 la(m, n, m, f), ra(m, n, n, f), co(m, m, n, f), vb(m, m, m, f);
    for (std::size_t i = 0; i < la.size(); ++i) la.flat(i) = Scalar::from_int(la_digits[i], f);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < ra.size(); ++i) ra.flat(i) = Scalar::from_int(rest_digits[pos++], f);
    for (std::size_t i = 0; i < co.size(); ++i) co.flat(i) = Scalar::from_int(rest_digits[pos++], f);
    for (std::size_t i = 0; i < vb.size(); ++i) vb.flat(i) = Scalar::from_int(rest_digits[pos++], f);
    return ExtendingDatum(g, m, std::move(la), std::move(ra), std::move(co), std::move(vb));
}

struct Slice {
    Census census;
    std::vector<ExtendingDatum> valid;
};

/// Sweeps one laction-prefix slice: the full odometer over the remaining
/// slots (last slot fastest, so the slice is in ascending raw order).
Slice sweep_slice(const LieAlgebra& g, std::size_t m, const SearchShape& shape,
                  std::size_t la_index) {
    const std::int64_t p = g.field().modulus();

    std::vector<std::int64_t> la_digits(shape.la_slots, 0);
    std::size_t rem = la_index;
    for (std::size_t s = shape.la_slots; s-- > 0;) {
        la_digits[s] = static_cast<std::int64_t>(rem % static_cast<std::size_t>(p));
        rem /= static_cast<std::size_t>(p);
    }

    Slice slice;
    std::vector<std::int64_t> rest_digits(shape.rest_slots, 0);
    while (true) {
        ExtendingDatum datum = build_datum(g, m, la_digits, rest_digits);
        const bool structure_ok = check_extending_structure(datum).passed();
        const bool bracket_ok = check_lie(assemble_unified(datum)).passed();
        ++slice.census.raw_count;
        if (structure_ok != bracket_ok) ++slice.census.cross_check_failures;
        if (structure_ok) {
            ++slice.census.valid_count;
            slice.valid.push_back(std::move(datum));
        }

        std::size_t s = shape.rest_slots;
        while (s-- > 0) {
            if (++rest_digits[s] < p) break;
            rest_digits[s] = 0;
            if (s == 0) return slice;
        }
        if (shape.rest_slots == 0) return slice;
    }
}

std::vector<std::int64_t> datum_key(const ExtendingDatum& d) {
    std::vector<std::int64_t> key;
    key.reserve(d.laction().size() + d.raction().size() + d.cocycle().size() +
                d.vbracket().size());
    for (const Tensor3* t : {&d.laction(), &d.raction(), &d.cocycle(), &d.vbracket()}) {
        for (std::size_t i = 0; i < t->size(); ++i) key.push_back(t->flat(i).res());
    }
    return key;
}

LinearMap negated_product(const LinearMap& r, const LinearMap& vinv) {
    LinearMap out = r * vinv;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) = -out.at(i, j);
    }
    return out;
}

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

std::vector<LinearMap> invertible_matrices(std::size_t m, const FieldSpec& field) {
    if (!field.is_prime()) throw Error("matrix enumeration needs a prime field");
    const std::int64_t p = field.modulus();
    std::vector<LinearMap> out;
    std::vector<std::int64_t> digits(m * m, 0);
    while (true) {
        LinearMap candidate(m, m, field);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                candidate.at(r, c) = Scalar::from_int(digits[r * m + c], field);
            }
        }
        if (try_inverse(candidate).has_value()) out.push_back(std::move(candidate));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return out;
}

EnumerationResult enumerate_extending_structures(const SearchSpec& spec) {
    const LieAlgebra& g = spec.g;
    const FieldSpec& f = g.field();
    if (!f.is_prime()) throw Error("enumeration needs a prime field");
    if (spec.dimv == 0) throw Error("enumeration needs dim V >= 1");

    const SearchShape shape(g.dim(), spec.dimv);
    const std::int64_t p = f.modulus();
    const std::size_t raw = checked_power(p, shape.la_slots + shape.rest_slots, spec.cap);
    if (raw > spec.cap) throw Error("cap exceeded");

    const std::size_t la_count = checked_power(p, shape.la_slots, spec.cap);
    std::vector<Slice> slices;
    slices.reserve(la_count);

    const std::size_t threads =
        spec.threads > 1 ? (spec.threads < la_count ? spec.threads : la_count) : 1;
    if (threads <= 1) {
        for (std::size_t la = 0; la < la_count; ++la) {
            slices.push_back(sweep_slice(g, spec.dimv, shape, la));
        }
    } else {
        // Workers own disjoint slices; the merge below runs in slice order,
        // so the result is identical to the serial sweep.
        std::vector<std::vector<Slice>> per_thread(threads);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (std::size_t la = t; la < la_count; la += threads) {
                    per_thread[t].push_back(sweep_slice(g, spec.dimv, shape, la));
                }
            });
        }
        for (auto& worker : pool) worker.join();
        std::vector<std::size_t> cursor(threads, 0);
        for (std::size_t la = 0; la < la_count; ++la) {
            const std::size_t t = la % threads;
            slices.push_back(std::move(per_thread[t][cursor[t]++]));
        }
    }

    EnumerationResult result;
    for (Slice& slice : slices) {
        result.census.raw_count += slice.census.raw_count;
        result.census.valid_count += slice.census.valid_count;
        result.census.cross_check_failures += slice.census.cross_check_failures;
        for (ExtendingDatum& d : slice.valid) result.valid.push_back(std::move(d));
    }
    return result;
}

Census orbit_census(const SearchSpec& spec, Relation relation) {
    EnumerationResult res = enumerate_extending_structures(spec);
    Census census = res.census;

    std::map<std::vector<std::int64_t>, std::size_t> index;
    for (std::size_t i = 0; i < res.valid.size(); ++i) index[datum_key(res.valid[i])] = i;

    const FieldSpec& f = spec.g.field();
    const std::size_t n = spec.g.dim();
    const std::size_t m = spec.dimv;
    const std::int64_t p = f.modulus();

    std::vector<LinearMap> vs;
    if (relation == Relation::equiv) {
        vs = invertible_matrices(m, f);
    } else {
        vs.push_back(LinearMap::identity(m, f));
    }

    // All candidate r : V -> g.
    std::vector<LinearMap> rs;
    {
        std::vector<std::int64_t> digits(n * m, 0);
        while (true) {
            LinearMap r(n, m, f);
            for (std::size_t row = 0; row < n; ++row) {
                for (std::size_t col = 0; col < m; ++col) {
                    r.at(row, col) = Scalar::from_int(digits[row * m + col], f);
                }
            }
            rs.push_back(std::move(r));
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    }

    UnionFind uf(res.valid.size());
    for (std::size_t i = 0; i < res.valid.size(); ++i) {
        for (const LinearMap& v : vs) {
            const LinearMap vinv = inverse(v);
            for (const LinearMap& r : rs) {
                const ExtendingDatum image = transform_datum(res.valid[i], MorphismData{r, v});
                const auto hit = index.find(datum_key(image));
                if (hit == index.end()) {
                    // A witness must carry valid data to valid data.
                    ++census.cross_check_failures;
                    continue;
                }
                // The inverse witness must lead back before the edge counts.
                const ExtendingDatum back =
                    transform_datum(image, MorphismData{negated_product(r, vinv), vinv});
                if (back != res.valid[i]) {
                    ++census.cross_check_failures;
                    continue;
                }
                uf.unite(i, hit->second);
            }
        }
    }

    if (relation == Relation::equiv) {
        census.orbit_count_equiv = uf.component_count();
    } else {
        census.orbit_count_cohom = uf.component_count();
    }
    return census;
}

BijectionReport verify_unifdim1_bijection(const LieAlgebra& l, std::size_t cap) {
    EnumerationResult res = enumerate_extending_structures(SearchSpec{l, 1, cap, 1});

    BijectionReport report;
    report.datum_count = res.valid.size();

    std::map<std::vector<std::int64_t>, bool> seen;  // valid datum -> hit by a pair
    for (const ExtendingDatum& d : res.valid) seen[datum_key(d)] = false;

    const std::size_t n = l.dim();
    const FieldSpec& f = l.field();
    for (const Vec& lambda : span_points(lambda_space(l))) {
        for (const Vec& flat : span_points(dspace_for_lambda(l, lambda))) {
            ++report.pair_count;
            const ExtendingDatum image = codim1_datum(l, lambda, unflatten_endo(flat, n, f));
            const auto hit = seen.find(datum_key(image));
            if (hit == seen.end()) {
                ++report.unmatched_pairs;
            } else {
                hit->second = true;
            }
        }
    }
    for (const auto& [key, hit] : seen) {
        if (!hit) ++report.unmatched_data;
    }
    report.match = report.unmatched_data == 0 && report.unmatched_pairs == 0 &&
                   report.datum_count == report.pair_count;
    return report;
}

}  // namespace liext
