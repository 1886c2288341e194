#pragma once

#include <cstddef>
#include <vector>

#include "liext/matrix.hpp"

namespace liext {

/// Dense rank-3 array of exact scalars, indexed [i][j][k] with shape
/// (d0, d1, d2). Used for structure constants and bilinear-map tables.
class Tensor3 {
public:
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, const FieldSpec& field)
        : d0_(d0), d1_(d1), d2_(d2), field_(field),
          entries_(d0 * d1 * d2, Scalar::zero(field)) {}

    std::size_t d0() const { return d0_; }
    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return entries_.size(); }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[index(i, j, k)];
    }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return entries_[index(i, j, k)];
    }

    /// Flat access in row-major (i, j, k) order; used by exhaustive scans.
    const Scalar& flat(std::size_t idx) const { return entries_[idx]; }
    Scalar& flat(std::size_t idx) { return entries_[idx]; }

    /// The fiber value[i][j][.] as a coordinate vector of length d2.
    Vec fiber(std::size_t i, std::size_t j) const {
        Vec out;
        out.reserve(d2_);
        for (std::size_t k = 0; k < d2_; ++k) out.push_back(at(i, j, k));
        return out;
    }

    void set_fiber(std::size_t i, std::size_t j, const Vec& value) {
        if (value.size() != d2_) throw Error("fiber length mismatch");
        for (std::size_t k = 0; k < d2_; ++k) at(i, j, k) = value[k];
    }

    bool is_zero() const {
        for (const auto& x : entries_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    bool operator==(const Tensor3& rhs) const {
        if (d0_ != rhs.d0_ || d1_ != rhs.d1_ || d2_ != rhs.d2_ || field_ != rhs.field_) {
            return false;
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] != rhs.entries_[i]) return false;
        }
        return true;
    }
    bool operator!=(const Tensor3& rhs) const { return !(*this == rhs); }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= d0_ || j >= d1_ || k >= d2_) throw Error("tensor index out of range");
        return (i * d1_ + j) * d2_ + k;
    }

    std::size_t d0_, d1_, d2_;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

}  // namespace liext
