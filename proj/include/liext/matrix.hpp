#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liext/scalar.hpp"

namespace liext {

/// Coordinate vector over one field. All helpers below require every entry
/// to share a field and throw on mismatch.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& field);
Vec unit_vec(std::size_t n, std::size_t i, const FieldSpec& field);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a + c * b
Vec axpy(const Vec& a, const Scalar& c, const Vec& b);

/// Dense matrix with row-major exact entries over one field.
class Matrix {
public:
    /// Zero matrix of the given shape.
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    static Matrix identity(std::size_t n, const FieldSpec& field);

    /// Stacks the given row vectors; they must all have length cols.
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows,
                            const FieldSpec& field);

    /// Joins the given column vectors; they must all have length rows.
    static Matrix from_cols(std::size_t rows, const std::vector<Vec>& cols,
                            const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    Scalar& at(std::size_t r, std::size_t c);

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    /// Matrix-vector product M v; v.size() must equal cols().
    Vec apply(const Vec& v) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix transpose() const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    FieldSpec field_;
    std::vector<Scalar> entries_;  // row-major
};

/// Reduced row echelon form together with its pivot columns.
struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form. Pivoting always picks the first nonzero
/// entry scanning down the current column, so the computation (not only the
/// result) is deterministic.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> try_inverse(const Matrix& m);

/// Inverse of a square matrix. Throws "not invertible" when singular.
Matrix inverse(const Matrix& m);

/// A linear subspace held by its unique canonical basis: the nonzero rows of
/// a reduced row echelon form. Equality of subspaces is therefore entrywise
/// equality of the stored vectors.
class SubspaceBasis {
public:
    /// The zero subspace of the given ambient dimension.
    SubspaceBasis(std::size_t ambient_dim, const FieldSpec& field);

    /// Canonical basis of the span of the given vectors.
    static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vec>& vectors,
                              const FieldSpec& field);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return vectors_.size(); }
    const std::vector<Vec>& vectors() const { return vectors_; }
    const FieldSpec& field() const { return field_; }

    bool contains(const Vec& v) const;
    bool contains_all(const SubspaceBasis& other) const;

    /// Remainder of v after eliminating along the basis; zero iff contained.
    Vec reduce(const Vec& v) const;

    bool operator==(const SubspaceBasis& rhs) const;
    bool operator!=(const SubspaceBasis& rhs) const { return !(*this == rhs); }

private:
    std::size_t ambient_dim_;
    FieldSpec field_;
    std::vector<Vec> vectors_;
};

/// Kernel {v : Mv = 0} as a canonical basis of dimension cols - rank.
SubspaceBasis nullspace(const Matrix& m);

/// Every vector of the span over a prime field — p^dim points, ordered by
/// odometer over the coefficient tuple (first basis coefficient fastest).
/// Throws Error over the rationals or when the span has more than 2^26
/// points.
std::vector<Vec> span_points(const SubspaceBasis& basis);

/// Solution set of A x = b.
struct AffineSolution {
    bool feasible = false;
    Vec particular;            // one solution, empty when infeasible
    SubspaceBasis homogeneous; // kernel of A

    AffineSolution(bool f, Vec p, SubspaceBasis h)
        : feasible(f), particular(std::move(p)), homogeneous(std::move(h)) {}
};

/// Decides A x = b exactly: feasible iff rank(A) = rank([A|b]).
AffineSolution solve_affine(const Matrix& a, const Vec& b);

}  // namespace liext
