#include "liext/matrix.hpp"

namespace liext {

namespace {

void require_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
}

}  // namespace

Vec zero_vec(std::size_t n, const FieldSpec& field) {
    return Vec(n, Scalar::zero(field));
}

Vec unit_vec(std::size_t n, std::size_t i, const FieldSpec& field) {
    Vec v(n, Scalar::zero(field));
    v.at(i) = Scalar::one(field);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

Vec axpy(const Vec& a, const Scalar& c, const Vec& b) {
    require_same_size(a, b);
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += c * b[i];
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field),
      entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows,
                         const FieldSpec& field) {
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_cols(std::size_t rows, const std::vector<Vec>& cols,
                         const FieldSpec& field) {
    Matrix m(rows, cols.size(), field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw Error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
    return entries_[r * cols_ + c];
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
    return entries_[r * cols_ + c];
}

Vec Matrix::row(std::size_t r) const {
    Vec out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Vec Matrix::col(std::size_t c) const {
    Vec out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error("matrix-vector size mismatch");
    Vec out = zero_vec(rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    if (field_ != rhs.field_) throw Error("matrix field mismatch");
    Matrix out(rows_, rhs.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& lhs_rk = at(r, k);
            if (lhs_rk.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += lhs_rk * rhs.at(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != rhs.entries_[i]) return false;
    }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}, 0};
    Matrix& a = out.mat;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        // First nonzero entry at or below the current pivot row.
        std::size_t found = a.rows();
        for (std::size_t r = pivot_row; r < a.rows(); ++r) {
            if (!a.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == a.rows()) continue;
        if (found != pivot_row) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a.at(found, c), a.at(pivot_row, c));
            }
        }
        const Scalar inv = a.at(pivot_row, col).invert();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col).is_zero()) continue;
            const Scalar factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                a.at(r, c) -= factor * a.at(pivot_row, c);
            }
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> try_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Scalar::one(m.field());
    }
    const auto red = rref(aug);
    if (red.rank < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix out(n, n, m.field());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.mat.at(r, n + c);
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    auto inv = try_inverse(m);
    if (!inv) throw Error("not invertible");
    return *inv;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, const FieldSpec& field)
    : ambient_dim_(ambient_dim), field_(field) {}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<Vec>& vectors,
                                  const FieldSpec& field) {
    const auto red = rref(Matrix::from_rows(ambient_dim, vectors, field));
    SubspaceBasis out(ambient_dim, field);
    for (std::size_t r = 0; r < red.rank; ++r) out.vectors_.push_back(red.mat.row(r));
    return out;
}

Vec SubspaceBasis::reduce(const Vec& v) const {
    if (v.size() != ambient_dim_) throw Error("vector/ambient dimension mismatch");
    Vec rem = v;
    for (const auto& basis_vec : vectors_) {
        // Canonical vectors lead with 1 at their pivot position.
        std::size_t pivot = 0;
        while (pivot < ambient_dim_ && basis_vec[pivot].is_zero()) ++pivot;
        if (pivot == ambient_dim_ || rem[pivot].is_zero()) continue;
        rem = axpy(rem, -rem[pivot], basis_vec);
    }
    return rem;
}

bool SubspaceBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool SubspaceBasis::contains_all(const SubspaceBasis& other) const {
    for (const auto& v : other.vectors_) {
        if (!contains(v)) return false;
    }
    return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& rhs) const {
    if (ambient_dim_ != rhs.ambient_dim_ || field_ != rhs.field_) return false;
    if (vectors_.size() != rhs.vectors_.size()) return false;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        for (std::size_t j = 0; j < ambient_dim_; ++j) {
            if (vectors_[i][j] != rhs.vectors_[i][j]) return false;
        }
    }
    return true;
}

SubspaceBasis nullspace(const Matrix& m) {
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> generators;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = zero_vec(m.cols(), m.field());
        v[free_col] = Scalar::one(m.field());
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
            v[red.pivot_cols[i]] = -red.mat.at(i, free_col);
        }
        generators.push_back(std::move(v));
    }
    // Re-echelonize so the stored basis is canonical.
    return SubspaceBasis::span(m.cols(), generators, m.field());
}

AffineSolution solve_affine(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw Error("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const auto red = rref(aug);
    const bool pivot_in_rhs =
        !red.pivot_cols.empty() && red.pivot_cols.back() == a.cols();
    auto kernel = nullspace(a);
    if (pivot_in_rhs) {
        return AffineSolution(false, Vec{}, std::move(kernel));
    }
    Vec particular = zero_vec(a.cols(), a.field());
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
        particular[red.pivot_cols[i]] = red.mat.at(i, a.cols());
    }
    return AffineSolution(true, std::move(particular), std::move(kernel));
}

std::vector<Vec> span_points(const SubspaceBasis& basis) {
    if (!basis.field().is_prime()) throw Error("span enumeration needs a prime field");
    const FieldSpec& f = basis.field();
    const std::int64_t p = f.modulus();

    double size = 1.0;
    for (std::size_t a = 0; a < basis.dim(); ++a) size *= static_cast<double>(p);
    if (size > static_cast<double>(std::size_t{1} << 26)) {
        throw Error("span enumeration too large");
    }

    std::vector<std::int64_t> digits(basis.dim(), 0);
    std::vector<Vec> out;
    while (true) {
        Vec v = zero_vec(basis.ambient_dim(), f);
        for (std::size_t a = 0; a < digits.size(); ++a) {
            v = axpy(v, Scalar::from_int(digits[a], f), basis.vectors()[a]);
        }
        out.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return out;
}

}  // namespace liext
