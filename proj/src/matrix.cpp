#include "cla/matrix.hpp"

#include "cla/subspace.hpp"

namespace cla {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionError("row " + std::to_string(r) + " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(rows[r][c].field() == f))
                throw FieldError("matrix entry from a different field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(f, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw DimensionError("ragged integer matrix");
        std::size_t c = 0;
        for (long v : row)
            m(r, c++) = Scalar(f, v);
        ++r;
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const
{
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row_vector(r));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::stacked(const Matrix& below) const
{
    if (rows_ == 0 && cols_ == 0)
        return below;
    if (below.cols_ != cols_)
        throw DimensionError("stacking matrices with different column counts");
    Matrix m(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<long>(data_.size()));
    return m;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw DimensionError("matrix-vector length mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    m(i, j) += x * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& m)
{
    Matrix r = m;
    for (auto& x : r.data_)
        x *= c;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m)
{
    RrefResult out{m, 0, {}};
    Matrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(pivot, c), a(row, c));
        Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero())
                continue;
            Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero())
                    a(r, c) -= factor * a(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rank;
}

Subspace kernel(const Matrix& m)
{
    const Field& f = m.field();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = zero_vector(f, m.cols());
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), basis);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b)
{
    if (b.size() != a.rows())
        throw DimensionError("right-hand side length mismatch");
    const Field& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == a.cols())
        return std::nullopt;
    Vector x = zero_vector(f, a.cols());
    for (std::size_t i = 0; i < red.rank; ++i)
        x[red.pivots[i]] = red.reduced(i, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(f);
    }
    RrefResult red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = red.reduced(r, n + c);
    return inv;
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("determinant of a non-square matrix");
    Matrix a = m;
    const Field& f = m.field();
    std::size_t n = a.rows();
    Scalar det = Scalar::one(f);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar::zero(f);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            Scalar factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= factor * a(col, c);
        }
    }
    return det;
}

} // namespace cla
