#include "ainf/matrix.hpp"

namespace ainf {

Matrix::Matrix(size_t rows, size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::identity(size_t n, const Field& f)
{
    Matrix m(n, n, f);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw validation_error("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw validation_error("matrix-vector dimension mismatch");
    Vec out(rows_, Scalar::zero(field_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero())
                out[i] = out[i] + at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i])
            return false;
    return true;
}

void Matrix::set_row(size_t r, const Vec& v)
{
    for (size_t j = 0; j < cols_; ++j)
        at(r, j) = v[j];
}

Vec Matrix::row(size_t r) const
{
    Vec v;
    v.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j)
        v.push_back(at(r, j));
    return v;
}

Vec Matrix::col(size_t c) const
{
    Vec v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i)
        v.push_back(at(i, c));
    return v;
}

RrefResult rref(const Matrix& m)
{
    Matrix e = m;
    Matrix t = Matrix::identity(m.rows(), m.field());
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && e.at(pr, col).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row) {
            for (size_t j = 0; j < e.cols(); ++j)
                std::swap(e.at(row, j), e.at(pr, j));
            for (size_t j = 0; j < t.cols(); ++j)
                std::swap(t.at(row, j), t.at(pr, j));
        }
        Scalar inv = e.at(row, col).inverse();
        for (size_t j = 0; j < e.cols(); ++j)
            e.at(row, j) = e.at(row, j) * inv;
        for (size_t j = 0; j < t.cols(); ++j)
            t.at(row, j) = t.at(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || e.at(i, col).is_zero())
                continue;
            Scalar f = e.at(i, col);
            for (size_t j = 0; j < e.cols(); ++j)
                e.at(i, j) = e.at(i, j) - f * e.at(row, j);
            for (size_t j = 0; j < t.cols(); ++j)
                t.at(i, j) = t.at(i, j) - f * t.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(e), std::move(pivots), std::move(t)};
}

std::vector<Vec> kernel_basis(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v = vec_zero(m.cols(), m.field());
        v[free] = Scalar::one(m.field());
        for (size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.echelon.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_particular(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw validation_error("solve_particular: right-hand side has wrong length");
    RrefResult r = rref(m);
    Vec y = r.transform.apply(b);
    for (size_t i = r.pivots.size(); i < m.rows(); ++i)
        if (!y[i].is_zero())
            return std::nullopt;
    Vec x = vec_zero(m.cols(), m.field());
    for (size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = y[i];
    return x;
}

Vec vec_zero(size_t n, const Field& f)
{
    return Vec(n, Scalar::zero(f));
}

Vec vec_add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw validation_error("vector sum dimension mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = r[i] + b[i];
    return r;
}

Vec vec_scale(const Scalar& s, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x = s * x;
    return r;
}

bool vec_is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

}  // namespace ainf
