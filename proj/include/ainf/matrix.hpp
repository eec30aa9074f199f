#pragma once

#include <optional>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

using Vec = std::vector<Scalar>;

/* Dense row-major matrix over a single field. Desk-scale dimensions;
 * all arithmetic exact, all pivot choices deterministic. */
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const Field& f);
    static Matrix identity(size_t n, const Field& f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const;
    bool operator==(const Matrix& o) const;

    void set_row(size_t r, const Vec& v);
    Vec row(size_t r) const;
    Vec col(size_t c) const;

private:
    size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix echelon;
    std::vector<size_t> pivots;  // pivot column per echelon row, top to bottom
    Matrix transform;            // invertible, transform * input == echelon
};

/* Reduced row-echelon form with deterministic pivoting: leftmost nonzero
 * column, topmost unused row. */
RrefResult rref(const Matrix& m);

/* Canonical kernel basis: one vector per free column in increasing column
 * order, free variable set to 1, pivot variables back-substituted. */
std::vector<Vec> kernel_basis(const Matrix& m);

/* Canonical particular solution of m x = b (all free variables zero), or
 * nullopt when the system is inconsistent. */
std::optional<Vec> solve_particular(const Matrix& m, const Vec& b);

Vec vec_zero(size_t n, const Field& f);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);
bool vec_is_zero(const Vec& v);

}  // namespace ainf
