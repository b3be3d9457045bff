#pragma once

#include <cstddef>
#include <vector>

#include "weylpi/scalar.hpp"

namespace weylpi {

using Vector = std::vector<Scalar>;

/// Dense matrix over Q or F_p.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Char c);
    static Matrix from_integers(const std::vector<std::vector<long>>& entries, Char c);

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    Char characteristic() const { return char_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r][c]; }
    const Vector& row(std::size_t r) const { return data_[r]; }

    /// Throws CharMismatch or ArityMismatch on a bad row.
    void append_row(Vector row);

    Vector apply(const Vector& v) const;

private:
    std::size_t cols_;
    Char char_;
    std::vector<Vector> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

/// Row reduction with the first nonzero entry of each column as pivot. Over Q
/// the forward pass is fraction-free (Bareiss) on the denominator-cleared
/// matrix; the result is then normalized to rational RREF. Over F_p plain
/// Gauss-Jordan.
Echelon row_reduce(const Matrix& m);

/// Basis of {v : Mv = 0}: one vector per free column, with a 1 there and 0 in
/// the other free columns.
std::vector<Vector> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Determinant of a square matrix (Bareiss over Q, elimination over F_p).
Scalar determinant(const Matrix& m);

} // namespace weylpi
