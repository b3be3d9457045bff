#include "weylpi/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "weylpi/errors.hpp"

namespace weylpi {

Matrix::Matrix(std::size_t rows, std::size_t cols, Char c)
    : cols_(cols), char_(c), data_(rows, Vector(cols, Scalar(c)))
{}

Matrix Matrix::from_integers(const std::vector<std::vector<long>>& entries, Char c)
{
    Matrix m(0, entries.empty() ? 0 : entries.front().size(), c);
    for (const auto& r : entries) {
        Vector row;
        for (long v : r)
            row.push_back(Scalar::from_integer(v, c));
        m.append_row(std::move(row));
    }
    return m;
}

void Matrix::append_row(Vector row)
{
    if (row.size() != cols_)
        throw ArityMismatch("row of length " + std::to_string(row.size()) + " for " +
                            std::to_string(cols_) + " columns");
    for (const auto& s : row)
        if (s.characteristic() != char_)
            throw CharMismatch();
    data_.push_back(std::move(row));
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw ArityMismatch("vector length does not match column count");
    Vector out(rows(), Scalar(char_));
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += data_[r][c] * v[c];
    return out;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

IntRows clear_denominators(const Matrix& m)
{
    IntRows a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class den = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            den = lcm(den, m(r, c).rational().get_den());
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = mpz_class(m(r, c).rational() * den);
    }
    return a;
}

// Fraction-free forward elimination. Returns pivot columns; rows beyond the
// rank end up zero. `swaps` counts row interchanges.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t cols, std::size_t& swaps)
{
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    swaps = 0;
    for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
        std::size_t p = r;
        while (p < a.size() && sgn(a[p][col]) == 0)
            ++p;
        if (p == a.size())
            continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++swaps;
        }
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("inexact Bareiss division");
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

Echelon reduce_rational(const Matrix& m)
{
    IntRows a = clear_denominators(m);
    std::size_t swaps = 0;
    std::vector<std::size_t> pivots = bareiss(a, m.cols(), swaps);
    const Char c = m.characteristic();
    std::vector<std::vector<mpq_class>> q(pivots.size(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        mpq_class lead(a[r][pivots[r]]);
        for (std::size_t j = 0; j < m.cols(); ++j)
            q[r][j] = mpq_class(a[r][j]) / lead;
    }
    for (std::size_t r = pivots.size(); r-- > 0;)
        for (std::size_t i = 0; i < r; ++i) {
            mpq_class f = q[i][pivots[r]];
            if (sgn(f) == 0)
                continue;
            for (std::size_t j = pivots[r]; j < m.cols(); ++j)
                q[i][j] -= f * q[r][j];
        }
    Echelon e;
    e.pivots = std::move(pivots);
    for (auto& row : q) {
        Vector v;
        for (auto& x : row)
            v.push_back(Scalar::from_rational(x, c));
        e.rows.push_back(std::move(v));
    }
    return e;
}

Echelon reduce_modular(const Matrix& m)
{
    std::vector<Vector> a;
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.push_back(m.row(r));
    Echelon e;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < a.size(); ++col) {
        std::size_t p = r;
        while (p < a.size() && a[p][col].is_zero())
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        Scalar inv = a[r][col].inverse();
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col].is_zero())
                continue;
            Scalar f = a[i][col];
            for (std::size_t j = col; j < m.cols(); ++j)
                a[i][j] -= f * a[r][j];
        }
        e.pivots.push_back(col);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

} // namespace

Echelon row_reduce(const Matrix& m)
{
    return m.characteristic().is_zero() ? reduce_rational(m) : reduce_modular(m);
}

std::vector<Vector> nullspace(const Matrix& m)
{
    const Char c = m.characteristic();
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols(), Scalar(c));
        v[f] = Scalar::one(c);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& m)
{
    return row_reduce(m).pivots.size();
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw ArityMismatch("determinant of a non-square matrix");
    const Char c = m.characteristic();
    const std::size_t n = m.rows();
    if (n == 0)
        return Scalar::one(c);
    if (c.is_zero()) {
        IntRows a = clear_denominators(m);
        mpq_class scale = 1;
        for (std::size_t r = 0; r < n; ++r) {
            mpz_class den = 1;
            for (std::size_t j = 0; j < n; ++j)
                den = lcm(den, m(r, j).rational().get_den());
            scale *= den;
        }
        std::size_t swaps = 0;
        if (bareiss(a, n, swaps).size() < n)
            return Scalar(c);
        mpq_class det(a[n - 1][n - 1]);
        if (swaps % 2)
            det = -det;
        return Scalar::from_rational(det / scale, c);
    }
    std::vector<Vector> a;
    for (std::size_t r = 0; r < n; ++r)
        a.push_back(m.row(r));
    Scalar det = Scalar::one(c);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col].is_zero())
            ++p;
        if (p == n)
            return Scalar(c);
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Scalar inv = a[col][col].inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            Scalar f = a[i][col] * inv;
            if (f.is_zero())
                continue;
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace weylpi
