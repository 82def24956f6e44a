#ifndef ZETATAU_MATRIX_HPP
#define ZETATAU_MATRIX_HPP

#include <zetatau/polynomial.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zetatau {

/// Dense matrix over an exact coefficient ring (Int, IntPolynomial,
/// RationalFunction, TruncatedSeries...). Row-major.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::size_t rows, std::size_t cols)
        requires std::default_initializable<T>
        : Matrix(rows, cols, T()) {}

    static Matrix identity(std::size_t n)
        requires std::default_initializable<T>
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const T& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, data_.empty() ? T(0) : data_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        require_square();
        T acc(0);
        for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
        return acc;
    }

    /// n-th power by repeated squaring; the 0th power is the identity.
    Matrix pow(unsigned long n) const {
        require_square();
        Matrix acc = identity(rows_);
        Matrix base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return acc;
    }

    void require_square() const {
        if (!is_square()) throw std::invalid_argument("matrix must be square");
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using PolyMatrix = Matrix<IntPolynomial>;

/// Determinant by cofactor expansion along the first column. Exponential in
/// the size; intended for small matrices and for cross-checking the Bareiss
/// route. `zero` supplies the additive identity of T.
template <typename T>
T det_laplace(const Matrix<T>& m, const T& zero) {
    m.require_square();
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("cofactor determinant needs a nonempty matrix");

    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;

    // Expands along column `col` over the still-active rows.
    auto expand = [&](auto&& self, std::vector<std::size_t>& active, std::size_t col) -> T {
        if (active.size() == 1) return m(active[0], col);
        T acc = zero;
        for (std::size_t i = 0; i < active.size(); ++i) {
            const std::size_t row = active[i];
            std::vector<std::size_t> rest;
            rest.reserve(active.size() - 1);
            for (std::size_t j = 0; j < active.size(); ++j)
                if (j != i) rest.push_back(active[j]);
            T term = m(row, col) * self(self, rest, col + 1);
            if (i % 2 == 0) acc += term;
            else acc -= term;
        }
        return acc;
    };
    return expand(expand, rows, 0);
}

template <typename T>
T det_laplace(const Matrix<T>& m)
    requires std::default_initializable<T>
{
    return det_laplace(m, T(0));
}

/// Fraction-free Bareiss determinant over Z[t]: every intermediate entry is
/// an integer polynomial (a minor of the input), every division exact.
/// The empty matrix has determinant 1.
inline IntPolynomial det_bareiss(PolyMatrix m) {
    m.require_square();
    const std::size_t n = m.rows();
    if (n == 0) return IntPolynomial(1);

    bool negate = false;
    IntPolynomial prev_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return {};  // zero column of minors
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = poly_divexact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev_pivot);
        prev_pivot = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

struct DetAdjugate {
    IntPolynomial det;
    PolyMatrix adj;
};

/// Determinant and adjugate together, each cofactor minor evaluated with the
/// fraction-free elimination. Verifies M * adj(M) = det(M) * I before
/// returning.
inline DetAdjugate det_and_adjugate(const PolyMatrix& m) {
    m.require_square();
    const std::size_t n = m.rows();
    if (n == 0) return {IntPolynomial(1), PolyMatrix(0, 0)};

    PolyMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            IntPolynomial cof = det_bareiss(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }

    IntPolynomial det;
    for (std::size_t j = 0; j < n; ++j) det = det + m(0, j) * adj(j, 0);

    PolyMatrix prod = m * adj;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (prod(i, j) != (i == j ? det : IntPolynomial()))
                throw std::logic_error("adjugate self-check failed: M*adj(M) != det(M)*I");
    return {std::move(det), std::move(adj)};
}

inline PolyMatrix adjugate(const PolyMatrix& m) { return det_and_adjugate(m).adj; }

}  // namespace zetatau

#endif
