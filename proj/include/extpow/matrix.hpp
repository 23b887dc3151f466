#pragma once

#include "extpow/ring.hpp"

#include <cstddef>
#include <vector>

namespace extpow {

/// Dense matrix with exact entries over a fixed ring. All maps between based
/// free modules are matrices acting on column vectors; a map of modules of
/// ranks c -> r is an r x c matrix. Values are immutable in spirit: every
/// operation returns a fresh matrix.
class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static Matrix identity(Ring ring, std::size_t n);
    static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, const Rat& v) { e_[i * cols_ + j] = ring_.normalize(v); }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Rat& c) const;

    Matrix transpose() const;

    /// Columns [c0, c1) as a new matrix.
    Matrix col_slice(std::size_t c0, std::size_t c1) const;

    /// Horizontal / vertical concatenation.
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);

    /// Block-diagonal sum.
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    /// Copies src into this at offset (i0, j0). Mutating helper for builders.
    void paste(std::size_t i0, std::size_t j0, const Matrix& src);

    /// Kronecker product with row-major pair indexing: entry at
    /// ((i,k),(j,l)) is a(i,j)*b(k,l).
    static Matrix kronecker(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Determinant of the k x k submatrix of a given by rows `ri` and columns
/// `ci` (index lists of equal length).
Rat submatrix_det(const Matrix& a, const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci);

/// k-th exterior power of a linear map: rows and columns indexed by
/// k-element subsets in lexicographic order, entry (S,T) the corresponding
/// k x k minor. Functorial: ext(AB) = ext(A) ext(B).
Matrix exterior_power_matrix(const Matrix& a, std::size_t k);

/// Bilinear wedge multiplication Lambda^a(R^d) x Lambda^b(R^d) ->
/// Lambda^{a+b}(R^d) as a matrix on the Kronecker basis, with shuffle signs.
Matrix wedge_product_matrix(Ring ring, std::size_t d, std::size_t a, std::size_t b);

/// All k-subsets of {0..n-1} in lexicographic order.
const std::vector<std::vector<std::size_t>>& subsets_lex(std::size_t n, std::size_t k);

Int binomial(const Int& n, std::size_t k);

} // namespace extpow
