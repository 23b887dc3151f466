#pragma once

#include "extpow/matrix.hpp"

#include <optional>
#include <vector>

namespace extpow {

/// Column echelon decomposition A * U = E with U invertible over the ring
/// (unimodular over Z). E has its nonzero columns first; pivot rows strictly
/// increase and every pivot has only zeros above it and to its right.
struct ColumnEchelon {
    Matrix echelon;      // E
    Matrix transform;    // U
    std::vector<std::size_t> pivot_rows; // one per nonzero column
    std::size_t rank() const { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const Matrix& a);

/// Canonical basis of the column span of `a`: over Z the Hermite basis of the
/// column lattice (pivots positive, entries left of a pivot reduced mod it),
/// over a field the reduced column echelon basis. Two inputs generate the
/// same lattice/subspace iff their canonical bases are equal.
Matrix image_basis(const Matrix& a);

/// Canonical basis of ker(a) = {x : a x = 0}. Over Z this lattice is
/// saturated (the quotient by it is torsion-free).
Matrix kernel_basis(const Matrix& a);

std::size_t rank(const Matrix& a);

/// One exact solution X of A X = B, or nullopt if none exists over the ring
/// (over Z: no integral solution).
std::optional<Matrix> solve_exact(const Matrix& a, const Matrix& b);

Matrix solve_or_throw(const Matrix& a, const Matrix& b);

Rat det(const Matrix& a);

/// Inverse of a square matrix that is invertible over the ring.
Matrix inverse(const Matrix& a);

/// left * A * right = diag(d1..dr, 0..) with d1 | d2 | ... and both
/// transforms invertible over the ring. Over a field every invariant factor
/// is 1.
struct SmithForm {
    Matrix left;
    Matrix right;
    std::vector<Rat> diag; // nonzero invariant factors only
};

SmithForm smith_normal_form(const Matrix& a);

/// Invariant-factor presentation of coker(a) as a map into R^rows: free rank
/// plus the nontrivial torsion coefficients (empty over a field).
struct AbelianPresentation {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianPresentation& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

AbelianPresentation cokernel_presentation(const Matrix& relations, std::size_t ambient_rank);

/// True if a is injective with free cokernel (an admissible monomorphism of
/// based free modules): full column rank and all invariant factors units.
bool is_admissible_mono(const Matrix& a);

/// For an admissible mono a: R^r -> R^n, a projection q: R^n -> R^{n-r} with
/// q a = 0 together with a section s: R^{n-r} -> R^n, q s = id.
struct CokernelSplitting {
    Matrix projection;
    Matrix section;
};

CokernelSplitting cokernel_splitting(const Matrix& a);

} // namespace extpow
