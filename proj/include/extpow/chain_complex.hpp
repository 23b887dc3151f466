#pragma once

#include "extpow/linalg.hpp"

#include <vector>

namespace extpow {

/// Euler-characteristic class in K_0 of free modules over the ring, which is
/// just a rank integer here.
struct K0Class {
    Ring ring;
    Int value;
    bool operator==(const K0Class& o) const { return ring == o.ring && value == o.value; }
};

/// Bounded chain complex of based free modules supported in non-negative
/// degrees. d(i) maps degree i to degree i-1; d o d = 0 is enforced at
/// construction.
class ChainComplex {
public:
    ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> differentials);

    static ChainComplex zero(Ring ring) { return ChainComplex(ring, {0}, {}); }

    /// Complex with a single module of the given rank in degree `deg`.
    static ChainComplex concentrated(Ring ring, std::size_t rank, std::size_t deg);

    /// Two-term complex d: R^c -> R^r in degrees 1, 0.
    static ChainComplex two_term(const Matrix& d);

    const Ring& ring() const { return ring_; }
    std::size_t top() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    std::size_t total_rank() const;

    /// Differential leaving degree n (zero-sized beyond the support).
    Matrix d(std::size_t n) const;

    bool operator==(const ChainComplex& o) const;
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

private:
    Ring ring_;
    std::vector<std::size_t> ranks_;
    std::vector<Matrix> d_; // d_[i-1] is the differential of degree i
};

/// Degreewise map of complexes commuting with the differentials.
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components);

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(ChainComplex source, ChainComplex target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    Matrix component(std::size_t n) const;

    ChainMap compose_after(const ChainMap& first) const; // this o first

private:
    ChainComplex source_, target_;
    std::vector<Matrix> f_;
};

/// H_n as free rank plus invariant-factor torsion. Degree must lie in
/// [0, top].
AbelianPresentation homology(const ChainComplex& c, std::size_t n);

bool is_acyclic(const ChainComplex& c);

/// True iff the mapping cone of f is acyclic in every degree.
bool is_quasi_iso(const ChainMap& f);

/// cone(f)_n = target_n + source_{n-1} with differential [[d', f],[0, -d]].
ChainComplex cone(const ChainMap& f);
ChainComplex cone_of_identity(const ChainComplex& c);

/// Degree n of the result is degree n-1 of the input; differentials negated.
ChainComplex shift_left(const ChainComplex& c);

K0Class euler_characteristic(const ChainComplex& c);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Inclusion / projection maps for the degreewise direct sum.
ChainMap direct_sum_inclusion_left(const ChainComplex& a, const ChainComplex& b);

/// Total complex of the ordinary tensor product, with the sign convention
/// d(x (x) y) = dx (x) y + (-1)^i x (x) dy; summands (i, j) of a given total
/// degree are ordered by increasing i.
ChainComplex tensor_total(const ChainComplex& a, const ChainComplex& b);

/// Quotient W/V of an admissible mono of complexes (degreewise injective
/// with free cokernel) together with the projection map.
struct ComplexQuotient {
    ChainComplex quotient;
    ChainMap projection;
};

ComplexQuotient quotient_complex(const ChainMap& inclusion);

/// Degreewise admissibility test for a map of complexes.
bool is_admissible_mono_of_complexes(const ChainMap& f);

} // namespace extpow
