#pragma once

#include "extpow/chain_complex.hpp"

#include <vector>

namespace extpow {

/// Finitely many levels of a simplicial module over the ring, with all
/// faces d_i^n : A_n -> A_{n-1} and degeneracies s_j^n : A_n -> A_{n+1}
/// given as matrices. Face data exists for levels 1..bound, degeneracy data
/// for levels 0..bound-1 (maps out of the top level would leave the window).
class SimplicialModule {
public:
    static SimplicialModule make(Ring ring, std::vector<std::size_t> levels,
                                 std::vector<std::vector<Matrix>> faces,
                                 std::vector<std::vector<Matrix>> degeneracies, bool verify);

    const Ring& ring() const { return ring_; }
    std::size_t bound() const { return levels_.size() - 1; }
    std::size_t level_rank(std::size_t n) const { return levels_[n]; }
    const std::vector<std::size_t>& levels() const { return levels_; }

    const Matrix& face(std::size_t n, std::size_t i) const { return faces_[n][i]; }
    const Matrix& degeneracy(std::size_t n, std::size_t j) const { return degens_[n][j]; }
    bool has_degeneracies() const { return !degens_.empty(); }

    /// Checks every simplicial identity expressible within the level window;
    /// throws ConsistencyError on failure.
    void verify_identities() const;

private:
    SimplicialModule(Ring ring, std::vector<std::size_t> levels, std::vector<std::vector<Matrix>> faces,
                     std::vector<std::vector<Matrix>> degens)
        : ring_(ring), levels_(std::move(levels)), faces_(std::move(faces)), degens_(std::move(degens)) {}

    Ring ring_;
    std::vector<std::size_t> levels_;
    std::vector<std::vector<Matrix>> faces_;
    std::vector<std::vector<Matrix>> degens_;
};

/// Dold-Kan functor Gamma: levels 0..bound of the simplicial module
/// associated to a complex. Level n is the direct sum of one copy of C_m per
/// monotone surjection [n] ->> [m], ordered with the identity summand first
/// (m descending, then jump-set lex). Requires bound >= top(C).
SimplicialModule gamma(const ChainComplex& c, std::size_t bound, bool verify = false);

/// Levelwise components of Gamma applied to a chain map (block diagonal over
/// the surjection summands).
std::vector<Matrix> gamma_map_components(const ChainMap& f, std::size_t bound);

/// Applies the k-th exterior power to every structure map.
SimplicialModule levelwise_exterior(const SimplicialModule& a, std::size_t k, bool with_degeneracies);

/// Levelwise tensor product (the diagonal of the bisimplicial product).
SimplicialModule diagonal_tensor(const SimplicialModule& a, const SimplicialModule& b);

/// Normalized chain complex N(A)_n = intersection of ker d_i, i = 1..n, with
/// differential induced by d_0. `inclusions[n]` is the canonical basis of
/// N(A)_n inside A_n.
struct NormalizedComplex {
    ChainComplex complex;
    std::vector<Matrix> inclusions;
};

NormalizedComplex normalize_with_inclusions(const SimplicialModule& a, std::size_t out_top);

ChainComplex normalize(const SimplicialModule& a);

/// Restriction of a simplicial module to compatible sub-bases (one basis
/// matrix per level whose lattice/span is preserved by all structure maps).
SimplicialModule restrict_to_subbases(const SimplicialModule& a, const std::vector<Matrix>& bases);

/// Dold-Puppe power N(Lambda^k Gamma C). The result is supported in
/// [0, k*top(C)]; the `slack` extra levels are computed and checked to be
/// zero, a violation raises ConsistencyError.
ChainComplex dold_puppe_power(const ChainComplex& c, std::size_t k, std::size_t slack = 2);

/// Power computation together with the per-degree inclusion of the result
/// into the ambient module Lambda^k(Gamma(last)_n), needed to compare
/// different powers over the same ambient complex.
struct WedgePowerData {
    ChainComplex complex;
    std::vector<Matrix> ambient_inclusions;
};

WedgePowerData dold_puppe_power_data(const ChainComplex& c, std::size_t k, std::size_t slack = 2);

WedgePowerData wedge_of_sequence_data(const ChainComplex& first, const std::vector<ChainMap>& inclusions,
                                      std::size_t slack = 2);

ChainMap dold_puppe_power_map(const ChainMap& f, std::size_t k, std::size_t slack = 2);

/// N(Gamma a (x) Gamma b) on the diagonal; quasi-isomorphic to
/// tensor_total(a, b).
ChainComplex simplicial_tensor(const ChainComplex& a, const ChainComplex& b, std::size_t slack = 2);

/// Wedge V_1 ^ ... ^ V_k of a chain of admissible monos of complexes
/// (inclusions[i] : V_{i+1} -> V_{i+2}), computed as N of the levelwise
/// image of Gamma V_1 (x) ... (x) Gamma V_k inside Lambda^k Gamma V_k.
ChainComplex wedge_of_sequence(const ChainComplex& first, const std::vector<ChainMap>& inclusions,
                               std::size_t slack = 2);

/// Multilinear wedge map: given maps c_i : R^{d_i} -> R^D, the matrix of
/// (x_1, ..., x_k) |-> c_1 x_1 ^ ... ^ c_k x_k from the Kronecker basis of
/// the tensor product into Lambda^k R^D.
Matrix multi_wedge_map(const std::vector<Matrix>& maps);

} // namespace extpow
