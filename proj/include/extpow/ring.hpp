#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <stdexcept>
#include <string>

namespace extpow {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integral(const Rat& x) { return den(x) == 1; }

enum class RingKind { Integers, Rationals, PrimeField };

/// Coefficient ring of all matrices: Z, Q, or F_p for a prime p.
/// Scalars are stored as exact rationals; the ring tag fixes which values
/// are legal and how division behaves.
class Ring {
public:
    static Ring Z() { return Ring(RingKind::Integers, 0); }
    static Ring Q() { return Ring(RingKind::Rationals, 0); }
    static Ring Fp(const Int& p);

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return p_; }

    bool is_field() const { return kind_ != RingKind::Integers; }

    /// Canonical representative: reduces mod p over F_p, checks integrality
    /// over Z.
    Rat normalize(const Rat& x) const;

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }

    bool is_unit(const Rat& a) const;

    /// Multiplicative inverse; throws if the element is not a unit.
    Rat inv(const Rat& a) const;

    /// Exact division a/b; requires b to divide a (always true over fields).
    Rat div(const Rat& a, const Rat& b) const;

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string name() const;

private:
    Ring(RingKind k, const Int& p) : kind_(k), p_(p) {}

    RingKind kind_;
    Int p_;
};

/// Thrown when a constructed object violates a structural law that the
/// implementation relies on (square-zero differentials, simplicial
/// identities, vanishing bounds).
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace extpow
