#include "extpow/ring.hpp"

namespace extpow {

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int mod_reduce(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

} // namespace

Ring Ring::Fp(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("Ring::Fp: modulus " + p.str() + " is not prime");
    return Ring(RingKind::PrimeField, p);
}

Rat Ring::normalize(const Rat& x) const {
    switch (kind_) {
    case RingKind::Rationals:
        return x;
    case RingKind::Integers:
        if (!is_integral(x)) throw std::invalid_argument("non-integral scalar in a Z-matrix: " + x.str());
        return x;
    case RingKind::PrimeField: {
        Int d = mod_reduce(den(x), p_);
        if (d == 0) throw std::invalid_argument("scalar with denominator divisible by " + p_.str());
        Int n = mod_reduce(num(x), p_);
        if (d == 1) return Rat(n);
        // d^{-1} mod p by Fermat
        Int inv = 1, base = d, e = p_ - 2;
        while (e > 0) {
            if (e % 2 == 1) inv = mod_reduce(inv * base, p_);
            base = mod_reduce(base * base, p_);
            e /= 2;
        }
        return Rat(mod_reduce(n * inv, p_));
    }
    }
    throw std::logic_error("unreachable");
}

bool Ring::is_unit(const Rat& a) const {
    Rat v = normalize(a);
    if (kind_ == RingKind::Integers) return v == 1 || v == -1;
    return v != 0;
}

Rat Ring::inv(const Rat& a) const {
    Rat v = normalize(a);
    if (!is_unit(v)) throw std::domain_error("not a unit: " + v.str());
    if (kind_ == RingKind::Integers) return v; // +-1 are self-inverse
    return normalize(Rat(1) / v);
}

Rat Ring::div(const Rat& a, const Rat& b) const {
    if (kind_ == RingKind::Integers) {
        Rat bb = normalize(b);
        if (bb == 0) throw std::domain_error("division by zero");
        Int q = num(a) / num(bb);
        if (q * num(bb) != num(a)) throw std::domain_error("inexact integer division");
        return Rat(q);
    }
    Rat bb = normalize(b);
    if (bb == 0) throw std::domain_error("division by zero");
    return normalize(a / bb);
}

std::string Ring::name() const {
    switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + p_.str();
    }
    return "?";
}

} // namespace extpow
