#pragma once

#include <cstdint>
#include <string>

#include "sumfree/binpoly.hpp"
#include "sumfree/intmath.hpp"

namespace sumfree {

// An element of GF(2^n) in the polynomial basis: bit i = coefficient of X^i.
using FieldElem = u64;

// A concrete GF(2^n), 2 <= n <= 64, defined by an irreducible degree-n modulus.
// Immutable after construction; all operations are pure and thread-safe.
class FieldCtx {
public:
    // Default modulus: the lexicographically smallest irreducible of degree n
    // (coefficient vector compared as an integer), so a given n always yields
    // the same field.
    explicit FieldCtx(unsigned n);
    FieldCtx(unsigned n, const BinPoly& modulus);

    unsigned degree() const { return n_; }
    const BinPoly& modulus() const { return modulus_; }
    u64 elem_mask() const { return mask_; }
    // 2^n - 1 (the multiplicative group order)
    u64 group_order() const { return mask_; }

    bool valid_elem(FieldElem a) const { return (a & ~mask_) == 0; }

    FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem sqr(FieldElem a) const { return mul(a, a); }
    FieldElem pow(FieldElem a, u64 e) const;

    // x^(2^n - 2): the multiplicative inverse extended by 0 -> 0.
    FieldElem inv(FieldElem a) const;
    // Same map via binary extended Euclid on the modulus; must agree with inv().
    FieldElem inv_euclid(FieldElem a) const;

    // a^(2^i); i may exceed n since the Frobenius has order n.
    FieldElem frobenius(FieldElem a, unsigned i) const;

    // Relative trace onto GF(2^l) for l | n: sum of a^(2^(l*i)), i = 0..n/l-1.
    FieldElem rel_trace(FieldElem a, unsigned l) const;

    // Smallest alpha (as an integer) whose Frobenius conjugates form a basis.
    FieldElem find_normal_element() const;

    // g(sigma) applied to x: sum of x^(2^i) over the set bits of g.
    FieldElem apply_sigma_poly(const BinPoly& g, FieldElem x) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.n_ == b.n_ && a.modulus_ == b.modulus_;
    }

private:
    unsigned n_;
    BinPoly modulus_;
    u64 modlow_;  // modulus with the leading X^n bit dropped
    u64 mask_;
    void init();
};

std::string elem_to_hex(FieldElem a);
FieldElem elem_from_hex(const std::string& s);

// Default modulus used by FieldCtx(n), exposed for reproducibility checks.
BinPoly default_modulus(unsigned n);

} // namespace sumfree
