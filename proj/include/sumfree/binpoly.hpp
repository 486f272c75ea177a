#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sumfree/intmath.hpp"

namespace sumfree {

// A polynomial over GF(2), stored as a bit vector (bit i = coefficient of X^i).
// The zero polynomial has degree -1, kept distinct from constants.
class BinPoly {
public:
    BinPoly() = default;
    static BinPoly zero() { return BinPoly(); }
    static BinPoly one() { return from_bits(1); }
    static BinPoly x() { return from_bits(2); }
    static BinPoly monomial(unsigned e);
    static BinPoly from_bits(u64 bits);
    static BinPoly from_hex(const std::string& hex);

    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool v);
    u64 low_bits() const { return words_.empty() ? 0 : words_[0]; }

    std::string to_hex() const;
    std::string to_string() const;  // e.g. "X^3+X+1"

    BinPoly shifted(unsigned s) const;  // multiply by X^s
    BinPoly reversed() const;           // reciprocal polynomial X^deg * P(1/X)

    friend BinPoly operator+(const BinPoly& a, const BinPoly& b);
    friend BinPoly operator*(const BinPoly& a, const BinPoly& b);
    friend bool operator==(const BinPoly& a, const BinPoly& b) { return a.words_ == b.words_; }
    friend bool operator!=(const BinPoly& a, const BinPoly& b) { return !(a == b); }
    friend bool operator<(const BinPoly& a, const BinPoly& b);  // bit vector as integer

    static std::pair<BinPoly, BinPoly> divrem(const BinPoly& a, const BinPoly& b);
    friend BinPoly operator/(const BinPoly& a, const BinPoly& b) { return divrem(a, b).first; }
    friend BinPoly operator%(const BinPoly& a, const BinPoly& b) { return divrem(a, b).second; }

private:
    std::vector<u64> words_;
    void trim();
};

BinPoly poly_gcd(BinPoly a, BinPoly b);
bool poly_divides(const BinPoly& d, const BinPoly& a);
BinPoly poly_mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& mod);
BinPoly poly_powmod(const BinPoly& base, u64 e, const BinPoly& mod);
// X^(2^r) mod f by repeated squaring.
BinPoly poly_frob_power(unsigned r, const BinPoly& mod);
// P(X^s)
BinPoly poly_substitute_xs(const BinPoly& p, unsigned s);
// X^n + 1
BinPoly xn_plus_1(unsigned n);

bool is_irreducible(const BinPoly& f);

// Cyclotomic polynomial of odd index d, reduced mod 2.
BinPoly cyclotomic(unsigned d);

// Partition of the units mod d under multiplication by 2; each coset starts at its
// smallest member and cosets are ordered by that member. d = 1 yields the single
// conventional coset {0} attached to the factor X+1.
std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned d);

struct XnFactor {
    BinPoly poly;     // irreducible
    unsigned d;       // index: poly divides the cyclotomic polynomial of index d
    unsigned mult;    // multiplicity, always 2^e where n = 2^e * t
    bool zero_trace;  // coefficient of X^(deg-1) vanishes
};

struct XnFactorization {
    unsigned n = 0;
    unsigned t = 0;  // odd part of n
    unsigned e = 0;  // n = 2^e * t
    std::vector<XnFactor> factors;
};

// Complete factorization of X^n + 1 over GF(2) via cyclotomic cosets.
XnFactorization factorize_xn_minus_1(unsigned n);

// Least e >= 1 with P | X^e + 1; requires P(0) = 1 and deg P >= 1.
u64 poly_order(const BinPoly& p);

} // namespace sumfree
