#include "sumfree/gf2n.hpp"

#include <sstream>
#include <stdexcept>

#include "sumfree/f2linalg.hpp"

namespace sumfree {

BinPoly default_modulus(unsigned n) {
    // Scan X^n + c for c = 0, 1, 2, ... ; the first irreducible hit is the
    // lexicographically smallest degree-n irreducible.
    for (u64 c = 0;; ++c) {
        BinPoly cand = BinPoly::monomial(n) + BinPoly::from_bits(c);
        if (is_irreducible(cand)) return cand;
        if (c == ~u64(0)) break;
    }
    throw std::logic_error("default_modulus: unreachable");
}

FieldCtx::FieldCtx(unsigned n) : n_(n) {
    if (n < 2 || n > 64) throw std::invalid_argument("FieldCtx: n must be in 2..64");
    modulus_ = default_modulus(n);
    init();
}

FieldCtx::FieldCtx(unsigned n, const BinPoly& modulus) : n_(n), modulus_(modulus) {
    if (n < 2 || n > 64) throw std::invalid_argument("FieldCtx: n must be in 2..64");
    if (modulus_.degree() != static_cast<int>(n))
        throw std::invalid_argument("FieldCtx: modulus degree mismatch");
    if (!is_irreducible(modulus_)) throw std::invalid_argument("FieldCtx: modulus is reducible");
    init();
}

void FieldCtx::init() {
    mask_ = (n_ == 64) ? ~u64(0) : ((u64(1) << n_) - 1);
    modlow_ = modulus_.low_bits() & mask_;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    FieldElem acc = 0;
    const u64 hibit = u64(1) << (n_ - 1);
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        u64 carry = a & hibit;
        a = (a << 1) & mask_;
        if (carry) a ^= modlow_;
    }
    return acc;
}

FieldElem FieldCtx::pow(FieldElem a, u64 e) const {
    FieldElem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
    return pow(a, mask_ - 1);  // 2^n - 2; maps 0 to 0
}

FieldElem FieldCtx::inv_euclid(FieldElem a) const {
    if (a == 0) return 0;
    BinPoly r0 = modulus_, r1 = BinPoly::from_bits(a);
    BinPoly s0 = BinPoly::zero(), s1 = BinPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = BinPoly::divrem(r0, r1);
        r0 = r1;
        r1 = r;
        BinPoly s2 = s0 + q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (!r0.is_one()) throw std::logic_error("inv_euclid: gcd with irreducible modulus != 1");
    return (s0 % modulus_).low_bits();
}

FieldElem FieldCtx::frobenius(FieldElem a, unsigned i) const {
    i %= n_;
    for (unsigned j = 0; j < i; ++j) a = mul(a, a);
    return a;
}

FieldElem FieldCtx::rel_trace(FieldElem a, unsigned l) const {
    if (l == 0 || n_ % l != 0) throw std::invalid_argument("rel_trace: l must divide n");
    FieldElem acc = a, y = a;
    for (unsigned i = 1; i < n_ / l; ++i) {
        y = frobenius(y, l);
        acc ^= y;
    }
    if (frobenius(acc, l) != acc) throw std::logic_error("rel_trace: result not in subfield");
    return acc;
}

FieldElem FieldCtx::find_normal_element() const {
    for (FieldElem cand = 1;; ++cand) {
        if (cand > mask_) throw std::logic_error("find_normal_element: none found");
        std::vector<u64> rows(n_);
        FieldElem c = cand;
        for (unsigned i = 0; i < n_; ++i) {
            rows[i] = c;
            c = mul(c, c);
        }
        if (f2_rank(rows) == n_) return cand;
    }
}

FieldElem FieldCtx::apply_sigma_poly(const BinPoly& g, FieldElem x) const {
    FieldElem acc = 0;
    for (int i = 0; i <= g.degree(); ++i) {
        if (g.coeff(static_cast<unsigned>(i))) acc ^= frobenius(x, static_cast<unsigned>(i));
    }
    return acc;
}

std::string elem_to_hex(FieldElem a) {
    std::ostringstream os;
    os << std::hex << a;
    return os.str();
}

FieldElem elem_from_hex(const std::string& s) {
    if (s.empty() || s.size() > 16) throw std::invalid_argument("elem_from_hex: bad length");
    u64 v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("elem_from_hex: invalid digit");
        v = (v << 4) | static_cast<u64>(d);
    }
    return v;
}

} // namespace sumfree
