#include "doctest.h"

#include <random>

#include "sumfree/gf2n.hpp"

using namespace sumfree;

namespace {

// Oracle: smallest irreducible of degree n by scanning integers and trial division.
BinPoly brute_default_modulus(unsigned n) {
    for (u64 low = 0; low < (u64(1) << n); ++low) {
        BinPoly f = BinPoly::monomial(n) + BinPoly::from_bits(low);
        bool irred = true;
        for (u64 bits = 2; irred; ++bits) {
            BinPoly g = BinPoly::from_bits(bits);
            if (g.degree() > static_cast<int>(n) / 2) break;
            if (g.degree() >= 1 && poly_divides(g, f)) irred = false;
        }
        if (irred) return f;
    }
    throw std::logic_error("no irreducible found");
}

} // namespace

TEST_CASE("gf2n: construction and default moduli") {
    CHECK(FieldCtx(2).modulus() == BinPoly::from_bits(0b111));
    for (unsigned n : {3u, 4u, 5u, 8u, 11u}) {
        CAPTURE(n);
        CHECK(FieldCtx(n).modulus() == brute_default_modulus(n));
    }
    CHECK(FieldCtx(3).modulus() == BinPoly::from_bits(0b1011));  // X^3+X+1

    CHECK_THROWS_AS(FieldCtx(4, BinPoly::from_bits(0b111)), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(4, BinPoly::from_bits(0b10101)), std::invalid_argument);  // (X^2+X+1)^2
    CHECK_THROWS_AS(FieldCtx(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(65), std::invalid_argument);
}

TEST_CASE("gf2n: arithmetic basics") {
    FieldCtx F(2);
    CHECK(F.mul(0b10, 0b10) == 0b11);  // X^2 = X+1 in GF(4)
    FieldCtx G(8);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        FieldElem a = rng() & G.elem_mask();
        CHECK(G.add(a, a) == 0);
        if (a) CHECK(G.pow(a, G.group_order()) == 1);
    }
    CHECK(G.pow(0, 0) == 1);
    CHECK(G.pow(5, 0) == 1);
}

TEST_CASE("gf2n: inversion") {
    FieldCtx F(3, BinPoly::from_bits(0b1011));
    CHECK(F.inv(0) == 0);
    CHECK(F.inv(1) == 1);
    FieldElem ix = F.inv(0b010);
    CHECK(F.mul(0b010, ix) == 1);
    CHECK(ix == 0b101);  // X^2+1

    for (unsigned n : {2u, 7u, 13u, 29u, 64u}) {
        FieldCtx G(n);
        std::mt19937_64 rng(n);
        for (int i = 0; i < 40; ++i) {
            FieldElem a = rng() & G.elem_mask();
            CAPTURE(n); CAPTURE(a);
            CHECK(G.inv(a) == G.inv_euclid(a));
            if (a) CHECK(G.mul(a, G.inv(a)) == 1);
        }
    }
}

TEST_CASE("gf2n: frobenius") {
    FieldCtx F(9);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 40; ++i) {
        FieldElem a = rng() & F.elem_mask();
        FieldElem b = rng() & F.elem_mask();
        unsigned j = rng() % 20;
        CHECK(F.frobenius(a, 0) == a);
        CHECK(F.frobenius(a, F.degree()) == a);
        CHECK(F.frobenius(a ^ b, j) == (F.frobenius(a, j) ^ F.frobenius(b, j)));
        CHECK(F.frobenius(F.mul(a, b), j) == F.mul(F.frobenius(a, j), F.frobenius(b, j)));
    }
}

TEST_CASE("gf2n: relative trace") {
    FieldCtx F(12);
    CHECK(F.rel_trace(0, 3) == 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        FieldElem a = rng() & F.elem_mask();
        CHECK(F.rel_trace(a, 12) == a);
        for (unsigned l : {1u, 2u, 3u, 4u, 6u}) {
            FieldElem t = F.rel_trace(a, l);
            CAPTURE(l); CAPTURE(a);
            CHECK(F.frobenius(t, l) == t);  // lands in GF(2^l)
        }
    }
    CHECK_THROWS_AS(F.rel_trace(1, 5), std::invalid_argument);

    // for a already in GF(2^l), the trace is (n/l mod 2) * a
    FieldCtx G(6);
    for (FieldElem a = 0; a <= G.elem_mask(); ++a) {
        if (G.frobenius(a, 2) == a) {  // a in GF(4)
            CHECK(G.rel_trace(a, 2) == ((6 / 2) % 2 ? a : 0));
        }
        if (G.frobenius(a, 3) == a) {  // a in GF(8)
            CHECK(G.rel_trace(a, 3) == 0);  // 6/3 = 2 terms
        }
    }
}

TEST_CASE("gf2n: normal elements") {
    FieldCtx F(2);
    CHECK(F.find_normal_element() == 0b10);  // X and X^2=X+1 are independent

    for (unsigned n : {3u, 5u, 6u, 10u, 16u}) {
        FieldCtx G(n);
        FieldElem alpha = G.find_normal_element();
        CHECK(alpha != 1);  // 1 is never normal for n >= 2
        std::vector<u64> rows;
        FieldElem c = alpha;
        for (unsigned i = 0; i < n; ++i) {
            rows.push_back(c);
            c = G.mul(c, c);
        }
        // conjugates span the field: every element reachable
        std::vector<FieldElem> combo{0};
        for (u64 m = 1; m < (u64(1) << n); ++m) {
            FieldElem v = 0;
            for (unsigned i = 0; i < n; ++i) {
                if (m & (u64(1) << i)) v ^= rows[i];
            }
            combo.push_back(v);
        }
        std::sort(combo.begin(), combo.end());
        combo.erase(std::unique(combo.begin(), combo.end()), combo.end());
        CHECK(combo.size() == (u64(1) << n));
    }
}

TEST_CASE("gf2n: sigma polynomials") {
    FieldCtx F(7);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 30; ++i) {
        FieldElem x = rng() & F.elem_mask();
        FieldElem y = rng() & F.elem_mask();
        CHECK(F.apply_sigma_poly(BinPoly::one(), x) == x);
        CHECK(F.apply_sigma_poly(xn_plus_1(7), x) == 0);
        // GF(2)-linearity
        BinPoly g = BinPoly::from_bits(rng() & 0xff);
        CHECK(F.apply_sigma_poly(g, x ^ y) ==
              (F.apply_sigma_poly(g, x) ^ F.apply_sigma_poly(g, y)));
        // ring action: (g*h)(sigma) = g(sigma) after h(sigma)
        BinPoly h = BinPoly::from_bits(rng() & 0xff);
        CHECK(F.apply_sigma_poly(g * h, x) ==
              F.apply_sigma_poly(g, F.apply_sigma_poly(h, x)));
    }
}

TEST_CASE("gf2n: hex round trip") {
    CHECK(elem_to_hex(0xb) == "b");
    CHECK(elem_from_hex("b") == 0xb);
    CHECK(elem_from_hex(elem_to_hex(0xdeadbeef12345678ull)) == 0xdeadbeef12345678ull);
    CHECK(FieldCtx(3).modulus().to_hex() == "b");
}
