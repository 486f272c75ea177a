#include "doctest.h"

#include <set>

#include "sumfree/catalog.hpp"

using namespace sumfree;

namespace {

std::set<unsigned> kset_of_c2(unsigned n) {
    std::set<unsigned> ks;
    for (auto& t : cor_c2_enumerate(n)) ks.insert(t.k);
    return ks;
}

std::set<unsigned> kset_of_cc3(unsigned n) {
    std::set<unsigned> ks;
    for (auto& e : cor_cc3_enumerate(n)) ks.insert(e.k);
    return ks;
}

} // namespace

TEST_CASE("catalog: per-index rows for small odd d") {
    auto rows = table1(31);
    REQUIRE(rows.size() == 16);
    auto row = [&](unsigned d) {
        for (auto& r : rows) {
            if (r.d == d) return r;
        }
        FAIL("missing row");
        return CyclotomicRow{};
    };
    CHECK(row(1).o == 1);
    CHECK(row(1).cnt == 1);
    CHECK(row(1).Nd == 0);
    CHECK(row(7).o == 3);
    CHECK(row(7).cnt == 2);
    CHECK(row(7).Nd == 1);
    CHECK(row(31).o == 5);
    CHECK(row(31).cnt == 6);
    CHECK(row(31).Nd == 3);

    // sanity: o * cnt = phi(d), counts match the factorization
    for (auto& r : rows) {
        CHECK(r.o * r.cnt == euler_phi_u64(r.d));
        CHECK(r.Nd <= r.cnt);
    }
}

TEST_CASE("catalog: zero-trace count by full field sweep for small orders") {
    // independent third route: count order-d elements with zero trace by sweeping
    // the whole field (only cheap when o_d(2) is small)
    for (auto& r : table1(23)) {
        if (r.d == 1 || r.o > 16) continue;
        FieldCtx F(std::max(2u, r.o));
        unsigned count = 0;
        for (FieldElem x = 1; x <= F.elem_mask(); ++x) {
            bool order_d = F.pow(x, r.d) == 1;
            if (order_d) {
                for (auto& [p, e] : factorize_u64(r.d)) {
                    if (F.pow(x, r.d / p) == 1) { order_d = false; break; }
                }
            }
            if (order_d && F.rel_trace(x, 1) == 0) ++count;
        }
        CAPTURE(r.d);
        CHECK(count == r.o * r.Nd);
    }
}

TEST_CASE("catalog: attainable degree sets") {
    CHECK(compute_Kn(1).kset.empty());
    CHECK(compute_Kn(2).kset == std::set<unsigned>{2});
    CHECK(compute_Kn(6).kset == std::set<unsigned>{2, 3, 4, 6});
    CHECK(compute_Kn(12).kset == std::set<unsigned>{2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
    CHECK(compute_Kn(17).kset == std::set<unsigned>{8, 9, 17});
    CHECK(compute_Kn(31).kset == std::set<unsigned>{5, 6, 10, 11, 15, 16, 20, 21, 25, 26, 31});

    // realizations: right degree, vanishing X^(k-1) coefficient, reciprocal divides X^n+1
    for (unsigned n : {10u, 14u, 20u}) {
        auto rep = compute_Kn(n);
        CHECK(rep.realizations.size() == rep.kset.size());
        for (auto& real : rep.realizations) {
            CAPTURE(n); CAPTURE(real.k);
            CHECK(real.factor.degree() == static_cast<int>(real.k));
            CHECK(!real.factor.coeff(real.k - 1));
            CHECK(!real.shaped.coeff(1));
            CHECK(poly_divides(real.shaped, xn_plus_1(n)));
        }
    }
}

TEST_CASE("catalog: cyclotomic-selection enumeration") {
    // n = 9: exactly three valid selections
    auto t9 = cor_c2_enumerate(9);
    REQUIRE(t9.size() == 3);
    std::set<std::pair<std::set<unsigned>, unsigned>> got;
    for (auto& t : t9) {
        got.insert({std::set<unsigned>(t.divisors.begin(), t.divisors.end()), t.k});
    }
    std::set<std::pair<std::set<unsigned>, unsigned>> expect{
        {{9}, 6}, {{1, 3}, 3}, {{1, 3, 9}, 9}};
    CHECK(got == expect);

    // the complete enumerations (the displayed triples plus the remaining valid
    // selections, e.g. the all-divisor one)
    CHECK(kset_of_c2(6) == std::set<unsigned>{2, 3, 4, 6});
    CHECK(kset_of_c2(8) == std::set<unsigned>{2, 4, 6, 8});
    CHECK(kset_of_c2(10) == std::set<unsigned>{2, 5, 8, 10});
    CHECK(kset_of_c2(12) == std::set<unsigned>{2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
    CHECK(kset_of_c2(15) == std::set<unsigned>{3, 5, 6, 9, 10, 12, 15});

    // every selection's degree set is inside the factor catalog
    for (unsigned n : {6u, 8u, 9u, 10u, 12u, 15u}) {
        auto kn = compute_Kn(n).kset;
        for (unsigned k : kset_of_c2(n)) {
            CAPTURE(n); CAPTURE(k);
            CHECK(kn.count(k) == 1);
        }
    }
}

TEST_CASE("catalog: substituted-divisor enumeration") {
    auto e6 = cor_cc3_enumerate(6);
    std::set<unsigned> s2_ks;
    for (auto& e : e6) {
        if (e.s == 2) s2_ks.insert(e.k);
    }
    CHECK(s2_ks == std::set<unsigned>{2, 4, 6});
    CHECK(kset_of_cc3(6) == std::set<unsigned>{2, 3, 4, 6});

    // n = 9: s = 3, R = X+1 gives degree 3
    bool found = false;
    for (auto& e : cor_cc3_enumerate(9)) {
        if (e.s == 3 && e.R == BinPoly::from_bits(0b11)) {
            found = true;
            CHECK(e.k == 3);
        }
    }
    CHECK(found);

    CHECK(cor_cc3_enumerate(7).empty());  // primes admit no s >= 2

    // nothing beyond the factor catalog, for n = 12 in particular
    auto kn12 = compute_Kn(12).kset;
    for (unsigned k : kset_of_cc3(12)) CHECK(kn12.count(k) == 1);
}

TEST_CASE("catalog: certificates with catalog provenance") {
    FieldCtx F(9);
    for (auto& t : cor_c2_enumerate(9)) {
        if (t.k >= 2 && t.k <= 9 && t.k != 9) {
            Certificate c = witness_from_c2(F, t);
            CHECK(c.verified);
            CHECK(c.k == t.k);
            CHECK(c.method == "cor_c2");
        }
    }
    for (auto& e : cor_cc3_enumerate(9)) {
        Certificate c = witness_from_cc3(F, e);
        CHECK(c.verified);
        CHECK(c.k == e.k);
    }
}

TEST_CASE("catalog: threshold predicates") {
    // k=3 boundary sits between 27 and 28
    CHECK(!lang_weil_applicable(27, 3).small_k);
    CHECK(lang_weil_applicable(28, 3).small_k);
    CHECK(lang_weil_applicable(100, 3).small_k);
    CHECK(!lang_weil_applicable(1000, 2).small_k);  // needs k >= 3

    // large side: k = n - 3 at huge n
    CHECK(lang_weil_applicable(300, 297).large_k);
    CHECK(!lang_weil_applicable(300, 250).large_k);
    CHECK(!lang_weil_applicable(10, 8).large_k);  // n - k = 2 < 3
}

TEST_CASE("catalog: classifier") {
    CHECK(classify(7, 2, 0).verdict == Verdict::SumFree);
    CHECK(classify(7, 5, 0).verdict == Verdict::SumFree);  // n-2 dual
    CHECK(classify(9, 1, 0).verdict == Verdict::SumFree);

    auto s127 = classify(12, 7, 50);
    CHECK(s127.verdict == Verdict::NotSumFree);
    bool via_kn = false;
    for (auto& c : s127.criteria_fired) {
        if (c == "factor_catalog") via_kn = true;
    }
    CHECK(via_kn);
    REQUIRE(s127.certificate.has_value());
    CHECK(s127.certificate->k == 7);
    CHECK(verify_certificate(*s127.certificate));

    auto s135 = classify(13, 5, 300);
    CHECK(s135.verdict != Verdict::SumFree);  // either a found witness or unknown

    // gcd criterion with a constructible chain: n=15, k=6
    auto s156 = classify(15, 6, 0);
    CHECK(s156.verdict == Verdict::NotSumFree);
    REQUIRE(s156.certificate.has_value());
    CHECK(s156.certificate->k == 6);

    // never sum-free inside the factor catalog
    for (unsigned n = 2; n <= 16; ++n) {
        for (unsigned k : compute_Kn(n).kset) {
            CAPTURE(n); CAPTURE(k);
            CHECK(classify(n, k, 0).verdict == Verdict::NotSumFree);
        }
    }

    // even n: the whole middle range is settled
    for (unsigned n = 4; n <= 16; n += 2) {
        for (unsigned k = 2; k + 2 <= n; ++k) {
            CAPTURE(n); CAPTURE(k);
            CHECK(classify(n, k, 0).verdict == Verdict::NotSumFree);
        }
    }
}
