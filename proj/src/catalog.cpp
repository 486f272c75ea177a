#include "sumfree/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sumfree {

std::vector<CyclotomicRow> table1(unsigned d_max) {
    if (d_max < 1) throw std::invalid_argument("table1: d_max must be >= 1");
    if (d_max > 63) throw std::invalid_argument("table1: d_max must be <= 63 (single-word fields)");
    std::vector<CyclotomicRow> rows;
    for (unsigned d = 1; d <= d_max; d += 2) {
        CyclotomicRow row;
        row.d = d;
        row.o = static_cast<unsigned>(order_of_2_mod(d));
        unsigned phi = static_cast<unsigned>(euler_phi_u64(d));
        if (phi % row.o != 0) throw std::logic_error("table1: o does not divide phi");
        row.cnt = phi / row.o;

        // Route 1: inspect the irreducible factors directly.
        unsigned by_factors = 0;
        XnFactorization fz = factorize_xn_minus_1(d);
        for (auto& f : fz.factors) {
            if (f.d == d && f.zero_trace) ++by_factors;
        }

        // Route 2: count order-d elements of GF(2^l) with zero absolute trace;
        // there are l of them per zero-trace factor.
        unsigned by_elements = 0;
        if (d == 1) {
            by_elements = 0;  // the only order-1 element is 1, of trace 1
        } else {
            unsigned l = row.o;
            FieldCtx F(std::max(2u, l));
            u64 g = F.group_order();
            FieldElem h = 0;
            for (FieldElem cand = 2;; ++cand) {
                FieldElem z = F.pow(cand, g / d);
                bool ok = z != 1;
                if (ok) {
                    for (auto& [p, e] : factorize_u64(d)) {
                        if (F.pow(z, d / p) == 1) { ok = false; break; }
                    }
                }
                if (ok) { h = z; break; }
            }
            unsigned count = 0;
            for (unsigned j = 1; j < d; ++j) {
                if (std::gcd<u64, u64>(j, d) != 1) continue;
                if (F.rel_trace(F.pow(h, j), 1) == 0) ++count;
            }
            if (count % l != 0) throw std::logic_error("table1: trace-count not divisible by l");
            by_elements = count / l;
        }
        if (by_factors != by_elements)
            throw std::logic_error("table1: factor route and element route disagree");
        row.Nd = by_factors;
        rows.push_back(row);
    }
    return rows;
}

KnReport compute_Kn(unsigned n) {
    if (n < 1 || n > 64) throw std::invalid_argument("compute_Kn: n must be in 1..64");
    KnReport report;
    report.n = n;
    XnFactorization fz = factorize_xn_minus_1(n);
    const unsigned mult = 1u << fz.e;

    // Per divisor d: the distinct zero-trace and nonzero-trace factors.
    struct Pool {
        unsigned d, o;
        std::vector<BinPoly> zero, nonzero;
    };
    std::vector<Pool> pools;
    for (auto& f : fz.factors) {
        auto it = std::find_if(pools.begin(), pools.end(), [&](const Pool& p) { return p.d == f.d; });
        if (it == pools.end()) {
            pools.push_back({f.d, static_cast<unsigned>(f.poly.degree()), {}, {}});
            it = pools.end() - 1;
        }
        (f.zero_trace ? it->zero : it->nonzero).push_back(f.poly);
    }

    // DP over (degree, parity of the nonzero-trace count), keeping one realization.
    struct Choice {
        int prev_deg = -1;
        int prev_par = 0;
        unsigned pool = 0, mu = 0, nu = 0;
    };
    const unsigned D = n + 1;
    std::vector<std::vector<bool>> seen(D, std::vector<bool>(2, false));
    std::vector<std::vector<Choice>> back(D, std::vector<Choice>(2));
    seen[0][0] = true;
    for (unsigned pi = 0; pi < pools.size(); ++pi) {
        const Pool& pool = pools[pi];
        const unsigned mu_cap = mult * static_cast<unsigned>(pool.zero.size());
        const unsigned nu_cap = mult * static_cast<unsigned>(pool.nonzero.size());
        auto prev_seen = seen;
        for (unsigned deg = 0; deg < D; ++deg) {
            for (int par = 0; par < 2; ++par) {
                if (!prev_seen[deg][par]) continue;
                for (unsigned mu = 0; mu <= mu_cap; ++mu) {
                    for (unsigned nu = 0; nu <= nu_cap; ++nu) {
                        if (mu + nu == 0) continue;
                        unsigned nd = deg + (mu + nu) * pool.o;
                        if (nd >= D) break;
                        int np = (par + nu) % 2;
                        if (seen[nd][np]) continue;
                        seen[nd][np] = true;
                        back[nd][np] = {static_cast<int>(deg), par, pi, mu, nu};
                    }
                }
            }
        }
    }

    for (unsigned k = 2; k <= n; ++k) {
        if (!seen[k][0]) continue;
        report.kset.insert(k);
        KnRealization real;
        real.k = k;
        int deg = static_cast<int>(k), par = 0;
        BinPoly prod = BinPoly::one();
        while (deg > 0) {
            const Choice& ch = back[deg][par];
            const Pool& pool = pools[ch.pool];
            real.mu_nu.emplace_back(pool.d, ch.mu, ch.nu);
            auto take = [&](const std::vector<BinPoly>& from, unsigned count) {
                for (unsigned i = 0; i < count; ++i) prod = prod * from[i / mult];
            };
            take(pool.zero, ch.mu);
            take(pool.nonzero, ch.nu);
            deg = ch.prev_deg;
            par = ch.prev_par;
        }
        std::reverse(real.mu_nu.begin(), real.mu_nu.end());
        if (prod.degree() != static_cast<int>(k))
            throw std::logic_error("compute_Kn: realization degree mismatch");
        if (prod.coeff(k - 1)) throw std::logic_error("compute_Kn: X^(k-1) coefficient not zero");
        if (!poly_divides(prod, xn_plus_1(n)))
            throw std::logic_error("compute_Kn: realization does not divide X^n+1");
        real.factor = prod;
        real.shaped = prod.reversed();
        if (real.shaped.coeff(1)) throw std::logic_error("compute_Kn: reciprocal has an X term");
        report.realizations.push_back(std::move(real));
    }
    return report;
}

std::vector<C2Triple> cor_c2_enumerate(unsigned n) {
    if (n < 2) throw std::invalid_argument("cor_c2_enumerate: n must be >= 2");
    auto fact = factorize_u64(n);
    std::vector<unsigned> primes;
    std::vector<unsigned> alphas;
    for (auto& [p, e] : fact) {
        primes.push_back(static_cast<unsigned>(p));
        alphas.push_back(static_cast<unsigned>(e));
    }
    const unsigned l = static_cast<unsigned>(primes.size());
    std::vector<unsigned> shape(l);
    unsigned cells = 1;
    for (unsigned i = 0; i < l; ++i) {
        shape[i] = alphas[i] + 1;
        cells *= shape[i];
    }
    // Cell index -> (exponent tuple, divisor, cyclotomic degree, corner flag).
    std::vector<unsigned> cell_div(cells), cell_deg(cells);
    std::vector<bool> corner(cells);
    for (unsigned c = 0; c < cells; ++c) {
        unsigned rem = c, div = 1, deg = 1;
        bool is_corner = true;
        for (unsigned i = l; i-- > 0;) {
            unsigned j = rem % shape[i];
            rem /= shape[i];
            if (j > 1) is_corner = false;
            unsigned pj1 = 1;  // p^(j-1)
            for (unsigned t = 0; t < j; ++t) {
                div *= primes[i];
                if (t + 1 < j) pj1 *= primes[i];
            }
            if (j >= 1) deg *= (primes[i] - 1) * pj1;
        }
        cell_div[c] = div;
        cell_deg[c] = deg;
        corner[c] = is_corner;
    }
    std::vector<C2Triple> out;
    for (u64 mask = 1; mask < (u64(1) << cells); ++mask) {
        unsigned parity = 0, k = 0;
        for (unsigned c = 0; c < cells; ++c) {
            if (!(mask & (u64(1) << c))) continue;
            if (corner[c]) parity ^= 1;
            k += cell_deg[c];
        }
        if (parity != 0) continue;
        C2Triple tr;
        tr.shape = shape;
        tr.primes = primes;
        tr.eps.assign(cells, 0);
        for (unsigned c = 0; c < cells; ++c) {
            if (mask & (u64(1) << c)) {
                tr.eps[c] = 1;
                tr.divisors.push_back(cell_div[c]);
            }
        }
        std::sort(tr.divisors.begin(), tr.divisors.end());
        tr.k = k;
        // cross-check: the product of the selected cyclotomic polynomials has no X term
        BinPoly prod = BinPoly::one();
        for (unsigned d : tr.divisors) {
            unsigned odd = d;
            unsigned e2 = 0;
            while (odd % 2 == 0) { odd /= 2; ++e2; }
            // cyclotomic polynomial of index 2^e2 * odd, e2 >= 1: Phi_odd(X^(2^(e2-1)))
            // reduced mod 2 equals Phi_odd squared... over GF(2), X^d - 1 factors through
            // odd cyclotomics only; index-2m cyclotomic coincides with the index-m one.
            BinPoly phi = cyclotomic(odd);
            if (e2 > 0) phi = poly_substitute_xs(phi, 1u << (e2 - 1));
            prod = prod * phi;
        }
        if (prod.degree() != static_cast<int>(k))
            throw std::logic_error("cor_c2_enumerate: degree mismatch");
        if (prod.coeff(1)) throw std::logic_error("cor_c2_enumerate: product has an X term");
        out.push_back(std::move(tr));
    }
    return out;
}

std::vector<Cc3Entry> cor_cc3_enumerate(unsigned n) {
    if (n < 2) throw std::invalid_argument("cor_cc3_enumerate: n must be >= 2");
    std::vector<Cc3Entry> out;
    if (is_prime_u64(n)) return out;  // no useful s: only s = n, the whole-field selection
    for (u64 s : divisors_of(n)) {
        if (s < 2) continue;
        unsigned m = n / static_cast<unsigned>(s);
        XnFactorization fz = factorize_xn_minus_1(m);
        // all divisors R of X^m + 1, by an odometer over factor multiplicities
        std::vector<unsigned> take(fz.factors.size(), 0);
        while (true) {
            BinPoly R = BinPoly::one();
            for (size_t i = 0; i < take.size(); ++i) {
                for (unsigned c = 0; c < take[i]; ++c) R = R * fz.factors[i].poly;
            }
            if (R.degree() >= 1) {
                BinPoly sub = poly_substitute_xs(R, static_cast<unsigned>(s));
                if (!poly_divides(sub, xn_plus_1(n)))
                    throw std::logic_error("cor_cc3_enumerate: R(X^s) does not divide X^n+1");
                if (sub.coeff(1)) throw std::logic_error("cor_cc3_enumerate: R(X^s) has an X term");
                out.push_back({static_cast<unsigned>(s), R, static_cast<unsigned>(s) * static_cast<unsigned>(R.degree())});
            }
            size_t i = 0;
            while (i < take.size() && take[i] == fz.factors[i].mult) {
                take[i] = 0;
                ++i;
            }
            if (i == take.size()) break;
            ++take[i];
        }
    }
    std::sort(out.begin(), out.end(), [](const Cc3Entry& a, const Cc3Entry& b) {
        if (a.s != b.s) return a.s < b.s;
        if (a.k != b.k) return a.k < b.k;
        return a.R < b.R;
    });
    return out;
}

namespace {

struct Interval {
    long double lo, hi;
};

Interval log2_one_plus_sqrt21() {
    long double v = log2l(1.0L + sqrtl(21.0L));
    long double margin = v * 1e-15L;
    return {v - margin, v + margin};
}

} // namespace

LangWeilApplicability lang_weil_applicable(unsigned n, unsigned k) {
    LangWeilApplicability out;
    Interval L = log2_one_plus_sqrt21();
    if (k >= 3) {
        // n >= (L/3)(13k - 6)
        long double c = static_cast<long double>(13 * k - 6);
        long double hi = L.hi / 3.0L * c;
        out.small_k = static_cast<long double>(n) >= hi;
    }
    if (n >= k && n - k >= 3) {
        // n <= L(13k + 6) / (13L - 3)
        long double num_lo = L.lo * static_cast<long double>(13 * k + 6);
        long double den_hi = 13.0L * L.hi - 3.0L;
        long double lo = num_lo / den_hi;
        out.large_k = static_cast<long double>(n) <= lo;
    }
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NotSumFree: return "NOT_SUM_FREE";
        case Verdict::SumFree: return "SUM_FREE";
        default: return "UNKNOWN";
    }
}

namespace {

// Subfield certificate for gcd(k, n) = g lifted to dimension k in steps of g.
std::optional<Certificate> gcd_chain_certificate(const FieldCtx& F, unsigned k) {
    const unsigned n = F.degree();
    unsigned g = std::gcd(k, n);
    if (g < 2) return std::nullopt;
    Certificate cur = witness_subfield(F, g);
    while (cur.k < k) {
        if (cur.k >= n / g) return std::nullopt;
        cur = witness_lift(F, cur, g);
    }
    return cur;
}

std::optional<Certificate> direct_certificate(const FieldCtx& F, const KnReport& kn, unsigned k,
                                              u64 budget, u64 seed) {
    const unsigned n = F.degree();
    if (k >= 2 && k <= n && n % k == 0) return witness_subfield(F, k);
    for (auto& real : kn.realizations) {
        if (real.k == k) return witness_from_factor(F, real.shaped);
    }
    if (n % 2 == 0 && k >= 2 && k <= n - 2) {
        if (auto c = witness_even_direct(F, k)) return c;
    }
    if (auto c = gcd_chain_certificate(F, k)) return c;
    if (k >= 2 && budget > 0) {
        if (auto c = witness_search_random(F, k, seed, budget)) return c;
    }
    return std::nullopt;
}

} // namespace

StatusVerdict classify(unsigned n, unsigned k, u64 search_budget, u64 seed) {
    if (n < 1 || n > 64 || k < 1 || k > n) throw std::invalid_argument("classify: need 1 <= k <= n <= 64");
    StatusVerdict sv;
    sv.n = n;
    sv.k = k;

    KnReport kn = compute_Kn(n);
    const bool bijective = (k == 1);
    const bool nyberg = (n % 2 == 1) && (k == 2 || (n >= 2 && k == n - 2));
    const bool even_range = (n % 2 == 0) && k >= 2 && k <= n - 2;
    const bool in_kn = kn.kset.count(k) > 0;
    const bool dual_in_kn = (n - k >= 2) && kn.kset.count(n - k) > 0;
    const bool gcd_hit = std::gcd(k, n) > 1;
    const bool gcd_dual = (n - k >= 1) && std::gcd(n - k, n) > 1;
    const bool three_family = n >= 6 && (k == 3 || k == n - 3);
    LangWeilApplicability lw = lang_weil_applicable(n, k);

    if (bijective) sv.criteria_fired.push_back("bijectivity");
    if (nyberg) sv.criteria_fired.push_back("apn_odd_parity");
    if (even_range) sv.criteria_fired.push_back("even_n_full_range");
    if (in_kn) sv.criteria_fired.push_back("factor_catalog");
    if (dual_in_kn) sv.criteria_fired.push_back("factor_catalog_dual");
    if (gcd_hit) sv.criteria_fired.push_back("gcd_subfield");
    if (gcd_dual) sv.criteria_fired.push_back("gcd_subfield_dual");
    if (three_family) sv.criteria_fired.push_back("dimension_three_family");
    if (lw.small_k) sv.criteria_fired.push_back("lang_weil_small");
    if (lw.large_k) sv.criteria_fired.push_back("lang_weil_large");

    if (bijective) {
        sv.verdict = Verdict::SumFree;
        sv.reason = "bijectivity";
        return sv;
    }
    if (nyberg) {
        sv.verdict = Verdict::SumFree;
        sv.reason = "apn_odd_parity";
        return sv;
    }

    const bool not_sum_free = even_range || in_kn || dual_in_kn || gcd_hit || gcd_dual ||
                              three_family || lw.small_k || lw.large_k;
    if (not_sum_free) {
        sv.verdict = Verdict::NotSumFree;
        sv.reason = sv.criteria_fired.front();
        FieldCtx F(n);  // n >= 2 here since k >= 2
        sv.certificate = direct_certificate(F, kn, k, search_budget, seed);
        if (!sv.certificate && n - k >= 2) {
            sv.dual_certificate = direct_certificate(F, kn, n - k, search_budget, seed);
        }
        return sv;
    }

    if (search_budget > 0 && k >= 2) {
        FieldCtx F(n);
        if (auto c = witness_search_random(F, k, seed, search_budget)) {
            sv.verdict = Verdict::NotSumFree;
            sv.reason = "random_search";
            sv.criteria_fired.push_back("random_search");
            sv.certificate = std::move(c);
            return sv;
        }
    }
    sv.verdict = Verdict::Unknown;
    sv.reason = "no criterion applies";
    return sv;
}

Certificate witness_from_c2(const FieldCtx& F, const C2Triple& triple) {
    BinPoly prod = BinPoly::one();
    for (unsigned d : triple.divisors) {
        unsigned odd = d, e2 = 0;
        while (odd % 2 == 0) { odd /= 2; ++e2; }
        BinPoly phi = cyclotomic(odd);
        if (e2 > 0) phi = poly_substitute_xs(phi, 1u << (e2 - 1));
        prod = prod * phi;
    }
    Certificate cert = witness_from_factor(F, prod);
    cert.method = "cor_c2";
    cert.method_params = {{"divisors", triple.divisors}, {"k", triple.k}};
    return cert;
}

Certificate witness_from_cc3(const FieldCtx& F, const Cc3Entry& entry) {
    BinPoly sub = poly_substitute_xs(entry.R, entry.s);
    Certificate cert = witness_from_factor(F, sub);
    cert.method = "cor_cc3";
    cert.method_params = {{"s", entry.s}, {"R", entry.R.to_hex()}, {"k", entry.k}};
    return cert;
}

} // namespace sumfree
