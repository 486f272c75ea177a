#include "sumfree/witness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

#include "sumfree/f2linalg.hpp"

namespace sumfree {

namespace {

constexpr u64 kEnumLimit = u64(1) << 20;

Certificate make_certificate(const FieldCtx& F, unsigned k, std::vector<FieldElem> basis,
                             std::string method, nlohmann::ordered_json params) {
    Certificate cert;
    cert.n = F.degree();
    cert.modulus = F.modulus();
    cert.k = k;
    cert.basis = std::move(basis);
    cert.method = std::move(method);
    cert.method_params = std::move(params);
    if (!verify_certificate(F, cert))
        throw std::logic_error("certificate construction produced an unverifiable basis");
    cert.verified = true;
    return cert;
}

// Columns of the GF(2)-linear map x -> x^(2^l) + x.
std::vector<u64> subfield_kernel_map(const FieldCtx& F, unsigned l) {
    std::vector<u64> cols(F.degree());
    for (unsigned j = 0; j < F.degree(); ++j) {
        FieldElem e = u64(1) << j;
        cols[j] = F.frobenius(e, l) ^ e;
    }
    return cols;
}

std::vector<FieldElem> subfield_basis(const FieldCtx& F, unsigned l) {
    std::vector<u64> ker = f2_kernel(subfield_kernel_map(F, l), F.degree());
    std::sort(ker.begin(), ker.end());
    return ker;
}

// Try every solution of F_k(x, v') = 0 for an x independent of v'.
std::optional<std::vector<FieldElem>> complete_tuple(const FieldCtx& F,
                                                     const std::vector<FieldElem>& vprime) {
    for (FieldElem x : solve_first_var(F, vprime)) {
        std::vector<FieldElem> full{x};
        full.insert(full.end(), vprime.begin(), vprime.end());
        if (independent(full)) return full;
    }
    return std::nullopt;
}

} // namespace

bool verify_certificate(const FieldCtx& F, const Certificate& cert) {
    if (cert.n != F.degree() || cert.modulus != F.modulus())
        throw std::invalid_argument("verify_certificate: field mismatch");
    if (cert.k == 0 || cert.k != cert.basis.size() || cert.k > cert.n) return false;
    for (FieldElem v : cert.basis) {
        if (!F.valid_elem(v)) throw std::invalid_argument("verify_certificate: element out of range");
    }
    if (!independent(cert.basis)) return false;
    if (moore_det(F, cert.basis) == 0) return false;
    // inverse_sum internally re-checks the enumeration route when 2^k <= 2^20.
    return inverse_sum(F, cert.basis) == 0;
}

bool verify_certificate(const Certificate& cert) {
    FieldCtx F(cert.n, cert.modulus);
    return verify_certificate(F, cert);
}

Certificate witness_subfield(const FieldCtx& F, unsigned k) {
    if (k < 2 || F.degree() % k != 0)
        throw std::invalid_argument("witness_subfield: k must divide n, k >= 2");
    std::vector<FieldElem> basis = subfield_basis(F, k);
    if (basis.size() != k) throw std::logic_error("witness_subfield: kernel dimension != k");
    return make_certificate(F, k, std::move(basis), "subfield", {{"k", k}});
}

std::vector<FieldElem> frobenius_orbit_basis(const FieldCtx& F, const BinPoly& f) {
    const unsigned n = F.degree();
    BinPoly g = xn_plus_1(n) / f;
    FieldElem alpha = F.find_normal_element();
    FieldElem x = F.apply_sigma_poly(g, alpha);
    std::vector<FieldElem> basis;
    for (int i = 0; i < f.degree(); ++i) basis.push_back(F.frobenius(x, static_cast<unsigned>(i)));
    return basis;
}

Certificate witness_from_factor(const FieldCtx& F, const BinPoly& f) {
    const unsigned n = F.degree();
    if (f.degree() < 2) throw std::invalid_argument("witness_from_factor: degree must be >= 2");
    if (!poly_divides(f, xn_plus_1(n)))
        throw std::invalid_argument("witness_from_factor: f does not divide X^n+1");
    if (f.coeff(1))
        throw std::invalid_argument(
            "witness_from_factor: X-coefficient of f is nonzero (the orbit span sums to a nonzero value)");
    std::vector<FieldElem> basis = frobenius_orbit_basis(F, f);
    return make_certificate(F, static_cast<unsigned>(f.degree()), std::move(basis), "factor",
                            {{"factor", f.to_hex()}});
}

Certificate witness_lift(const FieldCtx& F, const Certificate& inner, unsigned l) {
    const unsigned n = F.degree();
    if (l < 2 || n % l != 0) throw std::invalid_argument("witness_lift: l must divide n, l >= 2");
    const unsigned r = inner.k;
    if (r >= n / l) throw std::invalid_argument("witness_lift: need inner dimension < n/l");
    if (!verify_certificate(F, inner)) throw std::invalid_argument("witness_lift: inner certificate invalid");

    // (1) 0 != a with Tr_{2^n -> 2^l}(a v) = 0 for every inner basis vector v.
    std::vector<std::vector<u64>> trace_maps;
    std::vector<u64> rhs;
    for (FieldElem v : inner.basis) {
        std::vector<u64> cols(n);
        for (unsigned j = 0; j < n; ++j) cols[j] = F.rel_trace(F.mul(u64(1) << j, v), l);
        trace_maps.push_back(std::move(cols));
        rhs.push_back(0);
    }
    F2Solution asol = f2_solve_stacked(trace_maps, rhs, n);
    if (!asol.solvable || asol.kernel.empty())
        throw std::logic_error("witness_lift: no annihilating multiplier found");
    FieldElem a = *std::min_element(asol.kernel.begin(), asol.kernel.end());

    // (2) preimages of a*v under x -> x^(2^l) + x; solvable since the traces vanish.
    std::vector<u64> cols = subfield_kernel_map(F, l);
    std::vector<FieldElem> sub = subfield_basis(F, l);

    // Complement of GF(2^l): greedily extend the subfield basis by the smallest
    // field elements; representatives are normalized to have no subfield component.
    std::vector<FieldElem> combined = sub;
    std::vector<FieldElem> complement;
    for (FieldElem cand = 1; combined.size() < n; ++cand) {
        std::vector<FieldElem> trial = combined;
        trial.push_back(cand);
        if (independent(trial)) {
            combined.push_back(cand);
            complement.push_back(cand);
        }
    }
    std::vector<u64> basis_cols(n);
    for (unsigned j = 0; j < n; ++j) basis_cols[j] = combined[j];

    std::vector<FieldElem> lifted = sub;
    for (FieldElem v : inner.basis) {
        FieldElem w = F.mul(a, v);
        F2Solution ps = f2_solve(cols, w, n);
        if (!ps.solvable) throw std::logic_error("witness_lift: preimage system unsolvable");
        // coordinates in [subfield basis | complement]; zero out the subfield part
        F2Solution coord = f2_solve(basis_cols, ps.particular, n);
        if (!coord.solvable) throw std::logic_error("witness_lift: coordinate change failed");
        FieldElem x = 0;
        for (unsigned j = static_cast<unsigned>(sub.size()); j < n; ++j) {
            if (coord.particular & (u64(1) << j)) x ^= combined[j];
        }
        if ((F.frobenius(x, l) ^ x) != w)
            throw std::logic_error("witness_lift: normalized preimage lost its image");
        lifted.push_back(x);
    }
    nlohmann::ordered_json params;
    params["l"] = l;
    params["inner_method"] = inner.method;
    params["inner_k"] = inner.k;
    std::vector<std::string> inner_hex;
    for (FieldElem v : inner.basis) inner_hex.push_back(elem_to_hex(v));
    params["inner_basis"] = inner_hex;
    return make_certificate(F, l + r, std::move(lifted), "lift", std::move(params));
}

std::optional<Certificate> witness_search_random(const FieldCtx& F, unsigned k, u64 seed,
                                                 u64 budget) {
    if (k < 2 || k > F.degree())
        throw std::invalid_argument("witness_search_random: need 2 <= k <= n");
    std::mt19937_64 rng(seed);
    const u64 mask = F.elem_mask();
    for (u64 draw = 0; draw < budget; ++draw) {
        std::vector<FieldElem> vprime;
        while (vprime.size() + 1 < k) {
            FieldElem v = rng() & mask;
            if (v == 0) continue;
            vprime.push_back(v);
            if (!independent(vprime)) vprime.pop_back();
        }
        if (auto full = complete_tuple(F, vprime)) {
            nlohmann::ordered_json params{{"seed", seed}, {"draws_used", draw + 1}};
            return make_certificate(F, k, std::move(*full), "random_solve", std::move(params));
        }
    }
    return std::nullopt;
}

std::optional<Certificate> witness_solve_sweep(const FieldCtx& F, unsigned k, u64 budget) {
    if (k < 2 || k > F.degree()) throw std::invalid_argument("witness_solve_sweep: need 2 <= k <= n");
    // ascending (k-1)-combinations of nonzero field elements
    std::vector<FieldElem> tuple(k - 1);
    for (unsigned i = 0; i < k - 1; ++i) tuple[i] = i + 1;
    const u64 top = F.elem_mask();
    u64 tried = 0;
    auto advance = [&]() -> bool {
        for (unsigned i = k - 2;; --i) {
            u64 limit = top - (k - 2 - i);
            if (tuple[i] < limit) {
                ++tuple[i];
                for (unsigned j = i + 1; j < k - 1; ++j) tuple[j] = tuple[j - 1] + 1;
                return true;
            }
            if (i == 0) return false;
        }
    };
    while (tried < budget) {
        if (independent(tuple)) {
            ++tried;
            if (auto full = complete_tuple(F, tuple)) {
                nlohmann::ordered_json params{{"tuples_tried", tried}};
                return make_certificate(F, k, std::move(*full), "solve_sweep", std::move(params));
            }
        }
        if (!advance()) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Certificate> witness_search_random_parallel(const FieldCtx& F, unsigned k, u64 seed,
                                                          u64 budget, unsigned threads) {
    constexpr unsigned kShards = 16;
    if (threads <= 1) threads = 1;
    // Fixed logical shards so the outcome is independent of the thread count.
    std::vector<u64> shard_budget(kShards, budget / kShards);
    for (u64 i = 0; i < budget % kShards; ++i) ++shard_budget[i];
    std::vector<std::optional<Certificate>> results(kShards);
    std::atomic<unsigned> next{0};
    std::atomic<unsigned> best{kShards};
    auto worker = [&]() {
        while (true) {
            unsigned s = next.fetch_add(1);
            if (s >= kShards) return;
            if (s > best.load()) continue;  // a lower shard already won
            if (shard_budget[s] == 0) continue;
            u64 shard_seed = seed + 0x9e3779b97f4a7c15ull * (s + 1);
            auto r = witness_search_random(F, k, shard_seed, shard_budget[s]);
            if (r) {
                results[s] = std::move(r);
                unsigned cur = best.load();
                while (s < cur && !best.compare_exchange_weak(cur, s)) {}
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (unsigned s = 0; s < kShards; ++s) {
        if (results[s]) return results[s];
    }
    return std::nullopt;
}

ExhaustiveResult witness_search_exhaustive(const FieldCtx& F, unsigned k, u64 cap) {
    const unsigned n = F.degree();
    if (k < 1 || k > n) throw std::invalid_argument("witness_search_exhaustive: need 1 <= k <= n");
    ExhaustiveResult res;
    auto count = gaussian_binomial_2(n, k, cap);
    if (!count) {
        res.status = ExhaustiveStatus::OverCap;
        return res;
    }

    // Inverse table via discrete logs when it fits in memory.
    std::vector<u32> inv_tab;
    if (n <= 22) {
        const u64 order = F.group_order();
        FieldElem gen = 0;
        for (FieldElem cand = 2; cand <= F.elem_mask(); ++cand) {
            bool ok = true;
            for (auto& [p, e] : factorize_u64(order)) {
                if (F.pow(cand, order / p) == 1) { ok = false; break; }
            }
            if (ok) { gen = cand; break; }
        }
        std::vector<u32> logt(u64(1) << n, 0);
        std::vector<u32> alog(order, 1);
        FieldElem cur = 1;
        for (u64 i = 0; i < order; ++i) {
            alog[i] = static_cast<u32>(cur);
            logt[cur] = static_cast<u32>(i);
            cur = F.mul(cur, gen);
        }
        inv_tab.assign(u64(1) << n, 0);
        for (u64 x = 1; x <= F.elem_mask(); ++x) inv_tab[x] = alog[(order - logt[x]) % order];
    }
    auto inverse_of = [&](FieldElem x) -> FieldElem {
        return inv_tab.empty() ? F.inv(x) : inv_tab[x];
    };

    // Reduced echelon bases: pivots are the highest set bits, other pivot positions
    // cleared; free cells below each pivot enumerate the remaining subspaces.
    std::vector<unsigned> comb(k);  // ascending pivot combination
    for (unsigned i = 0; i < k; ++i) comb[i] = i;
    std::vector<FieldElem> basis(k);
    u64 visited = 0;
    auto next_combination = [&]() -> bool {
        for (unsigned i = k; i-- > 0;) {
            if (comb[i] < n - k + i) {
                ++comb[i];
                for (unsigned j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    while (true) {
        std::vector<unsigned> piv(k);  // descending: row i carries pivot piv[i]
        for (unsigned i = 0; i < k; ++i) piv[i] = comb[k - 1 - i];
        // free positions: below each pivot, excluding pivot columns
        std::vector<std::pair<unsigned, unsigned>> cells;  // (row, bit)
        u64 pivmask = 0;
        for (unsigned i = 0; i < k; ++i) pivmask |= u64(1) << piv[i];
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned b = 0; b < piv[i]; ++b) {
                if (!(pivmask & (u64(1) << b))) cells.push_back({i, b});
            }
        }
        const unsigned nf = static_cast<unsigned>(cells.size());
        for (u64 m = 0;; ++m) {
            for (unsigned i = 0; i < k; ++i) basis[i] = u64(1) << piv[i];
            for (unsigned c = 0; c < nf; ++c) {
                if (m & (u64(1) << c)) basis[cells[c].first] |= u64(1) << cells[c].second;
            }
            ++visited;
            FieldElem sum = 0, cur = 0;
            for (u64 g = 1; g < (u64(1) << k); ++g) {
                cur ^= basis[std::countr_zero(g)];
                sum ^= inverse_of(cur);
            }
            if (sum == 0) {
                std::vector<FieldElem> b = basis;
                nlohmann::ordered_json params{{"visited", visited}};
                res.cert = make_certificate(F, k, std::move(b), "exhaustive", std::move(params));
                res.status = ExhaustiveStatus::Found;
                res.enumerated = visited;
                return res;
            }
            if (m + 1 >= (u64(1) << nf)) break;
        }
        if (!next_combination()) break;
    }
    res.status = ExhaustiveStatus::SumFree;
    res.enumerated = visited;
    return res;
}

std::optional<Certificate> witness_even_direct(const FieldCtx& F, unsigned k) {
    const unsigned n = F.degree();
    if (n % 2 != 0 || k < 2 || k > n - 2) return std::nullopt;
    if (k % 2 == 0) {
        if (n % k == 0) return witness_subfield(F, k);
        if (k - 2 >= n / 2) return std::nullopt;  // lift hypothesis fails
        auto prev = witness_even_direct(F, k - 2);
        if (!prev) return std::nullopt;
        return witness_lift(F, *prev, 2);
    }
    if (k == 3) {
        // a cubic factor of X^n+1 with zero X-coefficient exists iff 3 | n or 7 | n
        if (n % 3 == 0) {
            BinPoly f = xn_plus_1(3);
            return witness_from_factor(F, f);
        }
        if (n % 7 == 0) {
            BinPoly f = BinPoly::from_bits(0b1101);  // X^3 + X^2 + 1
            return witness_from_factor(F, f);
        }
        return witness_solve_sweep(F, 3, 1u << 20);
    }
    if (k - 2 >= n / 2) return std::nullopt;
    auto prev = witness_even_direct(F, k - 2);
    if (!prev) return std::nullopt;
    return witness_lift(F, *prev, 2);
}

std::map<unsigned, EvenChainEntry> witness_even_chain(const FieldCtx& F,
                                                      bool attempt_direct_for_duals) {
    const unsigned n = F.degree();
    if (n % 2 != 0 || n < 4) throw std::invalid_argument("witness_even_chain: n must be even, >= 4");
    std::map<unsigned, EvenChainEntry> out;
    for (unsigned k = 2; k <= n - 2; ++k) {
        EvenChainEntry entry;
        entry.direct = witness_even_direct(F, k);
        if (entry.direct) {
            entry.justification = "direct";
        } else {
            entry.justification = "duality";
            auto dual_it = out.find(n - k);
            if (dual_it != out.end() && dual_it->second.direct) {
                entry.dual = dual_it->second.direct;
            } else {
                entry.dual = witness_even_direct(F, n - k);
            }
            if (!entry.dual) throw std::logic_error("witness_even_chain: no dual certificate");
            if (attempt_direct_for_duals) {
                if (auto direct = witness_search_random(F, k, 0, 200)) entry.direct = direct;
            }
        }
        out.emplace(k, std::move(entry));
    }
    return out;
}

} // namespace sumfree
