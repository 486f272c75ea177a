#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sumfree {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

inline void factorize_into(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_rho(n);
    factorize_into(d, out);
    factorize_into(n / d, out);
}

} // namespace detail

inline std::map<u64, int> factorize_u64(u64 n) {
    std::map<u64, int> out;
    detail::factorize_into(n, out);
    return out;
}

inline u64 euler_phi_u64(u64 n) {
    u64 phi = n;
    for (auto& [p, e] : factorize_u64(n)) phi -= phi / p;
    return phi;
}

inline std::vector<u64> divisors_of(u64 n) {
    std::vector<u64> divs{1};
    for (auto& [p, e] : factorize_u64(n)) {
        size_t count = divs.size();
        u64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Multiplicative order of 2 modulo odd d; by convention 1 for d = 1.
inline u64 order_of_2_mod(u64 d) {
    if (d == 1) return 1;
    if (d % 2 == 0) throw std::invalid_argument("order_of_2_mod: d must be odd");
    u64 acc = 2 % d, e = 1;
    while (acc != 1) {
        acc = acc * 2 % d;
        ++e;
    }
    return e;
}

// Multiplicative order of a in a group of exponent dividing m, given m's factorization.
template <typename PowFn>
inline u64 order_from_exponent(u64 m, PowFn pow_is_one) {
    u64 e = m;
    for (auto& [p, _] : factorize_u64(m)) {
        while (e % p == 0 && pow_is_one(e / p)) e /= p;
    }
    return e;
}

// Number of k-dimensional subspaces of F_2^n; nullopt when it exceeds `cap`.
inline std::optional<u128> gaussian_binomial_2(unsigned n, unsigned k, u128 cap) {
    if (k > n) return u128(0);
    // dp over the standard recurrence, saturating above cap.
    std::vector<u128> prev(k + 1, 0), cur(k + 1, 0);
    const u128 sat = ~u128(0);
    prev[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        cur[0] = 1;
        for (unsigned j = 1; j <= std::min(i, k); ++j) {
            u128 shifted = prev[j];
            if (j < 64 && shifted > (sat >> j)) shifted = sat;
            else if (j >= 64) shifted = prev[j] ? sat : 0;
            else shifted <<= j;
            u128 sum = prev[j - 1] + shifted;
            if (sum < prev[j - 1]) sum = sat;
            cur[j] = sum > cap + 1 ? cap + 1 : sum;
        }
        std::swap(prev, cur);
    }
    if (prev[k] > cap) return std::nullopt;
    return prev[k];
}

} // namespace sumfree
