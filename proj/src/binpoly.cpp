#include "sumfree/binpoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "sumfree/gf2n.hpp"

namespace sumfree {

void BinPoly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly BinPoly::monomial(unsigned e) {
    BinPoly p;
    p.set_coeff(e, true);
    return p;
}

BinPoly BinPoly::from_bits(u64 bits) {
    BinPoly p;
    if (bits) p.words_.push_back(bits);
    return p;
}

int BinPoly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool BinPoly::coeff(unsigned i) const {
    size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1;
}

void BinPoly::set_coeff(unsigned i, bool v) {
    size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v)
        words_[w] |= u64(1) << (i % 64);
    else
        words_[w] &= ~(u64(1) << (i % 64));
    trim();
}

BinPoly BinPoly::shifted(unsigned s) const {
    if (is_zero() || s == 0) return *this;
    BinPoly r;
    unsigned wshift = s / 64, bshift = s % 64;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] |= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

BinPoly BinPoly::reversed() const {
    int d = degree();
    if (d <= 0) return *this;
    BinPoly r;
    for (int i = 0; i <= d; ++i) {
        if (coeff(i)) r.set_coeff(d - i, true);
    }
    return r;
}

BinPoly operator+(const BinPoly& a, const BinPoly& b) {
    BinPoly r = a;
    if (b.words_.size() > r.words_.size()) r.words_.resize(b.words_.size(), 0);
    for (size_t i = 0; i < b.words_.size(); ++i) r.words_[i] ^= b.words_[i];
    r.trim();
    return r;
}

BinPoly operator*(const BinPoly& a, const BinPoly& b) {
    if (a.is_zero() || b.is_zero()) return BinPoly();
    BinPoly r;
    r.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (size_t i = 0; i < b.words_.size(); ++i) {
        u64 w = b.words_[i];
        while (w) {
            unsigned bit = std::countr_zero(w);
            w &= w - 1;
            unsigned s = static_cast<unsigned>(64 * i + bit);
            unsigned wshift = s / 64, bshift = s % 64;
            for (size_t j = 0; j < a.words_.size(); ++j) {
                r.words_[j + wshift] ^= a.words_[j] << bshift;
                if (bshift) r.words_[j + wshift + 1] ^= a.words_[j] >> (64 - bshift);
            }
        }
    }
    r.trim();
    return r;
}

bool operator<(const BinPoly& a, const BinPoly& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
    for (size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
}

std::pair<BinPoly, BinPoly> BinPoly::divrem(const BinPoly& a, const BinPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("BinPoly: division by the zero polynomial");
    BinPoly q, r = a;
    int db = b.degree();
    while (r.degree() >= db) {
        unsigned s = static_cast<unsigned>(r.degree() - db);
        r = r + b.shifted(s);
        q.set_coeff(s, true);
    }
    return {q, r};
}

std::string BinPoly::to_hex() const {
    if (words_.empty()) return "0";
    std::ostringstream os;
    os << std::hex;
    bool first = true;
    for (size_t i = words_.size(); i-- > 0;) {
        if (first) {
            os << words_[i];
            first = false;
        } else {
            os.width(16);
            os.fill('0');
            os << words_[i];
        }
    }
    return os.str();
}

BinPoly BinPoly::from_hex(const std::string& hex) {
    BinPoly p;
    unsigned bit = 0;
    for (size_t i = hex.size(); i-- > 0;) {
        char c = hex[i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument("BinPoly: invalid hex digit");
        for (int j = 0; j < 4; ++j) {
            if (v & (1 << j)) p.set_coeff(bit + j, true);
        }
        bit += 4;
    }
    return p;
}

std::string BinPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<unsigned>(i))) continue;
        if (!first) os << "+";
        if (i == 0) os << "1";
        else if (i == 1) os << "X";
        else os << "X^" << i;
        first = false;
    }
    return os.str();
}

BinPoly poly_gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool poly_divides(const BinPoly& d, const BinPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

BinPoly poly_mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& mod) {
    return (a * b) % mod;
}

BinPoly poly_powmod(const BinPoly& base, u64 e, const BinPoly& mod) {
    BinPoly r = BinPoly::one() % mod;
    BinPoly b = base % mod;
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, mod);
        b = poly_mulmod(b, b, mod);
        e >>= 1;
    }
    return r;
}

BinPoly poly_frob_power(unsigned r, const BinPoly& mod) {
    BinPoly x = BinPoly::x() % mod;
    for (unsigned i = 0; i < r; ++i) x = poly_mulmod(x, x, mod);
    return x;
}

BinPoly poly_substitute_xs(const BinPoly& p, unsigned s) {
    BinPoly r;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(static_cast<unsigned>(i))) r.set_coeff(static_cast<unsigned>(i) * s, true);
    }
    return r;
}

BinPoly xn_plus_1(unsigned n) {
    BinPoly p = BinPoly::monomial(n);
    p.set_coeff(0, true);
    return p;
}

bool is_irreducible(const BinPoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (!f.coeff(0)) return false;  // divisible by X
    // Rabin's test: X^(2^d) = X mod f, and gcd(X^(2^(d/p)) + X, f) = 1 for primes p | d.
    BinPoly xd = poly_frob_power(static_cast<unsigned>(d), f);
    if (xd != BinPoly::x() % f) return false;
    for (auto& [p, e] : factorize_u64(static_cast<u64>(d))) {
        BinPoly h = poly_frob_power(static_cast<unsigned>(d / p), f) + BinPoly::x();
        if (poly_gcd(h, f).degree() > 0) return false;
    }
    return true;
}

BinPoly cyclotomic(unsigned d) {
    if (d == 0 || d % 2 == 0) throw std::invalid_argument("cyclotomic: index must be odd");
    BinPoly num = xn_plus_1(d);
    for (u64 dd : divisors_of(d)) {
        if (dd == d) continue;
        num = num / cyclotomic(static_cast<unsigned>(dd));
    }
    return num;
}

std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned d) {
    if (d == 0 || d % 2 == 0) throw std::invalid_argument("cyclotomic_cosets: d must be odd");
    if (d == 1) return {{0}};
    std::vector<bool> seen(d, false);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned j = 1; j < d; ++j) {
        if (seen[j] || std::gcd<u64, u64>(j, d) != 1) continue;
        std::vector<unsigned> coset;
        unsigned cur = j;
        do {
            coset.push_back(cur);
            seen[cur] = true;
            cur = static_cast<unsigned>((u64)cur * 2 % d);
        } while (cur != j);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace {

// Irreducible factors of the cyclotomic polynomial of odd index d: minimal polynomials
// of the primitive d-th roots of unity, one per 2-cyclotomic coset, computed over
// GF(2^l) with l the order of 2 mod d.
std::vector<BinPoly> cyclotomic_factors(unsigned d) {
    if (d == 1) return {xn_plus_1(1)};
    unsigned l = static_cast<unsigned>(order_of_2_mod(d));
    FieldCtx F(std::max(2u, l));
    // An element of multiplicative order exactly d: cand^((2^l-1)/d) for some cand.
    u64 g = F.group_order();
    FieldElem zeta = 0;
    for (FieldElem cand = 2;; ++cand) {
        if (cand > F.group_order()) throw std::logic_error("cyclotomic_factors: no element of order d");
        FieldElem z = F.pow(cand, g / d);
        bool ok = z != 1;
        if (ok) {
            for (auto& [p, e] : factorize_u64(d)) {
                if (F.pow(z, d / p) == 1) { ok = false; break; }
            }
        }
        if (ok) { zeta = z; break; }
    }
    std::vector<BinPoly> out;
    for (auto& coset : cyclotomic_cosets(d)) {
        // prod over j in coset of (X + zeta^j), coefficients in GF(2^l)
        std::vector<FieldElem> poly{1};  // leading-first not needed; poly[i] = coeff of X^i
        for (unsigned j : coset) {
            FieldElem root = F.pow(zeta, j);
            std::vector<FieldElem> next(poly.size() + 1, 0);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] ^= poly[i];
                next[i] ^= F.mul(poly[i], root);
            }
            poly = std::move(next);
        }
        BinPoly f;
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] != 0 && poly[i] != 1)
                throw std::logic_error("cyclotomic_factors: coefficient outside GF(2)");
            if (poly[i] == 1) f.set_coeff(static_cast<unsigned>(i), true);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

XnFactorization factorize_xn_minus_1(unsigned n) {
    if (n < 1) throw std::invalid_argument("factorize_xn_minus_1: n must be >= 1");
    XnFactorization fz;
    fz.n = n;
    fz.t = n;
    fz.e = 0;
    while (fz.t % 2 == 0) {
        fz.t /= 2;
        ++fz.e;
    }
    unsigned mult = 1u << fz.e;
    for (u64 d : divisors_of(fz.t)) {
        for (BinPoly& f : cyclotomic_factors(static_cast<unsigned>(d))) {
            XnFactor xf;
            xf.d = static_cast<unsigned>(d);
            xf.mult = mult;
            xf.zero_trace = !f.coeff(static_cast<unsigned>(f.degree() - 1));
            xf.poly = std::move(f);
            fz.factors.push_back(std::move(xf));
        }
    }
    BinPoly check = BinPoly::one();
    for (auto& xf : fz.factors) {
        for (unsigned i = 0; i < xf.mult; ++i) check = check * xf.poly;
    }
    if (check != xn_plus_1(n)) throw std::logic_error("factorize_xn_minus_1: product check failed");
    return fz;
}

u64 poly_order(const BinPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("poly_order: degree must be >= 1");
    if (!p.coeff(0)) throw std::invalid_argument("poly_order: constant term must be 1");
    // Distinct-degree splitting of the radical: gcd(w, X^(2^r) + X) collects the
    // distinct irreducible factors of degree r once lower degrees are stripped.
    BinPoly w = p;
    u64 e0 = 1;
    BinPoly s = BinPoly::x() % w;
    for (unsigned r = 1; w.degree() > 0 && static_cast<int>(r) <= p.degree(); ++r) {
        s = poly_mulmod(s, s, w);
        BinPoly g = poly_gcd(s + (BinPoly::x() % w), w);
        if (g.degree() > 0) {
            if (r > 63) throw std::invalid_argument("poly_order: irreducible factor degree > 63 unsupported");
            u64 m = (u64(1) << r) - 1;
            u64 ord = order_from_exponent(m, [&](u64 f) { return poly_powmod(BinPoly::x(), f, g).is_one(); });
            u128 l = u128(e0) / std::gcd<u64, u64>(e0, ord) * ord;
            if (l > (u128(1) << 62)) throw std::overflow_error("poly_order: order exceeds 2^62");
            e0 = static_cast<u64>(l);
            // strip every copy of g's primes from w
            while (true) {
                BinPoly c = poly_gcd(w, g);
                if (c.degree() <= 0) break;
                w = w / c;
            }
            if (w.degree() > 0) s = s % w;
        }
    }
    // Account for repeated factors: square X^e0 + 1 mod p until it vanishes.
    BinPoly g = poly_powmod(BinPoly::x(), e0, p) + (BinPoly::one() % p);
    u64 ord = e0;
    while (!g.is_zero()) {
        g = poly_mulmod(g, g, p);
        if (ord > (u64(1) << 62)) throw std::overflow_error("poly_order: order exceeds 2^62");
        ord <<= 1;
    }
    return ord;
}

} // namespace sumfree
