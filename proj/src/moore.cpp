#include "sumfree/moore.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sumfree/f2linalg.hpp"

namespace sumfree {

namespace {

constexpr u64 kEnumLimit = u64(1) << 20;

// Determinant over GF(2^n) of the k x k matrix M[i][j] = v_j^(2^rows[i]).
FieldElem moore_minor(const FieldCtx& F, std::span<const FieldElem> v,
                      std::span<const unsigned> rows) {
    const size_t k = v.size();
    if (rows.size() != k) throw std::invalid_argument("moore_minor: row/column mismatch");
    std::vector<std::vector<FieldElem>> m(k, std::vector<FieldElem>(k));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = F.frobenius(v[j], rows[i]);
    }
    FieldElem det = 1;
    for (size_t col = 0; col < k; ++col) {
        size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != col) std::swap(m[pivot], m[col]);  // char 2: swaps cost no sign
        det = F.mul(det, m[col][col]);
        FieldElem pinv = F.inv(m[col][col]);
        for (size_t r = col + 1; r < k; ++r) {
            if (m[r][col] == 0) continue;
            FieldElem factor = F.mul(m[r][col], pinv);
            for (size_t c = col; c < k; ++c) m[r][c] ^= F.mul(factor, m[col][c]);
        }
    }
    return det;
}

std::vector<unsigned> rows_without(unsigned top, unsigned skip) {
    std::vector<unsigned> rows;
    for (unsigned i = 0; i <= top; ++i) {
        if (i != skip) rows.push_back(i);
    }
    return rows;
}

std::vector<unsigned> rows_without2(unsigned top, unsigned skip1, unsigned skip2) {
    std::vector<unsigned> rows;
    for (unsigned i = 0; i <= top; ++i) {
        if (i != skip1 && i != skip2) rows.push_back(i);
    }
    return rows;
}

// Sum of inverses over the nonzero span elements via one batched inversion.
FieldElem enumerate_inverse_sum(const FieldCtx& F, std::span<const FieldElem> basis) {
    std::vector<FieldElem> elems = span_elements(basis);
    elems.erase(elems.begin());  // drop 0
    std::vector<FieldElem> prefix(elems.size());
    FieldElem acc = 1;
    for (size_t i = 0; i < elems.size(); ++i) {
        prefix[i] = acc;
        acc = F.mul(acc, elems[i]);
    }
    FieldElem inv_all = F.inv(acc);
    FieldElem sum = 0;
    for (size_t i = elems.size(); i-- > 0;) {
        sum ^= F.mul(inv_all, prefix[i]);
        inv_all = F.mul(inv_all, elems[i]);
    }
    return sum;
}

} // namespace

bool independent(std::span<const FieldElem> v) {
    std::vector<u64> rows(v.begin(), v.end());
    return f2_rank(rows) == v.size();
}

std::vector<FieldElem> span_elements(std::span<const FieldElem> basis) {
    const size_t k = basis.size();
    std::vector<FieldElem> out;
    out.reserve(size_t(1) << k);
    out.push_back(0);
    FieldElem cur = 0;
    for (u64 m = 1; m < (u64(1) << k); ++m) {
        cur ^= basis[std::countr_zero(m)];
        out.push_back(cur);
    }
    return out;
}

FieldElem moore_det_product(const FieldCtx& F, std::span<const FieldElem> v) {
    FieldElem prod = 1;
    FieldElem cur = 0;
    for (u64 m = 1; m < (u64(1) << v.size()); ++m) {
        cur ^= v[std::countr_zero(m)];
        prod = F.mul(prod, cur);
    }
    return prod;
}

FieldElem moore_det(const FieldCtx& F, std::span<const FieldElem> v) {
    const unsigned k = static_cast<unsigned>(v.size());
    if (k < 1 || k > F.degree()) throw std::invalid_argument("moore_det: need 1 <= k <= n");
    std::vector<unsigned> rows(k);
    for (unsigned i = 0; i < k; ++i) rows[i] = i;
    FieldElem det = moore_minor(F, v, rows);
    if ((u64(1) << k) <= kEnumLimit) {
        if (moore_det_product(F, v) != det)
            throw std::logic_error("moore_det: product and elimination routes disagree");
    }
    return det;
}

FieldElem delta_i(const FieldCtx& F, std::span<const FieldElem> v, unsigned i) {
    const unsigned k = static_cast<unsigned>(v.size());
    if (i > k) throw std::invalid_argument("delta_i: need 0 <= i <= k");
    return moore_minor(F, v, rows_without(k, i));
}

FieldElem delta_1i(const FieldCtx& F, std::span<const FieldElem> vprime, unsigned i) {
    const unsigned k = static_cast<unsigned>(vprime.size()) + 1;
    if (i < 2 || i > k) throw std::invalid_argument("delta_1i: need 2 <= i <= k");
    return moore_minor(F, vprime, rows_without2(k, 1, i));
}

std::vector<FieldElem> subspace_poly(const FieldCtx& F, std::span<const FieldElem> basis) {
    // L_0(X) = X; L_j(X) = L_{j-1}(X)^2 + L_{j-1}(v_j) L_{j-1}(X).
    std::vector<FieldElem> b{1};  // coefficients of X^(2^i), low to high
    for (FieldElem v : basis) {
        FieldElem lv = 0;
        FieldElem p = v;
        for (FieldElem coeff : b) {
            lv ^= F.mul(coeff, p);
            p = F.mul(p, p);
        }
        if (lv == 0) throw std::invalid_argument("subspace_poly: basis is dependent");
        std::vector<FieldElem> nb(b.size() + 1, 0);
        for (size_t i = 0; i < b.size(); ++i) {
            nb[i + 1] ^= F.mul(b[i], b[i]);
            nb[i] ^= F.mul(lv, b[i]);
        }
        b = std::move(nb);
    }
    return b;
}

FieldElem inverse_sum(const FieldCtx& F, std::span<const FieldElem> basis) {
    if (!independent(basis)) throw std::invalid_argument("inverse_sum: basis is dependent");
    FieldElem d = moore_det(F, basis);
    FieldElem d1 = delta_i(F, basis, 1);
    FieldElem by_formula = F.mul(d1, F.inv(F.mul(d, d)));
    if ((u64(1) << basis.size()) <= kEnumLimit) {
        FieldElem by_enum = enumerate_inverse_sum(F, basis);
        if (by_enum != by_formula)
            throw std::logic_error("inverse_sum: enumeration and determinant routes disagree");
    }
    return by_formula;
}

FieldElem affine_sum_nonzero_check(const FieldCtx& F, std::span<const FieldElem> basis,
                                   FieldElem c) {
    if (!independent(basis)) throw std::invalid_argument("affine_sum: basis is dependent");
    std::vector<FieldElem> ext(basis.begin(), basis.end());
    ext.push_back(c);
    if (independent(ext) == false)
        throw std::invalid_argument("affine_sum: coset representative lies in the span");
    std::vector<FieldElem> elems = span_elements(basis);
    FieldElem sum = 0, prod_span = 1, prod_coset = 1;
    for (FieldElem u : elems) {
        if (u != 0) prod_span = F.mul(prod_span, u);
        FieldElem a = u ^ c;
        sum ^= F.inv(a);
        prod_coset = F.mul(prod_coset, a);
    }
    FieldElem closed = F.mul(prod_span, F.inv(prod_coset));
    if (closed != sum) throw std::logic_error("affine_sum: closed form disagrees with enumeration");
    if (sum == 0) throw std::logic_error("affine_sum: zero sum over a coset avoiding 0");
    return sum;
}

FieldElem eval_Fk(const FieldCtx& F, std::span<const FieldElem> v) {
    FieldElem d = moore_det(F, v);
    if (d == 0) throw std::invalid_argument("eval_Fk: arguments are dependent");
    return F.mul(delta_i(F, v, 1), F.inv(d));
}

FkFirstVarCoeffs fk_first_var_coeffs(const FieldCtx& F, std::span<const FieldElem> vprime) {
    const unsigned k = static_cast<unsigned>(vprime.size()) + 1;
    FieldElem d = moore_det(F, vprime);
    if (d == 0) throw std::invalid_argument("fk_first_var_coeffs: v' is dependent");
    FieldElem dinv = F.inv(d);
    FieldElem fk1 = F.mul(delta_i(F, vprime, 1), dinv);  // F_{k-1}(v')
    FkFirstVarCoeffs out;
    out.c.assign(k, 0);
    out.c[k - 1] = fk1;
    for (unsigned i = 0; i + 2 <= k; ++i) {
        out.c[i] = F.mul(fk1, F.mul(delta_i(F, vprime, i), dinv));
    }
    out.affine = F.mul(d, d);
    return out;
}

bool delta_1i_identity_check(const FieldCtx& F, std::span<const FieldElem> vprime, unsigned i) {
    const unsigned k = static_cast<unsigned>(vprime.size()) + 1;
    if (i < 2 || i > k - 1) throw std::invalid_argument("delta_1i_identity_check: need 2 <= i <= k-1");
    FieldElem d = moore_det(F, vprime);
    if (d == 0) throw std::invalid_argument("delta_1i_identity_check: v' is dependent");
    FieldElem lhs = delta_1i(F, vprime, i);
    FieldElem d1 = delta_i(F, vprime, 1);
    FieldElem dim1 = delta_i(F, vprime, i - 1);
    FieldElem di = delta_i(F, vprime, i);
    FieldElem d2 = F.mul(d, d);
    FieldElem rhs = F.mul(F.mul(d1, F.mul(dim1, dim1)), F.inv(d2)) ^ F.mul(di, d2);
    return lhs == rhs;
}

std::vector<FieldElem> solve_first_var(const FieldCtx& F, std::span<const FieldElem> vprime) {
    FkFirstVarCoeffs fc = fk_first_var_coeffs(F, vprime);
    const unsigned n = F.degree();
    std::vector<u64> cols(n);
    for (unsigned j = 0; j < n; ++j) {
        FieldElem e = u64(1) << j;
        FieldElem img = 0;
        FieldElem p = e;
        for (FieldElem coeff : fc.c) {
            img ^= F.mul(coeff, p);
            p = F.mul(p, p);
        }
        cols[j] = img;
    }
    F2Solution sol = f2_solve(cols, fc.affine, n);
    std::vector<FieldElem> out;
    if (!sol.solvable) return out;
    const size_t nk = sol.kernel.size();
    out.reserve(size_t(1) << nk);
    for (u64 m = 0; m < (u64(1) << nk); ++m) {
        FieldElem x = sol.particular;
        for (size_t j = 0; j < nk; ++j) {
            if (m & (u64(1) << j)) x ^= sol.kernel[j];
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sumfree
