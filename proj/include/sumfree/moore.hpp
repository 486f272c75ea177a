#pragma once

#include <span>
#include <vector>

#include "sumfree/gf2n.hpp"

namespace sumfree {

// An ordered GF(2)-independent basis spanning a k-dimensional subspace of GF(2^n).
struct Subspace {
    std::vector<FieldElem> basis;
    unsigned dim() const { return static_cast<unsigned>(basis.size()); }
};

bool independent(std::span<const FieldElem> v);

// All 2^k span elements in Gray-code order starting at 0.
std::vector<FieldElem> span_elements(std::span<const FieldElem> basis);

// Moore determinant: det of the k x k matrix with rows v_j^(2^i), i = 0..k-1.
// Computed by Gaussian elimination; for 2^k <= 2^20 the product over all nonzero
// GF(2)-combinations is evaluated as well and the two must agree.
FieldElem moore_det(const FieldCtx& F, std::span<const FieldElem> v);
// The product form alone, for cross-checking.
FieldElem moore_det_product(const FieldCtx& F, std::span<const FieldElem> v);

// Moore-type determinant with exponent rows 2^0..2^k minus 2^i (0 <= i <= k).
FieldElem delta_i(const FieldCtx& F, std::span<const FieldElem> v, unsigned i);

// On k-1 variables: exponent rows 2^0..2^k minus 2^1 and 2^i.
FieldElem delta_1i(const FieldCtx& F, std::span<const FieldElem> vprime, unsigned i);

// Coefficients b_0..b_k (b_k = 1) of the subspace polynomial L(X) = prod over the
// span of (X + u), built incrementally; b_i * Delta = Delta_i holds identically.
std::vector<FieldElem> subspace_poly(const FieldCtx& F, std::span<const FieldElem> basis);

// Sum of inverses over the nonzero span elements. Direct enumeration (batched
// inversion) when 2^k <= 2^20, and always the ratio Delta_1 / Delta^2; when both
// run they must agree.
FieldElem inverse_sum(const FieldCtx& F, std::span<const FieldElem> basis);

// Sum of inverses over the coset c + span; requires c outside the span so the coset
// avoids 0. Also evaluates the closed form prod(nonzero span)/prod(coset) and checks
// equality; the result is never zero.
FieldElem affine_sum_nonzero_check(const FieldCtx& F, std::span<const FieldElem> basis, FieldElem c);

// F_k(v) = Delta_1(v) / Delta(v); requires independent v.
FieldElem eval_Fk(const FieldCtx& F, std::span<const FieldElem> v);

// F_k as an affine 2-polynomial in its first argument, coefficients evaluated at
// v' = (v_2..v_k): F_k(x, v') = sum_i c[i] * x^(2^i) + affine.
struct FkFirstVarCoeffs {
    std::vector<FieldElem> c;  // c[i] multiplies x^(2^i), i = 0..k-1
    FieldElem affine = 0;
};
FkFirstVarCoeffs fk_first_var_coeffs(const FieldCtx& F, std::span<const FieldElem> vprime);

// Checks the determinant identity
//   Delta_1i(v') = Delta_1(v') Delta_{i-1}(v')^2 / Delta(v')^2 + Delta_i(v') Delta(v')^2
// at a point, 2 <= i <= k-1.
bool delta_1i_identity_check(const FieldCtx& F, std::span<const FieldElem> vprime, unsigned i);

// All x in GF(2^n) with F_k(x, v') = 0, by solving the affine 2-polynomial as an
// n x n GF(2)-linear system. Solutions may be linearly dependent on v'; callers
// filter. Sorted ascending.
std::vector<FieldElem> solve_first_var(const FieldCtx& F, std::span<const FieldElem> vprime);

} // namespace sumfree
