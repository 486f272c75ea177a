#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "sumfree/moore.hpp"

namespace sumfree {

// A verified claim that the inverse function sums to zero over the span of `basis`:
// a k-dimensional witness against kth order sum-freedom over GF(2^n).
struct Certificate {
    unsigned n = 0;
    BinPoly modulus;
    unsigned k = 0;
    std::vector<FieldElem> basis;
    std::string method;  // subfield | factor | lift | random_solve | solve_sweep |
                         // exhaustive | cor_c2 | cor_cc3
    nlohmann::ordered_json method_params = nlohmann::ordered_json::object();
    bool verified = false;
};

// Independence (Moore determinant nonzero) + zero sum by the Delta_1/Delta^2 ratio,
// re-checked by direct enumeration when 2^k <= 2^20.
bool verify_certificate(const FieldCtx& F, const Certificate& cert);
bool verify_certificate(const Certificate& cert);  // rebuilds the field from the header

// Basis of the subfield GF(2^k), k | n, k >= 2 (kernel of x -> x^(2^k) + x).
Certificate witness_subfield(const FieldCtx& F, unsigned k);

// From a factor f | X^n + 1 of degree k >= 2 with zero X-coefficient and constant
// term 1: basis x, x^2, ..., x^(2^(k-1)) where x = (g(sigma))(alpha), g = (X^n+1)/f,
// alpha a normal element.
Certificate witness_from_factor(const FieldCtx& F, const BinPoly& f);

// Skips the eligibility check on f's X-coefficient; used to demonstrate that the
// construction yields a nonzero sum exactly when that coefficient is 1.
std::vector<FieldElem> frobenius_orbit_basis(const FieldCtx& F, const BinPoly& f);

// Dimension lift: from an r-dimensional witness with r < n/l and a subfield degree
// l | n, l >= 2, produce an (l+r)-dimensional witness containing GF(2^l).
Certificate witness_lift(const FieldCtx& F, const Certificate& inner, unsigned l);

// Randomized search: draw independent v_2..v_k from a seeded generator, solve for
// the first variable, return the first verified certificate. Deterministic per seed.
// Budget counts tuple draws; empty result is not evidence of sum-freedom.
std::optional<Certificate> witness_search_random(const FieldCtx& F, unsigned k, u64 seed,
                                                 u64 budget);

// Same solve, but sweeping v' tuples in canonical ascending order instead of
// randomly; deterministic with no seed.
std::optional<Certificate> witness_solve_sweep(const FieldCtx& F, unsigned k, u64 budget);

// Sharded parallel driver over a fixed logical shard grid; the lowest shard with a
// hit wins, so results do not depend on the thread count.
std::optional<Certificate> witness_search_random_parallel(const FieldCtx& F, unsigned k,
                                                          u64 seed, u64 budget,
                                                          unsigned threads);

enum class ExhaustiveStatus { Found, SumFree, OverCap };

struct ExhaustiveResult {
    ExhaustiveStatus status = ExhaustiveStatus::OverCap;
    std::optional<Certificate> cert;
    u64 enumerated = 0;  // subspaces visited (complete count for SumFree)
};

// Canonical enumeration of all k-dimensional subspaces by reduced echelon bases.
// A SumFree outcome is a proof; OverCap distinguishes "unknown" from "none".
ExhaustiveResult witness_search_exhaustive(const FieldCtx& F, unsigned k,
                                           u64 cap = u64(1) << 28);

struct EvenChainEntry {
    std::optional<Certificate> direct;
    // For k past the reach of the chain, the complementary-dimension certificate
    // plus the k <-> n-k equivalence justifies the claim.
    std::optional<Certificate> dual;
    std::string justification;  // "direct" or "duality"
};

// For even n: certificates for every 2 <= k <= n-2. Even k via subfield/lift chains
// from GF(4); odd k via a 3-dimensional base lifted by 2 repeatedly. Dimensions
// beyond n/2+1 carry the dual certificate; a direct one is attempted on request.
std::map<unsigned, EvenChainEntry> witness_even_chain(const FieldCtx& F,
                                                      bool attempt_direct_for_duals = true);

// The single-dimension building block used by witness_even_chain and the classifier.
std::optional<Certificate> witness_even_direct(const FieldCtx& F, unsigned k);

} // namespace sumfree
