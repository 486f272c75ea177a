#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sumfree/binpoly.hpp"
#include "sumfree/witness.hpp"

namespace sumfree {

// Per-index statistics of the factorization of X^t - 1: for odd d, the order of 2
// mod d, the number of irreducible factors of the index-d cyclotomic polynomial,
// and how many of them have zero trace (vanishing second-highest coefficient).
struct CyclotomicRow {
    unsigned d = 0;
    unsigned o = 0;    // order of 2 mod d
    unsigned cnt = 0;  // phi(d) / o
    unsigned Nd = 0;   // zero-trace factors of index d
};

// Rows for all odd d <= d_max. N_d is computed two independent ways (factor
// inspection vs. counting order-d field elements of zero absolute trace) and the
// routes must agree.
std::vector<CyclotomicRow> table1(unsigned d_max);

// One realization of an attainable degree k: the multiset of irreducible factors
// (mu_d zero-trace and nu_d nonzero-trace ones per index d) whose product has a
// vanishing X^(k-1) coefficient; its reciprocal then has no X term.
struct KnRealization {
    unsigned k = 0;
    std::vector<std::tuple<unsigned, unsigned, unsigned>> mu_nu;  // (d, mu_d, nu_d)
    BinPoly factor;  // product, zero X^(k-1) coefficient
    BinPoly shaped;  // reciprocal, zero X coefficient; divides X^n + 1
};

struct KnReport {
    unsigned n = 0;
    std::set<unsigned> kset;
    std::vector<KnRealization> realizations;  // one per k, ascending
};

// All k >= 2 such that X^n - 1 has a degree-k factor whose reciprocal has no X term,
// by dynamic programming over the factor catalog, each with a verified realization.
KnReport compute_Kn(unsigned n);

// Selection of cyclotomic polynomials by a binary hyper-matrix over the divisor
// lattice of n; the parity condition on the squarefree corner guarantees the
// product has no X term.
struct C2Triple {
    std::vector<unsigned> shape;      // alpha_i + 1 per prime
    std::vector<unsigned> primes;     // p_1 < p_2 < ...
    std::vector<uint8_t> eps;         // mixed-radix flattened, last index fastest
    std::vector<unsigned> divisors;   // selected divisors, ascending
    unsigned k = 0;                   // sum of cyclotomic degrees
};
std::vector<C2Triple> cor_c2_enumerate(unsigned n);

// Substituted divisors: for s | n, s >= 2 and R | X^(n/s) + 1, R(X^s) divides
// X^n + 1 and has no X term, witnessing degree s * deg R.
struct Cc3Entry {
    unsigned s = 0;
    BinPoly R;
    unsigned k = 0;
};
std::vector<Cc3Entry> cor_cc3_enumerate(unsigned n);

// Threshold predicates from the point-counting bound on the zero set of F_k.
// `small_k`: applies at k (k >= 3, n above the growth threshold).
// `large_k`: applies at n-k (n-k >= 3 with n below the complementary threshold),
// which settles k as well by the k <-> n-k equivalence.
// Comparisons use interval arithmetic around log2(1+sqrt(21)) with width << 1e-9;
// a predicate fires only when the whole interval satisfies the inequality.
struct LangWeilApplicability {
    bool small_k = false;
    bool large_k = false;
};
LangWeilApplicability lang_weil_applicable(unsigned n, unsigned k);

enum class Verdict { NotSumFree, SumFree, Unknown };

std::string verdict_name(Verdict v);

struct StatusVerdict {
    unsigned n = 0, k = 0;
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> criteria_fired;
    std::string reason;                        // criterion that decided the verdict
    std::optional<Certificate> certificate;    // for the stated k when constructible
    std::optional<Certificate> dual_certificate;  // for n-k when duality justifies
};

// Applies the known criteria in order (bijectivity, parity of n at k = 2 and n-2,
// the even-n range, the factor catalog with duality, gcd subfield chains, k in
// {3, n-3}, the threshold predicates) and falls back to a seeded random search.
StatusVerdict classify(unsigned n, unsigned k, u64 search_budget, u64 seed = 0);

// Certificates with catalog provenance.
Certificate witness_from_c2(const FieldCtx& F, const C2Triple& triple);
Certificate witness_from_cc3(const FieldCtx& F, const Cc3Entry& entry);

} // namespace sumfree
