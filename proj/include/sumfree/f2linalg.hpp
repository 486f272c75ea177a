#pragma once

#include <cstdint>
#include <vector>

#include "sumfree/intmath.hpp"

namespace sumfree {

// Dense linear algebra over GF(2) with rows packed into single words (n <= 64).

inline unsigned f2_rank(std::vector<u64> rows) {
    unsigned rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        u64 mask = u64(1) << bit;
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        }
        ++rank;
        if (rank == rows.size()) break;
    }
    return rank;
}

struct F2Solution {
    bool solvable = false;
    u64 particular = 0;
    std::vector<u64> kernel;  // basis of the homogeneous solution space
};

// Solve M x = rhs where column j of M is cols[j] (an n-bit vector), x has cols.size() bits.
// rhs rows beyond n must be zero-consistent; callers may pass more rows than columns by
// stacking several maps, in which case `rows` carries each equation's coefficient word.
inline F2Solution f2_solve(const std::vector<u64>& cols, u64 rhs, unsigned nrows) {
    const unsigned ncols = static_cast<unsigned>(cols.size());
    // Row i: bit j = bit i of cols[j]; augmented with rhs bit i.
    std::vector<u64> row(nrows, 0);
    std::vector<unsigned> rhsbit(nrows, 0);
    for (unsigned i = 0; i < nrows; ++i) {
        u64 r = 0;
        for (unsigned j = 0; j < ncols; ++j) r |= ((cols[j] >> i) & 1) << j;
        row[i] = r;
        rhsbit[i] = (rhs >> i) & 1;
    }
    std::vector<int> pivot_row(ncols, -1);
    unsigned rank = 0;
    for (unsigned j = 0; j < ncols && rank < nrows; ++j) {
        u64 mask = u64(1) << j;
        unsigned p = rank;
        while (p < nrows && !(row[p] & mask)) ++p;
        if (p == nrows) continue;
        std::swap(row[rank], row[p]);
        std::swap(rhsbit[rank], rhsbit[p]);
        for (unsigned r = 0; r < nrows; ++r) {
            if (r != rank && (row[r] & mask)) {
                row[r] ^= row[rank];
                rhsbit[r] ^= rhsbit[rank];
            }
        }
        pivot_row[j] = static_cast<int>(rank);
        ++rank;
    }
    F2Solution sol;
    for (unsigned r = rank; r < nrows; ++r) {
        if (rhsbit[r]) return sol;  // inconsistent
    }
    sol.solvable = true;
    for (unsigned j = 0; j < ncols; ++j) {
        if (pivot_row[j] >= 0 && rhsbit[pivot_row[j]]) sol.particular |= u64(1) << j;
    }
    for (unsigned j = 0; j < ncols; ++j) {
        if (pivot_row[j] >= 0) continue;  // j is free
        u64 v = u64(1) << j;
        for (unsigned i = 0; i < ncols; ++i) {
            if (pivot_row[i] >= 0 && (row[pivot_row[i]] & (u64(1) << j))) v |= u64(1) << i;
        }
        sol.kernel.push_back(v);
    }
    return sol;
}

// Stacked variant: several n-bit linear maps must vanish/equal targets simultaneously.
// `maps` holds for each constraint block the n column images; rhs per block.
inline F2Solution f2_solve_stacked(const std::vector<std::vector<u64>>& maps,
                                   const std::vector<u64>& rhs, unsigned n) {
    std::vector<u64> row;
    std::vector<unsigned> rbit;
    for (size_t b = 0; b < maps.size(); ++b) {
        for (unsigned i = 0; i < n; ++i) {
            u64 r = 0;
            for (unsigned j = 0; j < n; ++j) r |= ((maps[b][j] >> i) & 1) << j;
            row.push_back(r);
            rbit.push_back((rhs[b] >> i) & 1);
        }
    }
    const unsigned nrows = static_cast<unsigned>(row.size());
    std::vector<int> pivot_row(n, -1);
    unsigned rank = 0;
    for (unsigned j = 0; j < n && rank < nrows; ++j) {
        u64 mask = u64(1) << j;
        unsigned p = rank;
        while (p < nrows && !(row[p] & mask)) ++p;
        if (p == nrows) continue;
        std::swap(row[rank], row[p]);
        std::swap(rbit[rank], rbit[p]);
        for (unsigned r = 0; r < nrows; ++r) {
            if (r != rank && (row[r] & mask)) {
                row[r] ^= row[rank];
                rbit[r] ^= rbit[rank];
            }
        }
        pivot_row[j] = static_cast<int>(rank);
        ++rank;
    }
    F2Solution sol;
    for (unsigned r = rank; r < nrows; ++r) {
        if (rbit[r]) return sol;
    }
    sol.solvable = true;
    for (unsigned j = 0; j < n; ++j) {
        if (pivot_row[j] >= 0 && rbit[pivot_row[j]]) sol.particular |= u64(1) << j;
    }
    for (unsigned j = 0; j < n; ++j) {
        if (pivot_row[j] >= 0) continue;
        u64 v = u64(1) << j;
        for (unsigned i = 0; i < n; ++i) {
            if (pivot_row[i] >= 0 && (row[pivot_row[i]] & (u64(1) << j))) v |= u64(1) << i;
        }
        sol.kernel.push_back(v);
    }
    return sol;
}

inline std::vector<u64> f2_kernel(const std::vector<u64>& cols, unsigned nrows) {
    return f2_solve(cols, 0, nrows).kernel;
}

} // namespace sumfree
