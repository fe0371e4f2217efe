#pragma once

// Exact integer matrix helpers: rank, integer kernel lattice basis, and row
// Hermite normal form. All arithmetic is in 64-bit integers with gcd-style
// (Euclidean) reduction, which keeps intermediate entries small for the
// incidence-like matrices used here.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "revmc/errors.hpp"

namespace revmc {

using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>; // row-major, rows of equal length

inline int num_rows(const IntMat& m) { return static_cast<int>(m.size()); }
inline int num_cols(const IntMat& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

inline IntVec mat_vec(const IntMat& a, const IntVec& x) {
    if (num_cols(a) != static_cast<int>(x.size()))
        throw DimensionMismatchError("mat_vec: dimension mismatch");
    IntVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

inline bool is_zero(const IntVec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

struct EchelonResult {
    int rank = 0;
    // Rows form a lattice basis of the integer kernel {z : M z = 0}.
    IntMat kernel;
};

// Column-reduce M by unimodular column operations, mirroring them on an
// identity matrix U. Columns of U over the zeroed-out columns of M span the
// integer kernel of M as a lattice.
inline EchelonResult integer_echelon(const IntMat& m_in) {
    const int r = num_rows(m_in);
    const int n = num_cols(m_in);
    // column-major working copies
    std::vector<IntVec> mc(n, IntVec(r, 0));
    std::vector<IntVec> uc(n, IntVec(n, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) mc[j][i] = m_in[i][j];
    for (int j = 0; j < n; ++j) uc[j][j] = 1;

    auto axpy = [&](int dst, int src, Int q) {
        for (int i = 0; i < r; ++i) mc[dst][i] -= q * mc[src][i];
        for (int i = 0; i < n; ++i) uc[dst][i] -= q * uc[src][i];
    };

    int c = 0;
    for (int i = 0; i < r && c < n; ++i) {
        for (;;) {
            int p = -1;
            for (int j = c; j < n; ++j)
                if (mc[j][i] != 0 && (p < 0 || std::llabs(mc[j][i]) < std::llabs(mc[p][i]))) p = j;
            if (p < 0) break;
            if (p != c) { std::swap(mc[p], mc[c]); std::swap(uc[p], uc[c]); }
            bool clean = true;
            for (int j = c + 1; j < n; ++j) {
                if (mc[j][i] == 0) continue;
                axpy(j, c, mc[j][i] / mc[c][i]);
                if (mc[j][i] != 0) clean = false;
            }
            if (clean) break;
        }
        if (mc[c][i] != 0) {
            if (mc[c][i] < 0) {
                for (int k = 0; k < r; ++k) mc[c][k] = -mc[c][k];
                for (int k = 0; k < n; ++k) uc[c][k] = -uc[c][k];
            }
            ++c;
        }
    }

    EchelonResult res;
    res.rank = c;
    for (int j = c; j < n; ++j) res.kernel.push_back(uc[j]);
    return res;
}

inline int integer_rank(const IntMat& m) { return integer_echelon(m).rank; }

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot). Zero rows are dropped. The result is a canonical
// basis of the row lattice, so two bases span the same lattice iff their
// HNFs are identical.
inline IntMat hermite_normal_form(IntMat rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& v) { return is_zero(v); }),
               rows.end());
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int pr = 0;
    for (int col = 0; col < n && pr < static_cast<int>(rows.size()); ++col) {
        for (;;) {
            int p = -1;
            for (int i = pr; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 &&
                    (p < 0 || std::llabs(rows[i][col]) < std::llabs(rows[p][col])))
                    p = i;
            if (p < 0) break;
            std::swap(rows[p], rows[pr]);
            bool clean = true;
            for (int i = pr + 1; i < static_cast<int>(rows.size()); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[pr][col];
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[pr][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (pr < static_cast<int>(rows.size()) && rows[pr][col] != 0) {
            if (rows[pr][col] < 0)
                for (int j = 0; j < n; ++j) rows[pr][j] = -rows[pr][j];
            for (int i = 0; i < pr; ++i) {
                Int q = rows[i][col] / rows[pr][col];
                if (rows[i][col] % rows[pr][col] < 0) --q; // floor division
                if (q != 0)
                    for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[pr][j];
            }
            ++pr;
        }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& v) { return is_zero(v); }),
               rows.end());
    return rows;
}

inline bool same_lattice(const IntMat& a, const IntMat& b) {
    return hermite_normal_form(a) == hermite_normal_form(b);
}

} // namespace revmc
