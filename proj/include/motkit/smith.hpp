#pragma once

// Smith normal form over Z, used to read off the cyclic decomposition of
// finitely presented abelian groups.

#include "motkit/rational.hpp"

#include <algorithm>
#include <vector>

namespace motkit {

using IntMatrix = std::vector<std::vector<Int>>;

// Diagonal of the Smith normal form of a (not necessarily square) integer
// matrix; entries d1 | d2 | ... , nonnegative, zeros trailing.
inline std::vector<Int> smith_diagonal(IntMatrix a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<Int> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        size_t pr = t, pc = t;
        bool found = false;
        for (size_t i = t; i < rows && !found; ++i)
            for (size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) { pr = i; pc = j; found = true; }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                while (a[i][t] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : a[i][t] / a[t][t];
                    for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) {
                        std::swap(a[t], a[i]);
                        clean = false;
                    }
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                while (a[t][j] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : a[t][j] / a[t][t];
                    for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                        clean = false;
                    }
                }
            }
            if (!clean) continue;
            // enforce divisibility: pivot must divide the rest of the block
            for (size_t i = t + 1; i < rows && clean; ++i)
                for (size_t j = t + 1; j < cols && clean; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        clean = false;
                    }
        }
        diag.push_back(a[t][t] < 0 ? Int(-a[t][t]) : a[t][t]);
        ++t;
    }
    return diag;
}

// Invariant factors > 1 of the abelian group presented by the relation
// matrix (generators = columns... here: square presentation, rows =
// relations on the generators).
inline std::vector<long> invariant_factors(const IntMatrix& relations) {
    std::vector<long> out;
    for (const Int& d : smith_diagonal(relations))
        if (d != 1) out.push_back(d.convert_to<long>());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace motkit
