#ifndef SKEWPF_RATIONAL_MATRIX_HPP
#define SKEWPF_RATIONAL_MATRIX_HPP

#include <vector>

#include "skewpf/rational.hpp"

namespace skewpf {

struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rat>> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Rat>(c, Rat(0))) {}

    Rat& at(int i, int j) { return a[i][j]; }
    const Rat& at(int i, int j) const { return a[i][j]; }
    bool is_symmetric() const;
};

struct RankCertificate {
    int rows = 0;
    int cols = 0;
    int rank = 0;
    std::vector<int> pivot_rows;  // original row indices, one per pivot
    std::vector<int> pivot_cols;
};

// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
// integer matrix. Deterministic pivoting: first nonzero entry in column
// order.
RankCertificate exact_rank(const RationalMatrix& m);

}  // namespace skewpf

#endif
