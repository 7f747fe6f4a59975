#include "skewpf/rational_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace skewpf {

bool RationalMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i) {
        for (int j = i + 1; j < cols; ++j) {
            if (a[i][j] != a[j][i]) return false;
        }
    }
    return true;
}

RankCertificate exact_rank(const RationalMatrix& m) {
    RankCertificate cert;
    cert.rows = m.rows;
    cert.cols = m.cols;
    if (m.rows == 0 || m.cols == 0) return cert;

    // Row-scale to integers; scaling by positive constants preserves rank.
    std::vector<std::vector<Int>> w(m.rows, std::vector<Int>(m.cols));
    for (int i = 0; i < m.rows; ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols; ++j) {
            Int den = m.a[i][j].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < m.cols; ++j) {
            Rat scaled = m.a[i][j] * Rat(lcm);
            scaled.canonicalize();
            w[i][j] = scaled.get_num();
        }
    }

    std::vector<int> orig(m.rows);
    std::iota(orig.begin(), orig.end(), 0);

    // Fraction-free elimination: every division by the previous pivot is
    // exact over the integers.
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int pivot_row = -1;
        for (int i = r; i < m.rows; ++i) {
            if (w[i][col] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        std::swap(w[r], w[pivot_row]);
        std::swap(orig[r], orig[pivot_row]);
        const Int pivot = w[r][col];
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j) {
                Int num = w[i][j] * pivot - w[i][col] * w[r][j];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
                w[i][j] = q;
            }
            w[i][col] = 0;
        }
        prev = pivot;
        cert.pivot_rows.push_back(orig[r]);
        cert.pivot_cols.push_back(col);
        ++r;
    }
    cert.rank = r;
    return cert;
}

}  // namespace skewpf
