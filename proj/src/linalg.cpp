#include "hypercross/linalg.hpp"

#include <stdexcept>

namespace hypercross {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("rref: ragged matrix");

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (best == -1 || abs(m[i][c]) > abs(m[best][c])) best = i;
        }
        if (best == -1) continue;
        std::swap(m[r], m[best]);

        const Rat inv_pivot = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv_pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> null_space(const Mat& m) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    Mat red = m;
    const std::vector<int> pivots = rref(red);

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rat(0));
        v[free] = 1;
        // Pivot row i solves x[pivots[i]] = -red[i][free].
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int det_sign(Mat m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("det_sign: matrix not square");

    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int best = -1;
        for (int i = c; i < n; ++i) {
            if (m[i][c] == 0) continue;
            if (best == -1 || abs(m[i][c]) > abs(m[best][c])) best = i;
        }
        if (best == -1) return 0;
        if (best != c) {
            std::swap(m[c], m[best]);
            sign = -sign;
        }
        if (sgn(m[c][c]) < 0) sign = -sign;
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return sign;
}

}  // namespace hypercross
