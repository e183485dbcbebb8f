#include "vci/linalg.hpp"

#include <algorithm>

namespace vci {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t ncols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Mat kernel_basis(Mat m, int ncols, FieldDesc fd) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, Scalar::zero(fd));
        v[free] = Scalar::one(fd);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec reduce_by(const Mat& rrefm, const std::vector<int>& pivots, Vec v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        int c = pivots[i];
        if (!v[c].is_zero()) {
            Scalar f = v[c];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rrefm[i][j];
        }
    }
    return v;
}

bool in_row_span(const Mat& rrefm, const std::vector<int>& pivots, Vec v) {
    v = reduce_by(rrefm, pivots, std::move(v));
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace vci
