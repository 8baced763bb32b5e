#include "kleinq/linalg.hpp"

namespace kleinq {

int rank(Mat m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        TowerElement inv = m[r][c].inv();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            TowerElement f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<Vec> kernel_of_row(const Vec& row) {
    size_t n = row.size();
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i) {
        if (!row[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    std::vector<Vec> basis;
    if (pivot == n) throw Error("zero functional has no echelon kernel basis");
    TowerElement pinv = row[pivot].inv();
    for (size_t f = 0; f < n; ++f) {
        if (f == pivot) continue;
        Vec v(n, TowerElement());
        v[f] = TowerElement(rat(1));
        v[pivot] = -(row[f] * pinv);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat r = zero_matrix(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][t] * b[t][j];
        }
    return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size(), TowerElement());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] = r[i] + a[i][j] * x[j];
    return r;
}

Mat transpose(const Mat& a) {
    Mat r = zero_matrix(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

namespace {
TowerElement det_rec(const Mat& a, std::vector<size_t> cols, size_t row) {
    if (cols.size() == 1) return a[row][cols[0]];
    TowerElement acc;
    for (size_t t = 0; t < cols.size(); ++t) {
        if (a[row][cols[t]].is_zero()) continue;
        std::vector<size_t> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(t));
        TowerElement term = a[row][cols[t]] * det_rec(a, rest, row + 1);
        acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}
} // namespace

TowerElement det4(const Mat& a) { return det_rec(a, {0, 1, 2, 3}, 0); }

Mat inverse4(const Mat& a) {
    TowerElement d = det4(a);
    if (d.is_zero()) throw Error("singular matrix");
    TowerElement dinv = d.inv();
    Mat r = zero_matrix(4, 4);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            // cofactor C_ji / det
            Mat minor = zero_matrix(3, 3);
            size_t mi = 0;
            for (size_t x = 0; x < 4; ++x) {
                if (x == j) continue;
                size_t mj = 0;
                for (size_t y = 0; y < 4; ++y) {
                    if (y == i) continue;
                    minor[mi][mj] = a[x][y];
                    ++mj;
                }
                ++mi;
            }
            TowerElement c = det_rec(minor, {0, 1, 2}, 0);
            if ((i + j) % 2 == 1) c = -c;
            r[i][j] = c * dinv;
        }
    }
    return r;
}

} // namespace kleinq
