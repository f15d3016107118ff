#include "modcat/matrix.hpp"

#include <stdexcept>

namespace modcat {

Mat mat_mul(const PrimeField& F, const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            uint8_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

Mat mat_add(const PrimeField& F, const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
    return r;
}

Mat mat_scale(const PrimeField& F, uint8_t c, const Mat& x) {
    Mat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.mul(c, x.a[i]);
    return r;
}

Mat mat_vstack(const Mat& top, const Mat& bottom) {
    assert(top.cols == bottom.cols || top.rows == 0 || bottom.rows == 0);
    int cols = top.rows ? top.cols : bottom.cols;
    Mat r(top.rows + bottom.rows, cols);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(top.rows + i, j) = bottom.at(i, j);
    return r;
}

Mat mat_hstack(const Mat& left, const Mat& right) {
    assert(left.rows == right.rows || left.cols == 0 || right.cols == 0);
    int rows = left.cols ? left.rows : right.rows;
    Mat r(rows, left.cols + right.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < left.cols; ++j) r.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols; ++j) r.at(i, left.cols + j) = right.at(i, j);
    }
    return r;
}

std::vector<int> row_reduce(const PrimeField& F, Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        uint8_t piv_inv = F.inv(m.at(row, col));
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = F.mul(piv_inv, m.at(row, j));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            uint8_t v = m.at(r, col);
            if (!v) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(v, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const PrimeField& F, Mat m) {
    return static_cast<int>(row_reduce(F, m).size());
}

Mat nullspace(const PrimeField& F, Mat m) {
    int n = m.cols;
    std::vector<int> pivots = row_reduce(F, m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat basis(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], static_cast<int>(k)) = F.neg(m.at(static_cast<int>(r), fc));
    }
    return basis;
}

std::vector<uint8_t> solve(const PrimeField& F, Mat m, std::vector<uint8_t> b) {
    assert(static_cast<int>(b.size()) == m.rows);
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = row_reduce(F, aug);
    for (int c : pivots)
        if (c == m.cols) return {};  // inconsistent
    std::vector<uint8_t> x(m.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
    return x;
}

std::vector<int> column_basis(const PrimeField& F, const Mat& m) {
    Mat c = m;
    return row_reduce(F, c);
}

std::vector<int> row_basis(const PrimeField& F, const Mat& m) {
    // transpose then take column basis
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return column_basis(F, t);
}

bool is_invertible(const PrimeField& F, const Mat& m) {
    if (m.rows != m.cols) return false;
    return rank(F, m) == m.rows;
}

Mat mat_inverse(const PrimeField& F, Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = row_reduce(F, aug);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::domain_error("matrix not invertible");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace modcat
