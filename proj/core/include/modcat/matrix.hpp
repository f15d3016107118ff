#ifndef MODCAT_MATRIX_HPP
#define MODCAT_MATRIX_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "modcat/field.hpp"

namespace modcat {

/// Dense matrix over a prime field. Row-major; all ops take the field explicitly.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return a[static_cast<size_t>(r) * cols + c];
    }
    uint8_t at(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return a[static_cast<size_t>(r) * cols + c];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const {
        for (uint8_t v : a) if (v) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

Mat mat_mul(const PrimeField& F, const Mat& x, const Mat& y);
Mat mat_add(const PrimeField& F, const Mat& x, const Mat& y);
Mat mat_scale(const PrimeField& F, uint8_t c, const Mat& x);
Mat mat_vstack(const Mat& top, const Mat& bottom);
Mat mat_hstack(const Mat& left, const Mat& right);

/// Row echelon form in place; returns pivot column list.
std::vector<int> row_reduce(const PrimeField& F, Mat& m);

int rank(const PrimeField& F, Mat m);

/// Basis of the right nullspace {x : m x = 0}, one column per basis vector.
Mat nullspace(const PrimeField& F, Mat m);

/// Solve m x = b for one column vector b; returns empty vector if unsolvable.
std::vector<uint8_t> solve(const PrimeField& F, Mat m, std::vector<uint8_t> b);

/// Column indices of m forming a basis of its column space.
std::vector<int> column_basis(const PrimeField& F, const Mat& m);

/// Indices of rows of m that form a basis of the row space.
std::vector<int> row_basis(const PrimeField& F, const Mat& m);

bool is_invertible(const PrimeField& F, const Mat& m);
Mat mat_inverse(const PrimeField& F, Mat m);

} // namespace modcat

#endif
