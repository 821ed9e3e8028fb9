#include "lsw/linalg.hpp"

namespace lsw {

ScalarMatrix ScalarMatrix::identity(Field f, size_t n) {
    ScalarMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

size_t rref_in_place(ScalarMatrix& m) {
    const Field& f = m.field;
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        size_t sel = pivot_row;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        Scalar inv = f.inv(m.at(pivot_row, col));
        for (size_t j = col; j < m.cols; ++j) m.at(pivot_row, j) = f.mul(m.at(pivot_row, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == pivot_row || f.is_zero(m.at(i, col))) continue;
            Scalar factor = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    return pivot_row;
}

size_t rank(ScalarMatrix m) { return rref_in_place(m); }

ScalarMatrix inverse(const ScalarMatrix& m) {
    if (m.rows != m.cols) throw SingularMatrix("inverse of a non-square matrix");
    const Field& f = m.field;
    ScalarMatrix aug(f, m.rows, 2 * m.cols);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = f.one();
    }
    if (rref_in_place(aug) != m.rows) throw SingularMatrix("matrix is singular");
    ScalarMatrix inv(f, m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols != b.rows) throw SingularMatrix("matmul shape mismatch");
    const Field& f = a.field;
    ScalarMatrix r(f, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

} // namespace lsw
