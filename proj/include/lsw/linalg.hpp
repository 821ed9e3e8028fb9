#ifndef LSW_LINALG_HPP
#define LSW_LINALG_HPP

#include <vector>

#include "lsw/field.hpp"

namespace lsw {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense exact matrix over a Field. Row-major.
struct ScalarMatrix {
    Field field;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Scalar> a;

    ScalarMatrix(Field f, size_t r, size_t c)
        : field(f), rows(r), cols(c), a(r * c, f.zero()) {}

    Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static ScalarMatrix identity(Field f, size_t n);
};

/// Gauss-Jordan to reduced row echelon form; returns the rank.
size_t rref_in_place(ScalarMatrix& m);

size_t rank(ScalarMatrix m);

/// Inverse of a square matrix; throws SingularMatrix.
ScalarMatrix inverse(const ScalarMatrix& m);

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b);

} // namespace lsw

#endif
