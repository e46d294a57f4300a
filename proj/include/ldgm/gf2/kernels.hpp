#pragma once

// Hot loops of the binary linear algebra. `serial` is the reference implementation kept
// for testing; `parallel` distributes independent rows across OpenMP threads and must
// agree with `serial` bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ldgm/gf2/dense_matrix.hpp"
#include "ldgm/gf2/qc_matrix.hpp"

namespace ldgm::gf2::kernels {

struct Elimination {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    /// Row additions performed; a proxy for the elementary work of the elimination.
    std::uint64_t row_additions = 0;
};

namespace serial {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// In-place reduced row echelon form over the first `pivot_cols` columns.
Elimination reduce(DenseMatrix& m, std::size_t pivot_cols);

QcMatrix qc_multiply(const QcMatrix& a, const QcMatrix& b);

/// Gauss-Jordan over circulant blocks using only invertible pivot blocks.
/// nullopt when a block column has no invertible candidate (the matrix may still be
/// invertible; callers fall back to dense elimination).
std::optional<QcMatrix> qc_invert(const QcMatrix& a);

}  // namespace serial

namespace parallel {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
Elimination reduce(DenseMatrix& m, std::size_t pivot_cols);
QcMatrix qc_multiply(const QcMatrix& a, const QcMatrix& b);
std::optional<QcMatrix> qc_invert(const QcMatrix& a);

}  // namespace parallel

}  // namespace ldgm::gf2::kernels
