#pragma once

// Binary matrix container: "LDGM", version byte, then u32 kind / rows / cols / p and the
// payload. QC payloads are the first rows of the block grid, ceil(p/8) bytes each;
// dense payloads are ceil(cols/8) bytes per row. Bits are LSB-first within a byte and
// padding bits must be zero.

#include "ldgm/gf2/dense_matrix.hpp"
#include "ldgm/gf2/qc_matrix.hpp"
#include "ldgm/util/bytes.hpp"

namespace ldgm::gf2 {

inline constexpr std::uint8_t kMatrixFormatVersion = 1;

enum class MatrixKind : std::uint32_t { dense = 0, qc = 1 };

void write_matrix(util::ByteWriter& out, const DenseMatrix& m);
/// p = 1 matrices are written with kind dense.
void write_matrix(util::ByteWriter& out, const QcMatrix& m);

/// Accepts only kind dense.
DenseMatrix read_dense(util::ByteReader& in);
/// Accepts kind qc, and kind dense as a p = 1 grid.
QcMatrix read_qc(util::ByteReader& in);

}  // namespace ldgm::gf2
