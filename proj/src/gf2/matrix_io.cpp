#include "ldgm/gf2/matrix_io.hpp"

#include "ldgm/errors.hpp"

namespace ldgm::gf2 {

namespace {

// Largest dimension accepted from a file; keeps a hostile header from requesting
// absurd allocations before the size check against the payload runs.
constexpr std::uint32_t kMaxDim = 1U << 20;

void write_bits(util::ByteWriter& out, std::span<const std::uint64_t> words, std::size_t bits) {
    for (std::size_t byte = 0; byte < (bits + 7) / 8; ++byte) {
        out.u8(static_cast<std::uint8_t>(words[byte / 8] >> (8 * (byte % 8))));
    }
}

void read_bits(std::span<const std::uint8_t> src, std::span<std::uint64_t> words, std::size_t bits) {
    for (std::size_t byte = 0; byte < src.size(); ++byte) {
        words[byte / 8] |= static_cast<std::uint64_t>(src[byte]) << (8 * (byte % 8));
    }
    if (bits % 8 != 0 && (src.back() >> (bits % 8)) != 0) {
        throw FormatError("nonzero padding bits in matrix payload");
    }
}

struct Header {
    MatrixKind kind;
    std::uint32_t rows, cols, p;
};

void write_header(util::ByteWriter& out, MatrixKind kind, std::size_t rows, std::size_t cols, std::size_t p) {
    out.raw("LDGM");
    out.u8(kMatrixFormatVersion);
    out.u32(static_cast<std::uint32_t>(kind));
    out.u32(static_cast<std::uint32_t>(rows));
    out.u32(static_cast<std::uint32_t>(cols));
    out.u32(static_cast<std::uint32_t>(p));
}

Header read_header(util::ByteReader& in) {
    in.expect("LDGM");
    if (in.u8() != kMatrixFormatVersion) {
        throw FormatError("unsupported matrix format version");
    }
    const std::uint32_t kind = in.u32();
    Header h{static_cast<MatrixKind>(kind), in.u32(), in.u32(), in.u32()};
    if (kind > 1) {
        throw FormatError("unknown matrix kind");
    }
    if (h.rows > kMaxDim || h.cols > kMaxDim || h.p == 0 || h.p > kMaxDim) {
        throw FormatError("matrix dimensions out of range");
    }
    if (h.kind == MatrixKind::dense && h.p != 1) {
        throw FormatError("dense matrix must declare p = 1");
    }
    if (h.rows % h.p != 0 || h.cols % h.p != 0) {
        throw FormatError("matrix dimensions not divisible by p");
    }
    return h;
}

DenseMatrix read_dense_payload(util::ByteReader& in, const Header& h) {
    const std::size_t row_bytes = (std::size_t{h.cols} + 7) / 8;
    in.require(row_bytes * h.rows);
    DenseMatrix m(h.rows, h.cols);
    for (std::size_t r = 0; r < h.rows; ++r) {
        read_bits(in.bytes(row_bytes), m.row_words(r), h.cols);
    }
    return m;
}

}  // namespace

void write_matrix(util::ByteWriter& out, const DenseMatrix& m) {
    write_header(out, MatrixKind::dense, m.rows(), m.cols(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        write_bits(out, m.row_words(r), m.cols());
    }
}

void write_matrix(util::ByteWriter& out, const QcMatrix& m) {
    if (m.block_size() == 1) {
        write_matrix(out, m.expand());
        return;
    }
    write_header(out, MatrixKind::qc, m.rows(), m.cols(), m.block_size());
    for (std::size_t i = 0; i < m.block_rows(); ++i) {
        for (std::size_t j = 0; j < m.block_cols(); ++j) {
            write_bits(out, m.block(i, j), m.block_size());
        }
    }
}

DenseMatrix read_dense(util::ByteReader& in) {
    const Header h = read_header(in);
    if (h.kind != MatrixKind::dense) {
        throw FormatError("expected a dense matrix");
    }
    return read_dense_payload(in, h);
}

QcMatrix read_qc(util::ByteReader& in) {
    const Header h = read_header(in);
    if (h.kind == MatrixKind::dense) {
        auto packed = QcMatrix::compress(read_dense_payload(in, h), 1);
        return std::move(*packed);
    }
    const std::size_t block_bytes = (std::size_t{h.p} + 7) / 8;
    const std::size_t br = h.rows / h.p;
    const std::size_t bc = h.cols / h.p;
    in.require(block_bytes * br * bc);
    QcMatrix m(br, bc, h.p);
    for (std::size_t i = 0; i < br; ++i) {
        for (std::size_t j = 0; j < bc; ++j) {
            read_bits(in.bytes(block_bytes), m.block(i, j), h.p);
        }
    }
    return m;
}

}  // namespace ldgm::gf2
