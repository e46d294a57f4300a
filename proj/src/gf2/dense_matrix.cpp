#include "ldgm/gf2/dense_matrix.hpp"

#include <algorithm>
#include <bit>

#include "ldgm/errors.hpp"
#include "ldgm/gf2/kernels.hpp"

namespace ldgm::gf2 {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * words_for(cols), 0) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::span<const BitVector> rows) {
    if (rows.empty()) {
        return {};
    }
    DenseMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.set_row(i, rows[i]);
    }
    return m;
}

DenseMatrix DenseMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (auto r : rows) {
        v.push_back(BitVector::from_string(r));
    }
    return from_rows(v);
}

BitVector DenseMatrix::row(std::size_t r) const { return BitVector::from_words(cols_, row_words(r)); }

void DenseMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) {
        throw DimensionError("set_row: length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), row_words(r).begin());
}

BitVector DenseMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (test(r, c)) {
            v.set(r);
        }
    }
    return v;
}

void DenseMatrix::add_row(std::size_t dst, std::size_t src) noexcept {
    auto d = row_words(dst);
    auto s = row_words(src);
    for (std::size_t w = 0; w < wpr_; ++w) {
        d[w] ^= s[w];
    }
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a != b) {
        std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
    }
}

std::size_t DenseMatrix::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : data_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

bool DenseMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            std::uint64_t word = words[wi];
            while (word != 0) {
                const std::size_t c = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                t.set(c, r);
                word &= word - 1;
            }
        }
    }
    return t;
}

DenseMatrix DenseMatrix::select_columns(std::span<const std::uint32_t> cols) const {
    DenseMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (test(r, cols[j])) {
                out.set(r, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::column_range(std::size_t first, std::size_t count) const {
    if (first + count > cols_) {
        throw DimensionError("column_range out of range");
    }
    DenseMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.set_row(r, row(r).slice(first, count));
    }
    return out;
}

BitVector DenseMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols_) {
        throw DimensionError("matrix-vector: length mismatch");
    }
    BitVector out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < wpr_; ++w) {
            acc ^= rw[w] & vw[w];
        }
        if (std::popcount(acc) & 1) {
            out.set(r);
        }
    }
    return out;
}

BitVector DenseMatrix::left_multiply(const BitVector& v) const {
    if (v.size() != rows_) {
        throw DimensionError("vector-matrix: length mismatch");
    }
    BitVector out(cols_);
    auto ow = out.words();
    for (auto r : v.support()) {
        auto rw = row_words(r);
        for (std::size_t w = 0; w < wpr_; ++w) {
            ow[w] ^= rw[w];
        }
    }
    return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) {
        throw DimensionError("matrix sum: shapes differ");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] ^= other.data_[i];
    }
    return *this;
}

std::string DenseMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("hconcat: row counts differ");
    }
    DenseMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector row(a.cols() + b.cols());
        row.assign(0, a.row(r));
        row.assign(a.cols(), b.row(r));
        out.set_row(r, row);
    }
    return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) { return kernels::parallel::multiply(a, b); }

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) { return a + b; }

DenseMatrix transpose(const DenseMatrix& a) { return a.transpose(); }

std::size_t rank(DenseMatrix a) { return kernels::parallel::reduce(a, a.cols()).rank; }

std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("inverse: matrix is not square");
    }
    const std::size_t n = a.rows();
    DenseMatrix aug = hconcat(a, DenseMatrix::identity(n));
    if (kernels::parallel::reduce(aug, n).rank < n) {
        return std::nullopt;
    }
    return aug.column_range(n, n);
}

std::optional<BitVector> solve(const DenseMatrix& a, const BitVector& b) {
    if (b.size() != a.rows()) {
        throw DimensionError("solve: right-hand side length mismatch");
    }
    DenseMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector row(a.cols() + 1);
        row.assign(0, a.row(r));
        row.set(a.cols(), b.test(r));
        aug.set_row(r, row);
    }
    const auto elim = kernels::parallel::reduce(aug, a.cols());
    for (std::size_t r = elim.rank; r < aug.rows(); ++r) {
        if (aug.test(r, a.cols())) {
            return std::nullopt;
        }
    }
    BitVector x(a.cols());
    for (std::size_t i = 0; i < elim.rank; ++i) {
        if (aug.test(i, a.cols())) {
            x.set(elim.pivot_columns[i]);
        }
    }
    return x;
}

DenseMatrix kernel_basis(const DenseMatrix& h) {
    DenseMatrix m = h;
    const auto elim = kernels::parallel::reduce(m, m.cols());
    std::vector<bool> is_pivot(h.cols(), false);
    for (auto c : elim.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < h.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(h.cols());
        v.set(free);
        for (std::size_t i = 0; i < elim.rank; ++i) {
            if (m.test(i, free)) {
                v.set(elim.pivot_columns[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) {
        return DenseMatrix(0, h.cols());
    }
    return DenseMatrix::from_rows(basis);
}

}  // namespace ldgm::gf2
