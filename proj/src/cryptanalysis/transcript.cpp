#include "ldgm/cryptanalysis.hpp"

#include "ldgm/gf2/kernels.hpp"

namespace ldgm::attack {

std::vector<std::uint8_t> message_bytes(const std::string& text) { return {text.begin(), text.end()}; }

Transcript collect_transcript(const keygen::PrivateKey& sk, std::size_t count, const sign::SignOptions& opts,
                              const std::string& label) {
    Transcript out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto msg = message_bytes(label + "-" + std::to_string(i));
        auto t = sign::sign_trace(msg, sk, opts);
        out.push_back({std::move(msg), std::move(t.syndrome.s), t.syndrome.counter, std::move(t.e_prime)});
    }
    return out;
}

std::optional<gf2::BitVector> solve_counted(const gf2::DenseMatrix& a, const gf2::BitVector& b, std::uint64_t& work) {
    gf2::DenseMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        gf2::BitVector row(a.cols() + 1);
        row.assign(0, a.row(r));
        row.set(a.cols(), b.test(r));
        aug.set_row(r, row);
    }
    const auto elim = gf2::kernels::parallel::reduce(aug, a.cols());
    work += elim.row_additions * aug.words_per_row();
    for (std::size_t r = elim.rank; r < aug.rows(); ++r) {
        if (aug.test(r, a.cols())) {
            return std::nullopt;
        }
    }
    gf2::BitVector x(a.cols());
    for (std::size_t i = 0; i < elim.rank; ++i) {
        if (aug.test(i, a.cols())) {
            x.set(elim.pivot_columns[i]);
        }
    }
    return x;
}

}  // namespace ldgm::attack
