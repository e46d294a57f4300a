#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ldgm/cryptanalysis.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/gf2/kernels.hpp"

namespace ldgm::attack {

namespace {

// First `count` entries of a uniformly shuffled 0..n-1.
std::vector<std::uint32_t> random_subset(std::size_t n, std::size_t count, crypto::KeyStream& rng) {
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0U);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.uniform(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    return idx;
}

std::optional<std::size_t> lowest_set(const gf2::BitVector& v) {
    const auto words = v.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w] != 0) {
            return w * gf2::kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
        }
    }
    return std::nullopt;
}

// Incremental GF(2) basis keyed by leading bit.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : pivots_(n, -1) {}

    bool insert(gf2::BitVector v) {
        for (;;) {
            const auto lead = lowest_set(v);
            if (!lead) {
                return false;
            }
            const auto at = pivots_[*lead];
            if (at < 0) {
                pivots_[*lead] = static_cast<std::ptrdiff_t>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            v ^= rows_[static_cast<std::size_t>(at)];
        }
    }
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    std::vector<std::ptrdiff_t> pivots_;
    std::vector<gf2::BitVector> rows_;
};

}  // namespace

params::ParameterSet masked_view(const params::ParameterSet& ps, keygen::Masking masking) {
    auto out = ps;
    if (masking != keygen::Masking::full) {
        out.m_T = 1;
        out.m_S = 1;
    }
    return out;
}

AttackOutcome support_decompose(const Transcript& transcript, const params::ParameterSet& ps,
                                DecompositionResult* result) {
    AttackOutcome out;
    DecompositionResult local;
    auto& res = result ? *result : local;
    const std::size_t r = ps.r();
    const std::size_t n = ps.n;
    const std::size_t analysed = std::max<std::size_t>(1, transcript.size() * 3 / 4);
    res.mapping.assign(r, {});
    res.mapped_positions = 0;
    res.validation_hit_rate = 0;
    if (transcript.size() < 2) {
        out.note = "transcript too short to split into analysis and validation";
        return out;
    }
    const std::uint64_t wr = gf2::words_for(r);
    const std::uint64_t wn = gf2::words_for(n);
    std::vector<double> freq(n);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::size_t> users;
        for (std::size_t t = 0; t < analysed; ++t) {
            if (transcript[t].s.test(j)) {
                users.push_back(t);
            }
        }
        if (users.empty()) {
            continue;
        }
        gf2::BitVector common = transcript[users.front()].s;
        for (auto t : users) {
            common &= transcript[t].s;
        }
        out.work += users.size() * wr;
        if (common.weight() != 1) {
            continue;
        }
        std::fill(freq.begin(), freq.end(), 0.0);
        for (auto t : users) {
            for (auto q : transcript[t].e_prime.support()) {
                freq[q] += 1.0;
            }
        }
        out.work += users.size() * wn;
        double mean = 0;
        for (auto& f : freq) {
            f /= static_cast<double>(users.size());
            mean += f;
        }
        mean /= static_cast<double>(n);
        double var = 0;
        for (auto f : freq) {
            var += (f - mean) * (f - mean);
        }
        const double threshold = mean + 3.0 * std::sqrt(var / static_cast<double>(n));
        std::vector<std::uint32_t> picked;
        for (std::uint32_t q = 0; q < n; ++q) {
            if (freq[q] > threshold) {
                picked.push_back(q);
            }
        }
        std::stable_sort(picked.begin(), picked.end(), [&](auto a, auto b) { return freq[a] > freq[b]; });
        if (picked.size() > ps.m()) {
            picked.resize(ps.m());
        }
        std::sort(picked.begin(), picked.end());
        if (!picked.empty()) {
            res.mapping[j] = std::move(picked);
            ++res.mapped_positions;
        }
    }
    std::size_t hits = 0;
    const std::size_t validated = transcript.size() - analysed;
    for (std::size_t t = analysed; t < transcript.size(); ++t) {
        const auto& entry = transcript[t];
        bool hit = true;
        for (auto j : entry.s.support()) {
            const auto& image = res.mapping[j];
            if (image.empty() ||
                !std::all_of(image.begin(), image.end(), [&](auto q) { return entry.e_prime.test(q); })) {
                hit = false;
                break;
            }
        }
        hits += hit ? 1 : 0;
    }
    out.iterations = analysed;
    res.validation_hit_rate = static_cast<double>(hits) / static_cast<double>(validated);
    out.success = res.validation_hit_rate >= 0.9;
    for (const auto& image : res.mapping) {
        out.artifacts.push_back(gf2::BitVector::from_support(n, image));
    }
    out.note = "mapped " + std::to_string(res.mapped_positions) + "/" + std::to_string(r) +
               " syndrome positions, validation hit rate " + std::to_string(res.validation_hit_rate);
    return out;
}

AttackOutcome isd_codeword_strip(const TranscriptEntry& entry, const keygen::PublicKey& pk, std::uint64_t budget,
                                 crypto::KeyStream& rng) {
    AttackOutcome out;
    const auto found = params::find(pk.set_id);
    if (!found) {
        throw ParameterError("unknown parameter set " + pk.set_id);
    }
    const auto& ps = *found;
    const std::size_t bound = ps.m() * ps.w;
    const std::size_t r = ps.r();
    const std::size_t n = ps.n;
    if (entry.e_prime.weight() <= bound) {
        out.success = true;
        out.iterations = 1;
        out.artifacts.push_back(entry.e_prime);
        out.note = "signature weight already within the error bound";
        return out;
    }
    const auto h = pk.H_pub.expand();
    const std::size_t wpr = gf2::words_for(r + 1);
    // A random r-subset of columns is an information-set complement with constant
    // probability; give up on a draw after this many singular tries.
    constexpr std::size_t kResampleCap = 1000;
    std::size_t best = entry.e_prime.weight();
    for (std::uint64_t it = 1; it <= budget; ++it) {
        out.iterations = it;
        std::optional<gf2::BitVector> u;
        std::vector<std::uint32_t> cols;
        for (std::size_t tries = 0; tries < kResampleCap && !u; ++tries) {
            cols = random_subset(n, r, rng);
            const auto sub = h.select_columns(cols);
            gf2::DenseMatrix aug(r, r + 1);
            for (std::size_t i = 0; i < r; ++i) {
                gf2::BitVector row(r + 1);
                row.assign(0, sub.row(i));
                row.set(r, entry.s.test(i));
                aug.set_row(i, row);
            }
            const auto elim = gf2::kernels::parallel::reduce(aug, r);
            out.work += elim.row_additions * wpr;
            if (elim.rank < r) {
                continue;
            }
            gf2::BitVector x(r);
            for (std::size_t i = 0; i < r; ++i) {
                if (aug.test(i, r)) {
                    x.set(elim.pivot_columns[i]);
                }
            }
            u = std::move(x);
        }
        if (!u) {
            out.note = "no invertible column subset found";
            return out;
        }
        gf2::BitVector e(n);
        for (auto i : u->support()) {
            e.set(cols[i]);
        }
        best = std::min(best, e.weight());
        if (e.weight() <= bound) {
            out.success = true;
            out.note = "stripped to weight " + std::to_string(e.weight()) + " (bound " + std::to_string(bound) + ")";
            out.artifacts.push_back(std::move(e));
            return out;
        }
    }
    out.note = "best weight " + std::to_string(best) + " after " + std::to_string(budget) + " iterations (bound " +
               std::to_string(bound) + ")";
    return out;
}

AttackOutcome low_weight_row_recovery(const gf2::DenseMatrix& h, std::size_t target_weight, std::uint64_t budget,
                                      crypto::KeyStream& rng) {
    const std::size_t n = h.cols();
    if (n > kLowWeightSearchMaxN) {
        throw ParameterError("low-weight search refuses codes longer than " + std::to_string(kLowWeightSearchMaxN));
    }
    AttackOutcome out;
    const auto gen = gf2::kernel_basis(h);
    const std::size_t k = gen.rows();
    const std::size_t wpr = gf2::words_for(n);
    if (k == 0) {
        out.note = "code is trivial";
        return out;
    }
    EchelonBasis basis(n);
    auto keep = [&](const gf2::BitVector& permuted, const std::vector<std::uint32_t>& perm) {
        if (permuted.weight() > target_weight) {
            return;
        }
        gf2::BitVector v(n);
        for (auto i : permuted.support()) {
            v.set(perm[i]);
        }
        if (basis.insert(v)) {
            out.artifacts.push_back(std::move(v));
        }
    };
    for (std::uint64_t it = 1; it <= budget && basis.rank() < k; ++it) {
        out.iterations = it;
        const auto perm = random_subset(n, n, rng);
        auto g = gen.select_columns(perm);
        const auto elim = gf2::kernels::parallel::reduce(g, n);
        out.work += elim.row_additions * wpr;
        std::vector<gf2::BitVector> rows;
        rows.reserve(elim.rank);
        for (std::size_t i = 0; i < elim.rank; ++i) {
            rows.push_back(g.row(i));
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            keep(rows[i], perm);
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                keep(rows[i] ^ rows[j], perm);
            }
        }
        out.work += rows.size() * rows.size() / 2 * wpr;
    }
    out.success = basis.rank() == k;
    out.note = "collected rank " + std::to_string(basis.rank()) + "/" + std::to_string(k) + " of weight <= " +
               std::to_string(target_weight) + " in " + std::to_string(out.iterations) + " iterations";
    return out;
}

gf2::DenseMatrix random_parity_check(std::size_t r, std::size_t n, crypto::KeyStream& rng) {
    if (r > n) {
        throw DimensionError("random parity check needs r <= n");
    }
    for (;;) {
        gf2::DenseMatrix h(r, n);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rng.next_u32() & 1U) {
                    h.set(i, j);
                }
            }
        }
        if (gf2::rank(h) == r) {
            return h;
        }
    }
}

}  // namespace ldgm::attack
