#include "ldgm/keygen.hpp"

#include <algorithm>
#include <numeric>

#include "ldgm/digest_map.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/gf2/matrix_io.hpp"

namespace ldgm::keygen {

namespace {

std::vector<std::size_t> random_permutation(std::size_t n, crypto::KeyStream& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.uniform(i)]);
    }
    return perm;
}

void set_bit(std::span<std::uint64_t> block, std::size_t bit) {
    block[bit / gf2::kWordBits] |= std::uint64_t{1} << (bit % gf2::kWordBits);
}

void check_shape(const gf2::QcMatrix& m, std::size_t rows, std::size_t cols, std::size_t p, const char* name) {
    if (m.rows() != rows || m.cols() != cols || m.block_size() != p) {
        throw FormatError(std::string("matrix ") + name + " has the wrong shape for this parameter set");
    }
}

void check_shape(const gf2::DenseMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols) {
        throw FormatError(std::string("matrix ") + name + " has the wrong shape for this parameter set");
    }
}

params::ParameterSet lookup(const std::string& id) {
    auto ps = params::find(id);
    if (!ps) {
        throw FormatError("unknown parameter set '" + id + "'");
    }
    return *ps;
}

}  // namespace

gf2::QcMatrix PrivateKey::Q() const {
    return weight_control_rank_part(a, b, block_size()) + T;
}

gf2::BitVector PrivateKey::apply_Q(const gf2::BitVector& s) const {
    const std::size_t p = block_size();
    gf2::BitVector out = T.multiply(s);
    // R s: block i of the result is (a^T b fold(s))_i repeated p times.
    const auto coeff = a.left_multiply(b.multiply(digest::fold_blocks(s, p)));
    for (auto i : coeff.support()) {
        for (std::size_t t = 0; t < p; ++t) {
            out.flip(i * p + t);
        }
    }
    return out;
}

void PrivateKey::finalize() {
    H = parity_matrix(X);
    S_t = S.transpose();
}

gf2::QcMatrix generate_ldgm(const params::ParameterSet& ps, std::size_t p, crypto::KeyStream& rng) {
    if (ps.w_g >= ps.n) {
        throw ParameterError("row weight w_g must be below n");
    }
    const std::size_t k0 = ps.k / p;
    const std::size_t n0 = ps.n / p;
    gf2::QcMatrix G(k0, n0, p);
    std::vector<std::uint32_t> picked;
    for (std::size_t i = 0; i < k0; ++i) {
        picked.clear();
        while (picked.size() < ps.w_g) {
            const auto t = rng.uniform(ps.n);
            if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
                picked.push_back(t);
                set_bit(G.block(i, t / p), t % p);
            }
        }
    }
    return G;
}

std::optional<gf2::QcMatrix> derive_systematic_parity(const gf2::QcMatrix& G) {
    const std::size_t k0 = G.block_rows();
    if (G.block_cols() <= k0) {
        throw DimensionError("generator must have more columns than rows");
    }
    auto left_inv = G.block_column_range(0, k0).inverse();
    if (!left_inv) {
        return std::nullopt;
    }
    const auto D = gf2::multiply(*left_inv, G.block_column_range(k0, G.block_cols() - k0));
    return D.transpose();
}

gf2::QcMatrix parity_matrix(const gf2::QcMatrix& X) {
    return gf2::hconcat(X, gf2::QcMatrix::identity(X.block_rows(), X.block_size()));
}

gf2::DenseMatrix random_constraint_matrix(std::size_t z, std::size_t cols, crypto::KeyStream& rng,
                                          bool forbid_zero_column) {
    if (z == 0 || z > 31 || z > cols) {
        throw ParameterError("constraint matrix needs 1 <= z <= min(31, cols)");
    }
    for (std::uint32_t attempt = 0; attempt < kRetryCap; ++attempt) {
        gf2::DenseMatrix m(z, cols);
        for (std::size_t c = 0; c < cols; ++c) {
            // Columns are drawn from the nonzero z-bit patterns when zero columns are banned.
            const std::uint32_t lo = forbid_zero_column ? 1 : 0;
            const std::uint32_t v = lo + rng.uniform((std::uint64_t{1} << z) - lo);
            for (std::size_t i = 0; i < z; ++i) {
                m.set(i, c, (v >> i) & 1U);
            }
        }
        if (gf2::rank(m) == z) {
            return m;
        }
    }
    throw KeygenError("could not draw a full-rank constraint matrix");
}

gf2::QcMatrix random_sparse_qc(std::size_t blocks, std::size_t p, std::size_t weight, crypto::KeyStream& rng) {
    if (weight == 0 || weight > blocks) {
        throw ParameterError("sparse block weight must be in [1, blocks]");
    }
    const auto perm = random_permutation(blocks, rng);
    std::vector<std::size_t> offsets{0};
    while (offsets.size() < weight) {
        const std::size_t d = 1 + rng.uniform(blocks - 1);
        if (std::find(offsets.begin(), offsets.end(), d) == offsets.end()) {
            offsets.push_back(d);
        }
    }
    // Evaluated at x = 1 a matrix whose rows all have even weight is singular, so for even
    // weight a random half of the block rows skip the last offset.
    std::vector<bool> thin(blocks, false);
    if (weight % 2 == 0) {
        const auto order = random_permutation(blocks, rng);
        for (std::size_t i = 0; i < blocks / 2; ++i) {
            thin[order[i]] = true;
        }
    }
    gf2::QcMatrix m(blocks, blocks, p);
    for (std::size_t u = 0; u < blocks; ++u) {
        for (std::size_t j = 0; j < offsets.size(); ++j) {
            if (thin[u] && j + 1 == offsets.size()) {
                continue;
            }
            set_bit(m.block(perm[u], perm[(u + offsets[j]) % blocks]), rng.uniform(p));
        }
    }
    return m;
}

gf2::QcMatrix weight_control_rank_part(const gf2::DenseMatrix& a, const gf2::DenseMatrix& b, std::size_t p) {
    const auto core = gf2::multiply(a.transpose(), b);
    gf2::QcMatrix R(core.rows(), core.cols(), p);
    for (std::size_t i = 0; i < core.rows(); ++i) {
        for (std::size_t j = 0; j < core.cols(); ++j) {
            if (core.test(i, j)) {
                auto blk = R.block(i, j);
                for (std::size_t t = 0; t < p; ++t) {
                    set_bit(blk, t);
                }
            }
        }
    }
    return R;
}

gf2::QcMatrix public_matrix(const PrivateKey& sk) {
    return gf2::multiply(gf2::multiply(sk.Q_inv, sk.H), sk.S_inv);
}

KeyPair generate(const params::ParameterSet& ps, const crypto::Seed& seed, const KeygenOptions& opts) {
    params::validate(ps);
    const std::size_t p = opts.form == Form::qc ? ps.p : 1;
    const std::size_t r0 = ps.r() / p;
    const std::size_t n0 = ps.n / p;

    KeyPair kp;
    PrivateKey& sk = kp.sk;
    sk.ps = ps;
    sk.seed = seed;

    bool ok = false;
    for (std::uint32_t attempt = 0; attempt < kRetryCap && !ok; ++attempt) {
        auto rng = crypto::derive_stream(seed, "ldgm/G", attempt);
        sk.G = generate_ldgm(ps, p, rng);
        if (auto X = derive_systematic_parity(sk.G)) {
            sk.X = std::move(*X);
            ok = true;
        }
    }
    if (!ok) {
        throw KeygenError("no generator with an invertible leftmost k x k block after retry cap");
    }

    ok = false;
    for (std::uint32_t attempt = 0; attempt < kRetryCap && !ok; ++attempt) {
        auto rng = crypto::derive_stream(seed, "ldgm/Q", attempt);
        sk.b = random_constraint_matrix(ps.z, r0, rng, true);
        switch (opts.masking) {
            case Masking::full:
                sk.a = random_constraint_matrix(ps.z, r0, rng, false);
                sk.T = random_sparse_qc(r0, p, ps.m_T, rng);
                break;
            case Masking::permutation:
                sk.a = gf2::DenseMatrix(ps.z, r0);
                sk.T = random_sparse_qc(r0, p, 1, rng);
                break;
            case Masking::identity:
                sk.a = gf2::DenseMatrix(ps.z, r0);
                sk.T = gf2::QcMatrix::identity(r0, p);
                break;
        }
        if (auto inv = sk.Q().inverse()) {
            sk.Q_inv = std::move(*inv);
            ok = true;
        }
    }
    if (!ok) {
        throw KeygenError("Q = R + T stayed singular after retry cap");
    }

    ok = false;
    for (std::uint32_t attempt = 0; attempt < kRetryCap && !ok; ++attempt) {
        auto rng = crypto::derive_stream(seed, "ldgm/S", attempt);
        switch (opts.masking) {
            case Masking::full:
                sk.S = random_sparse_qc(n0, p, ps.m_S, rng);
                break;
            case Masking::permutation:
                sk.S = random_sparse_qc(n0, p, 1, rng);
                break;
            case Masking::identity:
                sk.S = gf2::QcMatrix::identity(n0, p);
                break;
        }
        if (auto inv = sk.S.inverse()) {
            sk.S_inv = std::move(*inv);
            ok = true;
        }
    }
    if (!ok) {
        throw KeygenError("S stayed singular after retry cap");
    }

    sk.finalize();
    kp.pk.set_id = ps.id;
    kp.pk.b = sk.b;
    kp.pk.H_pub = public_matrix(sk);

    if (opts.masking == Masking::full && ps.m_S == 1) {
        kp.warnings.emplace_back("m_S = 1 makes S a permutation; signatures are open to support decomposition");
    }
    if (opts.masking != Masking::full) {
        kp.warnings.emplace_back("weakened masking requested; this key is for attack experiments only");
    }
    return kp;
}

std::vector<std::uint8_t> serialize(const PrivateKey& sk) {
    util::ByteWriter w;
    w.raw("LDGMSK");
    w.u8(kKeyFormatVersion);
    w.str(sk.ps.id);
    w.bytes(sk.seed.bytes);
    gf2::write_matrix(w, sk.G);
    gf2::write_matrix(w, sk.X);
    gf2::write_matrix(w, sk.a);
    gf2::write_matrix(w, sk.b);
    gf2::write_matrix(w, sk.T);
    gf2::write_matrix(w, sk.S);
    gf2::write_matrix(w, sk.S_inv);
    gf2::write_matrix(w, sk.Q_inv);
    return w.take();
}

std::vector<std::uint8_t> serialize(const PublicKey& pk) {
    util::ByteWriter w;
    w.raw("LDGMPK");
    w.u8(kKeyFormatVersion);
    w.str(pk.set_id);
    gf2::write_matrix(w, pk.H_pub);
    gf2::write_matrix(w, pk.b);
    return w.take();
}

PrivateKey parse_private(std::span<const std::uint8_t> data) {
    util::ByteReader in(data);
    in.expect("LDGMSK");
    if (in.u8() != kKeyFormatVersion) {
        throw FormatError("unsupported private key version");
    }
    PrivateKey sk;
    sk.ps = lookup(in.str());
    auto seed = in.bytes(32);
    std::copy(seed.begin(), seed.end(), sk.seed.bytes.begin());
    sk.G = gf2::read_qc(in);
    sk.X = gf2::read_qc(in);
    sk.a = gf2::read_dense(in);
    sk.b = gf2::read_dense(in);
    sk.T = gf2::read_qc(in);
    sk.S = gf2::read_qc(in);
    sk.S_inv = gf2::read_qc(in);
    sk.Q_inv = gf2::read_qc(in);
    in.finish();

    const auto& ps = sk.ps;
    const std::size_t p = sk.G.block_size();
    if (p != ps.p && p != 1) {
        throw FormatError("block size matches neither the parameter set nor the generic form");
    }
    check_shape(sk.G, ps.k, ps.n, p, "G");
    check_shape(sk.X, ps.r(), ps.k, p, "X");
    check_shape(sk.a, ps.z, ps.r() / p, "a");
    check_shape(sk.b, ps.z, ps.r() / p, "b");
    check_shape(sk.T, ps.r(), ps.r(), p, "T");
    check_shape(sk.S, ps.n, ps.n, p, "S");
    check_shape(sk.S_inv, ps.n, ps.n, p, "S^-1");
    check_shape(sk.Q_inv, ps.r(), ps.r(), p, "Q^-1");
    sk.finalize();
    return sk;
}

PublicKey parse_public(std::span<const std::uint8_t> data) {
    util::ByteReader in(data);
    in.expect("LDGMPK");
    if (in.u8() != kKeyFormatVersion) {
        throw FormatError("unsupported public key version");
    }
    PublicKey pk;
    pk.set_id = in.str();
    const auto ps = lookup(pk.set_id);
    pk.H_pub = gf2::read_qc(in);
    pk.b = gf2::read_dense(in);
    in.finish();
    const std::size_t p = pk.H_pub.block_size();
    if (p != ps.p && p != 1) {
        throw FormatError("block size matches neither the parameter set nor the generic form");
    }
    check_shape(pk.H_pub, ps.r(), ps.n, p, "H'");
    check_shape(pk.b, ps.z, ps.r() / p, "b");
    return pk;
}

}  // namespace ldgm::keygen
