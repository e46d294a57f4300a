#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ldgm/crypto.hpp"
#include "ldgm/gf2/dense_matrix.hpp"
#include "ldgm/gf2/qc_matrix.hpp"
#include "ldgm/params.hpp"

namespace ldgm::keygen {

inline constexpr std::uint32_t kRetryCap = 64;
inline constexpr std::uint8_t kKeyFormatVersion = 1;

/// Generic keys use 1 x 1 blocks throughout, i.e. plain binary matrices.
enum class Form { qc, generic };

/// How Q and S are drawn. `permutation` and `identity` are weakened variants that exist
/// for the attack demonstrations; `full` is the real scheme.
enum class Masking { full, permutation, identity };

struct KeygenOptions {
    Form form = Form::qc;
    Masking masking = Masking::full;
};

struct PrivateKey {
    params::ParameterSet ps;
    crypto::Seed seed;
    gf2::QcMatrix G;      // k x n, rows of weight w_g
    gf2::QcMatrix X;      // r x k, H = [X | I_r]
    gf2::DenseMatrix a;   // z x r0 (z x r in generic form)
    gf2::DenseMatrix b;
    gf2::QcMatrix T;      // r x r, row and column weight m_T
    gf2::QcMatrix S;      // n x n, row and column weight m_S
    gf2::QcMatrix S_inv;
    gf2::QcMatrix Q_inv;

    // Recomputed on load, never serialized.
    gf2::QcMatrix H;
    gf2::QcMatrix S_t;

    std::size_t block_size() const noexcept { return G.block_size(); }
    /// Q = (a^T b) (x) 1_{p x p} + T.
    gf2::QcMatrix Q() const;
    /// Q * s without forming Q.
    gf2::BitVector apply_Q(const gf2::BitVector& s) const;
    void finalize();
};

struct PublicKey {
    std::string set_id;
    gf2::QcMatrix H_pub;  // Q^-1 H S^-1
    gf2::DenseMatrix b;

    std::size_t block_size() const noexcept { return H_pub.block_size(); }
};

struct KeyPair {
    PrivateKey sk;
    PublicKey pk;
    std::vector<std::string> warnings;
};

/// k x n LDGM generator; each block row holds w_g ones spread over its first rows.
gf2::QcMatrix generate_ldgm(const params::ParameterSet& ps, std::size_t p, crypto::KeyStream& rng);

/// X with G * [X | I_r]^T = 0, or nullopt when the leftmost k x k block of G is singular.
std::optional<gf2::QcMatrix> derive_systematic_parity(const gf2::QcMatrix& G);

/// H = [X | I_r].
gf2::QcMatrix parity_matrix(const gf2::QcMatrix& X);

/// Random z x cols matrix of full rank z with no all-zero column.
gf2::DenseMatrix random_constraint_matrix(std::size_t z, std::size_t cols, crypto::KeyStream& rng,
                                          bool forbid_zero_column);

/// blocks x blocks grid of monomial blocks, always including the diagonal. Odd `weight`:
/// exactly `weight` blocks per block row and block column. Even `weight`: half of the block
/// rows carry weight - 1, so rows and columns have weight weight - 1 or weight.
gf2::QcMatrix random_sparse_qc(std::size_t blocks, std::size_t p, std::size_t weight, crypto::KeyStream& rng);

/// Dense part R = (a^T b) (x) 1_{p x p}.
gf2::QcMatrix weight_control_rank_part(const gf2::DenseMatrix& a, const gf2::DenseMatrix& b, std::size_t p);

KeyPair generate(const params::ParameterSet& ps, const crypto::Seed& seed, const KeygenOptions& opts = {});

/// Q^-1 H S^-1.
gf2::QcMatrix public_matrix(const PrivateKey& sk);

std::vector<std::uint8_t> serialize(const PrivateKey& sk);
std::vector<std::uint8_t> serialize(const PublicKey& pk);
/// Both throw FormatError on malformed input or an unknown parameter set.
PrivateKey parse_private(std::span<const std::uint8_t> data);
PublicKey parse_public(std::span<const std::uint8_t> data);

}  // namespace ldgm::keygen
