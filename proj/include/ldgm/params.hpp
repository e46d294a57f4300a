#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ldgm::params {

using BigInt = boost::multiprecision::cpp_int;

struct ParameterSet {
    std::string id;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t p = 1;
    std::size_t w = 0;    // public syndrome weight
    std::size_t w_g = 0;  // row weight of G
    std::size_t w_c = 0;  // target weight of the codeword mask
    std::size_t z = 0;    // rows of b
    std::size_t m_T = 0;
    std::size_t m_S = 0;
    std::size_t x = 0;  // digest bits
    std::size_t y = 0;  // counter bits
    std::size_t d = 2;

    std::size_t r() const noexcept { return n - k; }
    std::size_t n0() const noexcept { return n / p; }
    std::size_t k0() const noexcept { return k / p; }
    std::size_t r0() const noexcept { return r() / p; }
    std::size_t m() const noexcept { return m_T * m_S; }
    /// Rows of G summed into one codeword mask.
    std::size_t mask_rows() const noexcept { return w_c / w_g; }
    /// Largest weight a verifier accepts: (m_T w + w_c) m_S.
    std::size_t signature_weight_bound() const noexcept { return (m_T * w + w_c) * m_S; }
};

/// Throws ParameterError naming the first violated constraint.
void validate(const ParameterSet& ps);

/// The three table sets plus toy-1.
const std::vector<ParameterSet>& builtin_sets();
std::optional<ParameterSet> find(std::string_view id);

BigInt binomial(std::size_t n, std::size_t k);
double log2(const BigInt& v);
/// log2 C(n, k) as a sum of per-factor logarithms; the cross-check for log2(binomial()).
double log2_binomial_by_factors(std::size_t n, std::size_t k);

std::size_t key_size_bits(const ParameterSet& ps);
/// Key size in KiB (8192 bits) rounded to the nearest integer.
std::size_t key_size_kib(const ParameterSet& ps);

struct Count {
    BigInt value;   // floor of the (possibly rational) estimate
    double log2;    // log2 of the unrounded estimate
};

/// floor(C(r, w) / 2^z).
Count signature_count(const ParameterSet& ps);
/// C(k, w_c / w_g).
Count codeword_count(const ParameterSet& ps);

/// -log2 [ C(n - m_T m_S w, k) / C(n, k) ]. Throws ParameterError when m_T m_S w >= n - k.
double isd_escape_log2(const ParameterSet& ps);
double isd_escape_log2_by_factors(const ParameterSet& ps);

struct SecurityReport {
    std::string id;
    std::size_t key_size_bits = 0;
    std::size_t key_size_kib = 0;
    double log2_ns = 0;
    double log2_awc = 0;
    double log2_birthday = 0;
    double isd_escape_log2 = 0;
    std::size_t sig_weight_bound = 0;
};

SecurityReport security_report(const ParameterSet& ps);

/// Aligned, human-readable table.
std::string format_text(const ParameterSet& ps, const SecurityReport& report);
/// Single line of space-separated key=value pairs.
std::string format_record(const SecurityReport& report);

}  // namespace ldgm::params
