#include "ldgm/params.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ldgm/errors.hpp"

namespace ldgm::params {

namespace {

void require(bool ok, const std::string& id, const char* what) {
    if (!ok) {
        throw ParameterError(id + ": " + what);
    }
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

void validate(const ParameterSet& ps) {
    const auto& id = ps.id;
    require(ps.n > 0 && ps.k > 0 && ps.k < ps.n, id, "need 0 < k < n");
    require(ps.p >= 1 && ps.n % ps.p == 0 && ps.k % ps.p == 0, id, "p must divide n, k and r");
    require(ps.w_g >= 1 && ps.w_g < ps.n, id, "row weight w_g must be in [1, n)");
    require(ps.w_c >= ps.w_g && ps.w_c % ps.w_g == 0, id, "w_g must divide w_c");
    require(ps.mask_rows() <= ps.k, id, "mask needs more rows than G has");
    require(ps.z >= 1 && ps.z < ps.r0(), id, "need 1 <= z < r0");
    require(ps.d >= 2, id, "d must be at least 2");
    require(ps.w >= ps.d, id, "w must be at least d");
    require(ps.w <= ps.r(), id, "w exceeds r");
    require(ps.m_T >= 1 && ps.m_T <= ps.r0(), id, "m_T must be in [1, r0]");
    require(ps.m_S >= 1 && ps.m_S <= ps.n0(), id, "m_S must be in [1, n0]");
    require(ps.x >= 1 && ps.x <= 512, id, "digest width x must be in [1, 512]");
    require(ps.y >= 1 && ps.y <= 32, id, "counter width y must be in [1, 32]");
    require(binomial(ps.r(), ps.w) >= (BigInt(1) << (ps.x + ps.y)), id, "C(r, w) < 2^(x+y)");
}

const std::vector<ParameterSet>& builtin_sets() {
    static const std::vector<ParameterSet> sets = [] {
        std::vector<ParameterSet> v{
            {"ldgm-80", 9800, 4900, 50, 18, 20, 160, 2, 1, 9, 160, 8, 2},
            {"ldgm-120", 24960, 10000, 80, 23, 25, 325, 2, 1, 14, 224, 16, 2},
            {"ldgm-160", 46000, 16000, 100, 29, 31, 465, 2, 1, 20, 288, 16, 2},
            {"toy-1", 24, 12, 4, 2, 3, 6, 1, 1, 2, 4, 2, 2},
        };
        for (const auto& ps : v) {
            validate(ps);
        }
        return v;
    }();
    return sets;
}

std::optional<ParameterSet> find(std::string_view id) {
    for (const auto& ps : builtin_sets()) {
        if (ps.id == id) {
            return ps;
        }
    }
    return std::nullopt;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

double log2(const BigInt& v) {
    if (v <= 0) {
        return -INFINITY;
    }
    const std::size_t msb = boost::multiprecision::msb(v);
    if (msb < 64) {
        return std::log2(static_cast<double>(v.convert_to<std::uint64_t>()));
    }
    const auto top = static_cast<std::uint64_t>(v >> (msb - 63));
    return static_cast<double>(msb - 63) + std::log2(static_cast<double>(top));
}

double log2_binomial_by_factors(std::size_t n, std::size_t k) {
    if (k > n) {
        return -INFINITY;
    }
    k = std::min(k, n - k);
    long double acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += std::log2(static_cast<long double>(n - i)) - std::log2(static_cast<long double>(i + 1));
    }
    return static_cast<double>(acc);
}

std::size_t key_size_bits(const ParameterSet& ps) { return ps.r() * ps.n / ps.p; }

std::size_t key_size_kib(const ParameterSet& ps) { return (key_size_bits(ps) + 4096) / 8192; }

Count signature_count(const ParameterSet& ps) {
    const BigInt c = binomial(ps.r(), ps.w);
    return {c >> ps.z, log2(c) - static_cast<double>(ps.z)};
}

Count codeword_count(const ParameterSet& ps) {
    BigInt c = binomial(ps.k, ps.mask_rows());
    const double l = log2(c);
    return {std::move(c), l};
}

double isd_escape_log2(const ParameterSet& ps) {
    const std::size_t e = ps.m() * ps.w;
    if (e >= ps.r()) {
        throw ParameterError(ps.id + ": m_T m_S w must be below n - k");
    }
    // C(n-e, k) / C(n, k) = prod_{i<e} (n-k-i) / (n-i), kept as an exact fraction.
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < e; ++i) {
        num *= ps.r() - i;
        den *= ps.n - i;
    }
    return log2(den) - log2(num);
}

double isd_escape_log2_by_factors(const ParameterSet& ps) {
    const std::size_t e = ps.m() * ps.w;
    if (e >= ps.r()) {
        throw ParameterError(ps.id + ": m_T m_S w must be below n - k");
    }
    return log2_binomial_by_factors(ps.n, ps.k) - log2_binomial_by_factors(ps.n - e, ps.k);
}

SecurityReport security_report(const ParameterSet& ps) {
    SecurityReport r;
    r.id = ps.id;
    r.key_size_bits = key_size_bits(ps);
    r.key_size_kib = key_size_kib(ps);
    r.log2_ns = signature_count(ps).log2;
    r.log2_awc = codeword_count(ps).log2;
    r.log2_birthday = r.log2_ns / 2;
    r.isd_escape_log2 = isd_escape_log2(ps);
    r.sig_weight_bound = ps.signature_weight_bound();
    return r;
}

std::string format_text(const ParameterSet& ps, const SecurityReport& r) {
    std::ostringstream out;
    auto line = [&out](const char* key, const std::string& value) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %-22s %s\n", key, value.c_str());
        out << buf;
    };
    out << "parameter set " << ps.id << "\n";
    line("n, k, r", std::to_string(ps.n) + ", " + std::to_string(ps.k) + ", " + std::to_string(ps.r()));
    line("p (n0, k0, r0)", std::to_string(ps.p) + " (" + std::to_string(ps.n0()) + ", " + std::to_string(ps.k0()) +
                               ", " + std::to_string(ps.r0()) + ")");
    line("w, w_g, w_c", std::to_string(ps.w) + ", " + std::to_string(ps.w_g) + ", " + std::to_string(ps.w_c));
    line("z, m_T, m_S", std::to_string(ps.z) + ", " + std::to_string(ps.m_T) + ", " + std::to_string(ps.m_S));
    line("x, y", std::to_string(ps.x) + ", " + std::to_string(ps.y));
    line("key size", std::to_string(r.key_size_bits) + " bits (" + std::to_string(r.key_size_kib) + " KiB)");
    line("log2 Ns", fixed(r.log2_ns, 2));
    line("log2 A_wc", fixed(r.log2_awc, 2));
    line("log2 birthday", fixed(r.log2_birthday, 2));
    line("isd escape (-log2)", fixed(r.isd_escape_log2, 2));
    line("signature weight bound", std::to_string(r.sig_weight_bound));
    return out.str();
}

std::string format_record(const SecurityReport& r) {
    return "set=" + r.id + " key_size_bits=" + std::to_string(r.key_size_bits) +
           " key_size_kib=" + std::to_string(r.key_size_kib) + " log2_ns=" + fixed(r.log2_ns, 4) +
           " log2_awc=" + fixed(r.log2_awc, 4) + " log2_birthday=" + fixed(r.log2_birthday, 4) +
           " isd_escape_log2=" + fixed(r.isd_escape_log2, 4) + " sig_weight_bound=" + std::to_string(r.sig_weight_bound);
}

}  // namespace ldgm::params
