#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ldgm/cryptanalysis.hpp"
#include "ldgm/errors.hpp"
#include "ldgm/params.hpp"
#include "ldgm/util/bytes.hpp"

namespace {

using namespace ldgm;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

params::ParameterSet lookup(const std::string& id) {
    auto ps = params::find(id);
    if (!ps) {
        throw ParameterError("unknown parameter set '" + id + "'");
    }
    return *ps;
}

crypto::Seed seed_or_random(const std::string& hex) {
    if (!hex.empty()) {
        return crypto::Seed::from_hex(hex);
    }
    auto seed = crypto::Seed::random();
    std::cerr << "seed " << seed.hex() << "\n";
    return seed;
}

json report_json(const params::SecurityReport& r) {
    return {{"id", r.id},
            {"key_size_bits", r.key_size_bits},
            {"key_size_kib", r.key_size_kib},
            {"log2_ns", r.log2_ns},
            {"log2_awc", r.log2_awc},
            {"log2_birthday", r.log2_birthday},
            {"isd_escape_log2", r.isd_escape_log2},
            {"sig_weight_bound", r.sig_weight_bound}};
}

struct AttackArgs {
    std::string kind;
    std::string set;
    std::string seed;
    std::optional<std::uint64_t> budget;
    std::optional<std::size_t> transcript;
    bool baseline = false;
    bool no_codeword = false;
    std::string artifacts_path;
    std::string format = "text";
};

attack::AttackOutcome run_linearity(const params::ParameterSet& ps, const crypto::Seed& seed, const AttackArgs& a) {
    const auto kp = keygen::generate(ps, seed);
    const sign::Verifier verifier(kp.pk);
    const std::size_t count = a.transcript.value_or(64);
    sign::SignOptions oracle;
    oracle.mask_codeword = false;
    const auto target = attack::message_bytes("target");
    auto out = attack::linearity_forge(attack::collect_transcript(kp.sk, count, oracle), verifier, target);
    // Same messages, hence the same syndromes and the same combination, against the masked signer.
    const auto masked = attack::linearity_forge(attack::collect_transcript(kp.sk, count, {}), verifier, target);
    out.note += "; masked signer: " + std::string(masked.success ? "accepted" : "rejected") + " (" +
                sign::to_string(masked.verdict.reason) + ")";
    return out;
}

attack::AttackOutcome run_rightinv(const params::ParameterSet& ps, const crypto::Seed& seed, const AttackArgs& a) {
    const auto kp = keygen::generate(ps, seed);
    const attack::RightInverse ri(kp.pk);
    const sign::Verifier verifier(kp.pk);
    const std::uint64_t trials = a.budget.value_or(1);
    attack::AttackOutcome total;
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        auto o = attack::right_inverse_forge(ri, verifier, attack::message_bytes("target-" + std::to_string(i)));
        if (!ri.available()) {
            return o;
        }
        accepted += o.success ? 1 : 0;
        total.work += i == 0 ? o.work : 0;
        total.iterations += 1;
        if (o.forgery) {
            total.artifacts.push_back(*o.forgery);
        }
        total.note = o.note;
        total.verdict = o.verdict;
    }
    total.success = accepted > 0;
    total.note += "; accepted " + std::to_string(accepted) + "/" + std::to_string(trials);
    return total;
}

attack::AttackOutcome run_decompose(const params::ParameterSet& ps, const crypto::Seed& seed, const AttackArgs& a) {
    keygen::KeygenOptions opts;
    opts.masking = keygen::Masking::permutation;
    const auto kp = keygen::generate(ps, seed, opts);
    sign::SignOptions sign_opts;
    sign_opts.mask_codeword = !a.no_codeword;
    const auto transcript = attack::collect_transcript(kp.sk, a.transcript.value_or(128), sign_opts);
    return attack::support_decompose(transcript, attack::masked_view(ps, opts.masking));
}

attack::AttackOutcome run_isdstrip(const params::ParameterSet& ps, const crypto::Seed& seed, const AttackArgs& a) {
    const auto kp = keygen::generate(ps, seed);
    const auto transcript = attack::collect_transcript(kp.sk, 1, {});
    auto rng = crypto::derive_stream(seed, "attack/isd", 0);
    return attack::isd_codeword_strip(transcript.front(), kp.pk, a.budget.value_or(1000), rng);
}

attack::AttackOutcome run_keyrec(const params::ParameterSet& ps, const crypto::Seed& seed, const AttackArgs& a) {
    auto rng = crypto::derive_stream(seed, "attack/keyrec", 0);
    const std::size_t target = ps.w_g * ps.m_S;
    const std::uint64_t budget = a.budget.value_or(1'000'000);
    if (a.baseline) {
        return attack::low_weight_row_recovery(attack::random_parity_check(ps.r(), ps.n, rng), target, budget, rng);
    }
    if (ps.n > attack::kLowWeightSearchMaxN) {
        throw ParameterError("keyrec is limited to codes of length <= " +
                             std::to_string(attack::kLowWeightSearchMaxN));
    }
    const auto kp = keygen::generate(ps, seed);
    return attack::low_weight_row_recovery(kp.pk.H_pub.expand(), target, budget, rng);
}

int run_attack(const AttackArgs& a) {
    const auto ps = lookup(a.set);
    const auto seed = seed_or_random(a.seed);
    attack::AttackOutcome out;
    if (a.kind == "linearity") {
        out = run_linearity(ps, seed, a);
    } else if (a.kind == "rightinv") {
        out = run_rightinv(ps, seed, a);
    } else if (a.kind == "decompose") {
        out = run_decompose(ps, seed, a);
    } else if (a.kind == "isdstrip") {
        out = run_isdstrip(ps, seed, a);
    } else {
        out = run_keyrec(ps, seed, a);
    }
    json artifacts = json::array();
    for (const auto& v : out.artifacts) {
        artifacts.push_back(v.support());
    }
    json record = {{"attack", a.kind},       {"params", ps.id},        {"success", out.success},
                   {"work", out.work},       {"iterations", out.iterations},
                   {"verdict", sign::to_string(out.verdict.reason)}, {"note", out.note}};
    if (!a.artifacts_path.empty()) {
        json file = record;
        file["artifacts"] = artifacts;
        const auto text = file.dump(2) + "\n";
        util::write_file(a.artifacts_path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    }
    record["artifacts"] = a.artifacts_path.empty() ? "-" : a.artifacts_path;
    if (a.format == "json") {
        std::cout << record.dump(2) << "\n";
    } else {
        std::cout << "attack=" << a.kind << " params=" << ps.id << " success=" << (out.success ? "true" : "false")
                  << " work=" << out.work << " iterations=" << out.iterations
                  << " artifacts=" << record["artifacts"].get<std::string>() << "\n"
                  << "note: " << out.note << "\n";
    }
    return out.success ? kOk : kRejected;
}

int run(int argc, char** argv) {
    CLI::App app{"LDGM sparse-syndrome signatures"};
    app.require_subcommand(1);

    auto* params_cmd = app.add_subcommand("params", "Parameter sets");
    params_cmd->require_subcommand(1);
    auto* info = params_cmd->add_subcommand("info", "Key size and security estimates");
    std::string info_set;
    std::string info_format = "text";
    info->add_option("set", info_set, "Parameter set id")->required();
    info->add_option("--format", info_format)->check(CLI::IsMember({"text", "json"}));

    auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
    std::string kg_set, kg_seed, kg_sk, kg_pk;
    keygen_cmd->add_option("--params", kg_set)->required();
    keygen_cmd->add_option("--seed", kg_seed, "64 hex characters; random if omitted");
    keygen_cmd->add_option("--sk", kg_sk, "Private key path (default <set>.sk)");
    keygen_cmd->add_option("--pk", kg_pk, "Public key path (default <set>.pk)");

    auto* sign_cmd = app.add_subcommand("sign", "Sign a file");
    std::string sg_key, sg_in, sg_out;
    sign_cmd->add_option("--key", sg_key, "Private key")->required();
    sign_cmd->add_option("--in", sg_in, "Message file")->required();
    sign_cmd->add_option("--out", sg_out, "Signature file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
    std::string vf_key, vf_in, vf_sig;
    verify_cmd->add_option("--key", vf_key, "Public key")->required();
    verify_cmd->add_option("--in", vf_in, "Message file")->required();
    verify_cmd->add_option("--sig", vf_sig, "Signature file")->required();

    auto* attack_cmd = app.add_subcommand("attack", "Run an attack demonstration");
    AttackArgs aa;
    attack_cmd->add_option("kind", aa.kind)
        ->required()
        ->check(CLI::IsMember({"linearity", "rightinv", "decompose", "isdstrip", "keyrec"}));
    attack_cmd->add_option("--params", aa.set)->required();
    attack_cmd->add_option("--seed", aa.seed, "64 hex characters; random if omitted");
    attack_cmd->add_option("--budget", aa.budget, "Iterations (isdstrip, keyrec) or trials (rightinv)");
    attack_cmd->add_option("--transcript", aa.transcript, "Signatures collected from the oracle");
    attack_cmd->add_flag("--baseline", aa.baseline, "keyrec: search a random code of the same shape");
    attack_cmd->add_flag("--no-codeword", aa.no_codeword, "decompose: oracle also drops the codeword mask");
    attack_cmd->add_option("--artifacts", aa.artifacts_path, "Write the outcome and artifacts as JSON");
    attack_cmd->add_option("--format", aa.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (info->parsed()) {
        const auto ps = lookup(info_set);
        const auto report = params::security_report(ps);
        if (info_format == "json") {
            std::cout << report_json(report).dump(2) << "\n";
        } else {
            std::cout << params::format_text(ps, report) << params::format_record(report) << "\n";
        }
        return kOk;
    }
    if (keygen_cmd->parsed()) {
        const auto ps = lookup(kg_set);
        const auto kp = keygen::generate(ps, seed_or_random(kg_seed));
        for (const auto& w : kp.warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        util::write_file(kg_sk.empty() ? ps.id + ".sk" : kg_sk, keygen::serialize(kp.sk));
        util::write_file(kg_pk.empty() ? ps.id + ".pk" : kg_pk, keygen::serialize(kp.pk));
        return kOk;
    }
    if (sign_cmd->parsed()) {
        const auto sk = keygen::parse_private(util::read_file(sg_key));
        const auto sig = sign::sign(util::read_file(sg_in), sk);
        util::write_file(sg_out, sign::serialize(sig));
        return kOk;
    }
    if (verify_cmd->parsed()) {
        const sign::Verifier verifier(keygen::parse_public(util::read_file(vf_key)));
        const auto verdict = verifier.verify_bytes(util::read_file(vf_in), util::read_file(vf_sig));
        if (!verdict) {
            std::cerr << "reject: " << sign::to_string(verdict.reason) << "\n";
            return kRejected;
        }
        std::cout << "accept\n";
        return kOk;
    }
    return run_attack(aa);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
