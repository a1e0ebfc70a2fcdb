#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mcekem/hybrid.hpp"
#include "mcekem/kat.hpp"
#include "mcekem/kem.hpp"
#include "mcekem/serial.hpp"

namespace {

using namespace mcekem;

struct ParamFlags {
    uint32_t n = 0, k = 0, w = 0, ell_k = 256, row_weight = 0;
    std::string family = "toy";
    uint64_t seed = 0;

    void attach(CLI::App* cmd, bool with_family = true) {
        cmd->add_option("-n", n, "code length")->required();
        cmd->add_option("-k", k, "code dimension")->required();
        cmd->add_option("-w", w, "error weight")->required();
        cmd->add_option("--ell-k", ell_k, "shared-key length in bits");
        cmd->add_option("--seed", seed, "deterministic seed");
        if (with_family) {
            cmd->add_option("--family", family, "code family: toy or mdpc");
            cmd->add_option("--row-weight", row_weight, "parity row weight (mdpc)");
        }
    }

    SystemParams params() const { return {2, n, k, w, ell_k, 0}; }

    CodeFamily parsed_family() const {
        if (family == "toy") return CodeFamily::toy;
        if (family == "mdpc") return CodeFamily::mdpc;
        throw std::runtime_error("unknown family '" + family + "' (expected toy or mdpc)");
    }
};

void check_headers_match(const SystemParams& a, const SystemParams& b, const char* what) {
    if (!(a == b)) throw std::runtime_error(std::string("header mismatch: ") + what);
}

int cmd_keygen(const ParamFlags& flags, const std::string& pub_path,
               const std::string& priv_path) {
    Rng rng(flags.seed);
    KemKeyPair keys = kem_keygen(flags.params(), flags.parsed_family(), rng, flags.row_weight);
    write_file(pub_path, serialize_public_key(keys.pub, flags.parsed_family()));
    write_file(priv_path, serialize_private_key(keys.priv));
    return 0;
}

int cmd_encaps(const std::string& pub_path, uint64_t seed, const std::string& ct_path,
               const std::string& key_path) {
    auto [pk, family] = parse_public_key(read_file(pub_path));
    Rng rng(seed);
    auto [key, ct] = encaps(pk, rng);
    write_file(ct_path, serialize_ciphertext(ct, pk.params, family));
    write_file(key_path, to_hex(key.bits.to_bytes()) + "\n");
    return 0;
}

int cmd_decaps(const std::string& priv_path, const std::string& ct_path,
               const std::string& key_path) {
    KemPrivateKey sk = parse_private_key(read_file(priv_path));
    auto [ct, ct_params] = parse_ciphertext(read_file(ct_path));
    check_headers_match(sk.params, ct_params, "ciphertext was made under different parameters");
    SharedKey key = decaps(sk, ct);
    write_file(key_path, to_hex(key.bits.to_bytes()) + "\n");
    return 0;
}

int cmd_encrypt(const std::string& pub_path, uint64_t seed, const std::string& in_path,
                const std::string& out_path) {
    auto [pk, family] = parse_public_key(read_file(pub_path));
    auto message = read_file(in_path);
    Rng rng(seed);
    HybridCiphertext hct = hybrid_encrypt(pk, message, rng);
    write_file(out_path, serialize_hybrid(hct, pk.params, family));
    return 0;
}

int cmd_decrypt(const std::string& priv_path, const std::string& in_path,
                const std::string& out_path) {
    KemPrivateKey sk = parse_private_key(read_file(priv_path));
    auto [hct, ct_params] = parse_hybrid(read_file(in_path));
    check_headers_match(sk.params, ct_params, "ciphertext was made under different parameters");
    auto message = hybrid_decrypt(sk, hct);
    if (!message) throw std::runtime_error("authentication failure: message rejected");
    write_file(out_path, *message);
    return 0;
}

int cmd_kat(const ParamFlags& flags, uint64_t count, const std::string& out_path, bool check) {
    KatConfig cfg{flags.params(), flags.parsed_family(), flags.row_weight, count, flags.seed};
    write_file(out_path, generate_kat(cfg));
    if (check) {
        KatCheck result = kat_self_check(cfg);
        std::cout << "self-check: " << result.vectors << " vectors, " << result.key_mismatches
                  << " key mismatches\n";
        if (result.key_mismatches > 0 && cfg.family == CodeFamily::toy)
            throw std::runtime_error("toy KAT self-check failed");
    }
    return 0;
}

int cmd_dfr(const ParamFlags& flags, uint64_t trials) {
    if (flags.parsed_family() != CodeFamily::mdpc)
        throw std::runtime_error("toy decoder is exact; DFR undefined");
    SystemParams params = flags.params();
    Rng master(flags.seed);
    Rng keygen_rng = master.fork(0);
    KemKeyPair keys = kem_keygen(params, CodeFamily::mdpc, keygen_rng, flags.row_weight);
    const auto& code = std::get<MdpcCode>(keys.priv.delta.body);

    uint64_t failures = 0, max_iterations = 0, total_iterations = 0;
    Rng trial_master = master.fork(1);
    for (uint64_t i = 0; i < trials; ++i) {
        Rng trial_rng = trial_master.fork(i);
        BitVector x = random_bit_vector(params.k, trial_rng);
        BitVector e = sample_constant_weight(params.n, params.w, trial_rng);
        BitVector y = vec_add(mat_vec_mul(x, keys.pub.g), e);
        BitflipResult res = bitflip_decode(code.parity_rows, params.n, y, code.max_iterations,
                                           code.threshold_schedule, params.w);
        if (!res.error || *res.error != e) ++failures;
        total_iterations += res.iterations;
        max_iterations = std::max(max_iterations, uint64_t(res.iterations));
    }

    std::printf("trials          %llu\n", static_cast<unsigned long long>(trials));
    std::printf("failures        %llu\n", static_cast<unsigned long long>(failures));
    std::printf("failure_rate    %.6f\n", trials ? double(failures) / double(trials) : 0.0);
    std::printf("mean_iterations %.3f\n",
                trials ? double(total_iterations) / double(trials) : 0.0);
    std::printf("max_iterations  %llu\n", static_cast<unsigned long long>(max_iterations));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"McEliece-style KEM with implicit rejection: keys, encapsulation, hybrid "
                 "encryption, KAT fixtures"};
    app.require_subcommand(1);

    ParamFlags kg_flags;
    std::string kg_pub, kg_priv;
    auto* keygen = app.add_subcommand("keygen", "generate a keypair");
    kg_flags.attach(keygen);
    keygen->add_option("--pub", kg_pub, "public key output path")->required();
    keygen->add_option("--priv", kg_priv, "private key output path")->required();

    std::string enc_pub, enc_ct, enc_key;
    uint64_t enc_seed = 0;
    auto* encaps_cmd = app.add_subcommand("encaps", "encapsulate a fresh shared key");
    encaps_cmd->add_option("--pub", enc_pub)->required();
    encaps_cmd->add_option("--seed", enc_seed);
    encaps_cmd->add_option("--ct", enc_ct, "ciphertext output path")->required();
    encaps_cmd->add_option("--key", enc_key, "shared key output path (hex)")->required();

    std::string dec_priv, dec_ct, dec_key;
    auto* decaps_cmd = app.add_subcommand("decaps", "decapsulate (always yields a key)");
    decaps_cmd->add_option("--priv", dec_priv)->required();
    decaps_cmd->add_option("--ct", dec_ct)->required();
    decaps_cmd->add_option("--key", dec_key)->required();

    std::string he_pub, he_in, he_out;
    uint64_t he_seed = 0;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "hybrid-encrypt a file");
    encrypt_cmd->add_option("--pub", he_pub)->required();
    encrypt_cmd->add_option("--seed", he_seed);
    encrypt_cmd->add_option("--in", he_in)->required();
    encrypt_cmd->add_option("--out", he_out)->required();

    std::string hd_priv, hd_in, hd_out;
    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt and verify a hybrid ciphertext");
    decrypt_cmd->add_option("--priv", hd_priv)->required();
    decrypt_cmd->add_option("--in", hd_in)->required();
    decrypt_cmd->add_option("--out", hd_out)->required();

    ParamFlags kat_flags;
    uint64_t kat_count = 0;
    std::string kat_out;
    bool kat_check = false;
    auto* kat_cmd = app.add_subcommand("kat", "emit known-answer vectors");
    kat_flags.attach(kat_cmd);
    kat_cmd->add_option("--count", kat_count, "number of vectors")->required();
    kat_cmd->add_option("--out", kat_out)->required();
    kat_cmd->add_flag("--check", kat_check, "decapsulate every vector against its own key");

    ParamFlags dfr_flags;
    uint64_t dfr_trials = 1000;
    auto* dfr_cmd = app.add_subcommand("dfr", "measure the decoding failure rate");
    dfr_flags.attach(dfr_cmd);
    dfr_cmd->add_option("--trials", dfr_trials);

    CLI11_PARSE(app, argc, argv);

    try {
        if (keygen->parsed()) return cmd_keygen(kg_flags, kg_pub, kg_priv);
        if (encaps_cmd->parsed()) return cmd_encaps(enc_pub, enc_seed, enc_ct, enc_key);
        if (decaps_cmd->parsed()) return cmd_decaps(dec_priv, dec_ct, dec_key);
        if (encrypt_cmd->parsed()) return cmd_encrypt(he_pub, he_seed, he_in, he_out);
        if (decrypt_cmd->parsed()) return cmd_decrypt(hd_priv, hd_in, hd_out);
        if (kat_cmd->parsed()) return cmd_kat(kat_flags, kat_count, kat_out, kat_check);
        if (dfr_cmd->parsed()) return cmd_dfr(dfr_flags, dfr_trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
