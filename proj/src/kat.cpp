#include "mcekem/kat.hpp"

#include <sstream>

#include "mcekem/serial.hpp"

namespace mcekem {

namespace {

struct KatVector {
    std::vector<uint8_t> seed;
    KemKeyPair keys;
    SharedKey ss;
    KemCiphertext ct;
};

KatVector make_vector(const KatConfig& cfg, Rng& master) {
    KatVector v;
    v.seed.resize(16);
    master.fill(v.seed);
    Rng vector_rng{std::span<const uint8_t>(v.seed)};
    Rng keygen_rng = vector_rng.fork(0);
    Rng encaps_rng = vector_rng.fork(1);
    v.keys = kem_keygen(cfg.params, cfg.family, keygen_rng, cfg.row_weight);
    std::tie(v.ss, v.ct) = encaps(v.keys.pub, encaps_rng);
    return v;
}

} // namespace

std::string generate_kat(const KatConfig& cfg) {
    cfg.params.validate();
    std::ostringstream out;
    out << "# mcekem known-answer vectors\n";
    out << "family = " << (cfg.family == CodeFamily::toy ? "toy" : "mdpc") << "\n";
    out << "n = " << cfg.params.n << "\n";
    out << "k = " << cfg.params.k << "\n";
    out << "w = " << cfg.params.w << "\n";
    out << "ell_k = " << cfg.params.ell_k << "\n";
    if (cfg.family == CodeFamily::mdpc) out << "row_weight = " << cfg.row_weight << "\n";
    out << "vectors = " << cfg.count << "\n";

    Rng master(cfg.seed);
    for (uint64_t i = 0; i < cfg.count; ++i) {
        KatVector v = make_vector(cfg, master);
        out << "\n";
        out << "count = " << i << "\n";
        out << "seed = " << to_hex(v.seed) << "\n";
        out << "pk = " << to_hex(public_key_payload(v.keys.pub)) << "\n";
        out << "sk = " << to_hex(private_key_payload(v.keys.priv)) << "\n";
        out << "ct = " << to_hex(ciphertext_payload(v.ct)) << "\n";
        out << "ss = " << to_hex(v.ss.bits.to_bytes()) << "\n";
    }
    return out.str();
}

KatCheck kat_self_check(const KatConfig& cfg) {
    cfg.params.validate();
    KatCheck check;
    check.vectors = cfg.count;
    Rng master(cfg.seed);
    for (uint64_t i = 0; i < cfg.count; ++i) {
        KatVector v = make_vector(cfg, master);
        if (decaps(v.keys.priv, v.ct) != v.ss) ++check.key_mismatches;
    }
    return check;
}

} // namespace mcekem
