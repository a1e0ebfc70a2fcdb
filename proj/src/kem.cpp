#include "mcekem/kem.hpp"

#include <stdexcept>

namespace mcekem {

KemKeyPair kem_keygen(const SystemParams& params, CodeFamily family, Rng& rng,
                      uint32_t row_weight) {
    PkeKeyPair pke = pke_keygen(params, family, rng, row_weight);
    BitVector s = random_bit_vector(params.k, rng);
    return {KemPublicKey{std::move(pke.pub.g), params},
            KemPrivateKey{std::move(pke.priv.delta), std::move(s), params}};
}

std::pair<SharedKey, KemCiphertext> encaps(const KemPublicKey& pk, Rng& rng, KeyDeriver& kdf) {
    const SystemParams& p = pk.params;
    BitVector x = random_bit_vector(p.k, rng);
    BitVector e = sample_constant_weight(p.n, p.w, rng);
    SharedKey key{kdf.derive(BitVector::concat(x, e), p.ell_k)};
    KemCiphertext ct{vec_add(mat_vec_mul(x, pk.g), e)};
    return {std::move(key), std::move(ct)};
}

std::pair<SharedKey, KemCiphertext> encaps(const KemPublicKey& pk, Rng& rng) {
    XofKdf kdf;
    return encaps(pk, rng, kdf);
}

SharedKey decaps(const KemPrivateKey& sk, const KemCiphertext& ct, KeyDeriver& kdf) {
    const SystemParams& p = sk.params;
    if (ct.psi0.length() != p.n) throw std::invalid_argument("decaps: wrong ciphertext length");
    DecodeOutcome outcome = decode(sk.delta, ct.psi0);
    BitVector payload = outcome.success ? BitVector::concat(outcome.x, outcome.e)
                                        : BitVector::concat(sk.s, ct.psi0);
    return SharedKey{kdf.derive(payload, p.ell_k)};
}

SharedKey decaps(const KemPrivateKey& sk, const KemCiphertext& ct) {
    XofKdf kdf;
    return decaps(sk, ct, kdf);
}

} // namespace mcekem
