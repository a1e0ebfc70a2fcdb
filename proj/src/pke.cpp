#include "mcekem/pke.hpp"

#include <stdexcept>

namespace mcekem {

PkeKeyPair pke_keygen(const SystemParams& params, CodeFamily family, Rng& rng,
                      uint32_t row_weight) {
    params.validate();
    auto [delta, g] = family == CodeFamily::toy ? toy_keygen(params, rng)
                                                : mdpc_keygen(params, row_weight, rng);
    return {PkePublicKey{std::move(g), params}, PkePrivateKey{std::move(delta), params}};
}

BitVector pke_encrypt(const PkePublicKey& pk, const BitVector& x, Rng& rng) {
    if (x.length() != pk.params.k) throw std::invalid_argument("pke_encrypt: wrong message length");
    BitVector e = sample_constant_weight(pk.params.n, pk.params.w, rng);
    return vec_add(mat_vec_mul(x, pk.g), e);
}

std::optional<BitVector> pke_decrypt(const PkePrivateKey& sk, const BitVector& y) {
    DecodeOutcome outcome = decode(sk.delta, y);
    if (!outcome.success) return std::nullopt;
    return outcome.x;
}

} // namespace mcekem
