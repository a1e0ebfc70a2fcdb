#pragma once
#include <optional>
#include <utility>

#include "mcekem/codes.hpp"

namespace mcekem {

struct PkePublicKey {
    BitMatrix g; // systematic k x n generator
    SystemParams params;
    bool operator==(const PkePublicKey&) const = default;
};

struct PkePrivateKey {
    CodeDescription delta;
    SystemParams params;
    bool operator==(const PkePrivateKey&) const = default;
};

struct PkeKeyPair {
    PkePublicKey pub;
    PkePrivateKey priv;
};

// row_weight applies to the mdpc family only.
PkeKeyPair pke_keygen(const SystemParams& params, CodeFamily family, Rng& rng,
                      uint32_t row_weight = 0);

// y = xG + e with e fresh uniform of weight exactly w.
BitVector pke_encrypt(const PkePublicKey& pk, const BitVector& x, Rng& rng);

// Nearest-codeword message, or empty when decoding fails.
std::optional<BitVector> pke_decrypt(const PkePrivateKey& sk, const BitVector& y);

} // namespace mcekem
