#pragma once
#include <utility>

#include "mcekem/kdf.hpp"
#include "mcekem/pke.hpp"

namespace mcekem {

struct KemPublicKey {
    BitMatrix g;
    SystemParams params;
    bool operator==(const KemPublicKey&) const = default;
};

struct KemPrivateKey {
    CodeDescription delta;
    BitVector s; // implicit-rejection secret, length k
    SystemParams params;
    bool operator==(const KemPrivateKey&) const = default;
};

struct KemCiphertext {
    BitVector psi0; // any length-n word is decapsulated; weight is not checked
    bool operator==(const KemCiphertext&) const = default;
};

struct SharedKey {
    BitVector bits; // exactly ell_k bits
    bool operator==(const SharedKey&) const = default;
};

struct KemKeyPair {
    KemPublicKey pub;
    KemPrivateKey priv;
};

KemKeyPair kem_keygen(const SystemParams& params, CodeFamily family, Rng& rng,
                      uint32_t row_weight = 0);

// Draws x, e; returns (K, psi0) with K derived from x||e and psi0 = xG + e.
std::pair<SharedKey, KemCiphertext> encaps(const KemPublicKey& pk, Rng& rng, KeyDeriver& kdf);
std::pair<SharedKey, KemCiphertext> encaps(const KemPublicKey& pk, Rng& rng);

// Total: decode success derives from x||e, failure derives from s||psi0.
// No caller can observe which path was taken.
SharedKey decaps(const KemPrivateKey& sk, const KemCiphertext& ct, KeyDeriver& kdf);
SharedKey decaps(const KemPrivateKey& sk, const KemCiphertext& ct);

} // namespace mcekem
