#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcekem/kem.hpp"

namespace mcekem {

constexpr size_t hybrid_tag_bytes = 32;

struct HybridCiphertext {
    KemCiphertext kem_ct;
    std::vector<uint8_t> dem_ct; // same length as the plaintext
    std::array<uint8_t, hybrid_tag_bytes> tag{};
    bool operator==(const HybridCiphertext&) const = default;
};

// Encapsulates a fresh 256-bit key, splits it into disjoint stream and MAC
// halves, XOR-encrypts, then tags kem_ct || dem_ct (encrypt-then-MAC).
// Requires params.ell_k = 256.
HybridCiphertext hybrid_encrypt(const KemPublicKey& pk, std::span<const uint8_t> message,
                                Rng& rng);

// Empty on tag mismatch. Decapsulation itself never fails, so a tampered
// kem_ct surfaces only here, as an authentication failure.
std::optional<std::vector<uint8_t>> hybrid_decrypt(const KemPrivateKey& sk,
                                                   const HybridCiphertext& hct);

} // namespace mcekem
