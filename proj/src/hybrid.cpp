#include "mcekem/hybrid.hpp"

#include <stdexcept>

#include "mcekem/shake.hpp"

namespace mcekem {

namespace {

constexpr char stream_prefix[] = "mcekem.dem.stream.v1";
constexpr char mac_prefix[] = "mcekem.dem.mac.v1";
constexpr size_t half_key_bytes = 16;
constexpr size_t stream_block = 64;

void absorb_le64(Shake256& xof, uint64_t v) {
    uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = uint8_t(v >> (8 * i));
    xof.absorb(b);
}

void xor_keystream(std::span<const uint8_t> key, std::span<const uint8_t> in,
                   std::span<uint8_t> out) {
    for (size_t block = 0; block * stream_block < in.size(); ++block) {
        Shake256 xof;
        xof.absorb({reinterpret_cast<const uint8_t*>(stream_prefix), sizeof(stream_prefix) - 1});
        xof.absorb(key);
        absorb_le64(xof, block);
        uint8_t pad[stream_block];
        xof.squeeze(pad);
        size_t base = block * stream_block;
        size_t len = std::min(stream_block, in.size() - base);
        for (size_t i = 0; i < len; ++i) out[base + i] = in[base + i] ^ pad[i];
    }
}

std::array<uint8_t, hybrid_tag_bytes> compute_tag(std::span<const uint8_t> key,
                                                  const KemCiphertext& kem_ct,
                                                  std::span<const uint8_t> dem_ct) {
    Shake256 xof;
    xof.absorb({reinterpret_cast<const uint8_t*>(mac_prefix), sizeof(mac_prefix) - 1});
    xof.absorb(key);
    auto psi0_bytes = kem_ct.psi0.to_bytes();
    absorb_le64(xof, psi0_bytes.size());
    xof.absorb(psi0_bytes);
    xof.absorb(dem_ct);
    std::array<uint8_t, hybrid_tag_bytes> tag;
    xof.squeeze(tag);
    return tag;
}

struct SplitKey {
    std::vector<uint8_t> stream_key, mac_key;
};

SplitKey split_shared_key(const SharedKey& key, const SystemParams& p) {
    if (p.ell_k != 256)
        throw std::invalid_argument("hybrid: needs ell_k = 256 for key splitting");
    auto bytes = key.bits.to_bytes();
    return {{bytes.begin(), bytes.begin() + half_key_bytes},
            {bytes.begin() + half_key_bytes, bytes.end()}};
}

} // namespace

HybridCiphertext hybrid_encrypt(const KemPublicKey& pk, std::span<const uint8_t> message,
                                Rng& rng) {
    auto [key, kem_ct] = encaps(pk, rng);
    SplitKey halves = split_shared_key(key, pk.params);

    HybridCiphertext hct;
    hct.kem_ct = std::move(kem_ct);
    hct.dem_ct.resize(message.size());
    xor_keystream(halves.stream_key, message, hct.dem_ct);
    hct.tag = compute_tag(halves.mac_key, hct.kem_ct, hct.dem_ct);
    return hct;
}

std::optional<std::vector<uint8_t>> hybrid_decrypt(const KemPrivateKey& sk,
                                                   const HybridCiphertext& hct) {
    SharedKey key = decaps(sk, hct.kem_ct);
    SplitKey halves = split_shared_key(key, sk.params);

    auto expected = compute_tag(halves.mac_key, hct.kem_ct, hct.dem_ct);
    uint8_t diff = 0;
    for (size_t i = 0; i < hybrid_tag_bytes; ++i) diff |= uint8_t(expected[i] ^ hct.tag[i]);
    if (diff != 0) return std::nullopt;

    std::vector<uint8_t> message(hct.dem_ct.size());
    xor_keystream(halves.stream_key, hct.dem_ct, message);
    return message;
}

} // namespace mcekem
