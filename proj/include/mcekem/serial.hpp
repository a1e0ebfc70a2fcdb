#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcekem/hybrid.hpp"
#include "mcekem/kem.hpp"

namespace mcekem {

/// Every binary artifact starts with the same self-describing 28-byte
/// header; there is no file-kind field, loaders validate by expected payload
/// length. All integers little-endian, all bit payloads LSB-first.
struct FileHeader {
    static constexpr char magic[8] = {'M', 'C', 'E', 'K', 'E', 'M', '0', '1'};
    static constexpr uint16_t current_version = 1;
    static constexpr size_t size = 28;

    uint16_t version = current_version;
    CodeFamily family = CodeFamily::toy;
    SystemParams params;
};

std::vector<uint8_t> encode_header(CodeFamily family, const SystemParams& params);
FileHeader decode_header(std::span<const uint8_t> bytes);

// Payload-only encodings (no header), reused verbatim inside the files and
// as the hex fields of KAT vectors.
std::vector<uint8_t> public_key_payload(const KemPublicKey& pk);
std::vector<uint8_t> private_key_payload(const KemPrivateKey& sk);
std::vector<uint8_t> ciphertext_payload(const KemCiphertext& ct);

std::vector<uint8_t> serialize_public_key(const KemPublicKey& pk, CodeFamily family);
std::pair<KemPublicKey, CodeFamily> parse_public_key(std::span<const uint8_t> bytes);

std::vector<uint8_t> serialize_private_key(const KemPrivateKey& sk);
KemPrivateKey parse_private_key(std::span<const uint8_t> bytes);

std::vector<uint8_t> serialize_ciphertext(const KemCiphertext& ct, const SystemParams& params,
                                          CodeFamily family);
std::pair<KemCiphertext, SystemParams> parse_ciphertext(std::span<const uint8_t> bytes);

std::vector<uint8_t> serialize_hybrid(const HybridCiphertext& hct, const SystemParams& params,
                                      CodeFamily family);
std::pair<HybridCiphertext, SystemParams> parse_hybrid(std::span<const uint8_t> bytes);

std::string to_hex(std::span<const uint8_t> bytes);
std::vector<uint8_t> from_hex(std::string_view hex);

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const uint8_t> bytes);
void write_file(const std::string& path, const std::string& text);

} // namespace mcekem
