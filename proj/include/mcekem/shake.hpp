#pragma once
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace mcekem {

/// SHAKE256 extendable-output function (Keccak-f[1600], rate 136 bytes).
/// Absorb any amount of input, then squeeze any amount of output; absorbing
/// after the first squeeze is a caller bug.
class Shake256 {
  public:
    Shake256() = default;

    void absorb(std::span<const uint8_t> data);
    void squeeze(std::span<uint8_t> out);
    std::vector<uint8_t> squeeze(size_t count);

    static std::vector<uint8_t> digest(std::span<const uint8_t> data, size_t out_len);

  private:
    void permute();

    uint64_t state_[25] = {};
    size_t offset_ = 0; // byte cursor within the 136-byte rate region
    bool squeezing_ = false;
};

} // namespace mcekem
