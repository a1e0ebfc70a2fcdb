#include "mcekem/shake.hpp"

#include <bit>
#include <stdexcept>

namespace mcekem {

namespace {

constexpr size_t rate = 136; // 1600/8 - 2*256/8

constexpr uint64_t round_constants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rotation offsets indexed [x][y], lane (x,y) stored at state[x + 5y]
constexpr int rho_offsets[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

void keccak_f1600(uint64_t a[25]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x)
            d[x] = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                a[x + 5 * y] ^= d[x];
        // rho and pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = std::rotl(a[x + 5 * y], rho_offsets[x][y]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                a[x + 5 * y] = b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
        // iota
        a[0] ^= round_constants[round];
    }
}

} // namespace

void Shake256::permute() {
    keccak_f1600(state_);
    offset_ = 0;
}

void Shake256::absorb(std::span<const uint8_t> data) {
    if (squeezing_) throw std::logic_error("Shake256: absorb after squeeze");
    for (uint8_t byte : data) {
        state_[offset_ >> 3] ^= uint64_t(byte) << ((offset_ & 7) * 8);
        if (++offset_ == rate) permute();
    }
}

void Shake256::squeeze(std::span<uint8_t> out) {
    if (!squeezing_) {
        // pad10*1 with the SHAKE domain bits
        state_[offset_ >> 3] ^= uint64_t(0x1f) << ((offset_ & 7) * 8);
        state_[(rate - 1) >> 3] ^= uint64_t(0x80) << (((rate - 1) & 7) * 8);
        permute();
        squeezing_ = true;
    }
    for (uint8_t& byte : out) {
        if (offset_ == rate) permute();
        byte = uint8_t(state_[offset_ >> 3] >> ((offset_ & 7) * 8));
        ++offset_;
    }
}

std::vector<uint8_t> Shake256::squeeze(size_t count) {
    std::vector<uint8_t> out(count);
    squeeze(std::span<uint8_t>(out));
    return out;
}

std::vector<uint8_t> Shake256::digest(std::span<const uint8_t> data, size_t out_len) {
    Shake256 xof;
    xof.absorb(data);
    return xof.squeeze(out_len);
}

} // namespace mcekem
