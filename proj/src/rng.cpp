#include "mcekem/rng.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace mcekem {

namespace {
std::vector<uint8_t> le64_bytes(uint64_t v) {
    std::vector<uint8_t> b(8);
    for (int i = 0; i < 8; ++i) b[i] = uint8_t(v >> (8 * i));
    return b;
}
} // namespace

Rng::Rng(std::span<const uint8_t> seed) : seed_(seed.begin(), seed.end()) {
    init_stream();
}

Rng::Rng(uint64_t seed) : seed_(le64_bytes(seed)) {
    init_stream();
}

void Rng::init_stream() {
    stream_.absorb(seed_);
    uint8_t tag = 'G';
    stream_.absorb({&tag, 1});
}

Rng Rng::fork(uint64_t stream_id) const {
    Shake256 xof;
    xof.absorb(seed_);
    uint8_t tag = 'F';
    xof.absorb({&tag, 1});
    auto id = le64_bytes(stream_id);
    xof.absorb(id);
    Rng child;
    child.seed_ = xof.squeeze(32);
    child.init_stream();
    return child;
}

uint8_t Rng::next_byte() {
    uint8_t b;
    stream_.squeeze({&b, 1});
    return b;
}

uint64_t Rng::next_u64() {
    uint8_t b[8];
    stream_.squeeze(b);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
    return v;
}

uint64_t Rng::next_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_below: zero bound");
    if (bound == 1) return 0;
    int bits = std::bit_width(bound - 1);
    size_t nbytes = size_t(bits + 7) / 8;
    uint64_t mask = bits == 64 ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
    for (;;) {
        uint8_t b[8] = {};
        stream_.squeeze({b, nbytes});
        uint64_t v = 0;
        for (size_t i = 0; i < nbytes; ++i) v |= uint64_t(b[i]) << (8 * i);
        v &= mask;
        if (v < bound) return v;
    }
}

void Rng::fill(std::span<uint8_t> out) {
    stream_.squeeze(out);
}

BitVector random_bit_vector(size_t length, Rng& rng) {
    std::vector<uint8_t> bytes((length + 7) / 8);
    rng.fill(bytes);
    return BitVector::from_bytes(bytes, length);
}

BitVector sample_constant_weight(size_t n, size_t w, Rng& rng) {
    if (w > n) throw std::invalid_argument("sample_constant_weight: w > n");
    std::vector<uint32_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    BitVector e(n);
    for (size_t i = 0; i < w; ++i) {
        size_t j = i + size_t(rng.next_below(n - i));
        std::swap(positions[i], positions[j]);
        e.set(positions[i], true);
    }
    return e;
}

} // namespace mcekem
