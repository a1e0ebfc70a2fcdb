#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "mcekem/bits.hpp"
#include "mcekem/shake.hpp"

namespace mcekem {

/// Deterministic random generator: a SHAKE256 stream keyed by a seed.
/// fork(id) derives an independent child stream; the same seed and the same
/// draw/fork sequence reproduce identical bytes on any platform.
class Rng {
  public:
    explicit Rng(std::span<const uint8_t> seed);
    explicit Rng(uint64_t seed);

    Rng fork(uint64_t stream_id) const;

    uint8_t next_byte();
    uint64_t next_u64();
    uint64_t next_below(uint64_t bound); // uniform in [0, bound), rejection sampled
    void fill(std::span<uint8_t> out);

  private:
    Rng() = default;
    void init_stream();

    std::vector<uint8_t> seed_; // retained so forking is possible after draws
    Shake256 stream_;
};

// Uniform vector of F_2^length.
BitVector random_bit_vector(size_t length, Rng& rng);

// Uniform word of weight exactly w (partial Fisher-Yates position selection).
BitVector sample_constant_weight(size_t n, size_t w, Rng& rng);

} // namespace mcekem
