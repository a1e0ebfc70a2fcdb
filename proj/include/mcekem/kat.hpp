#pragma once
#include <string>

#include "mcekem/kem.hpp"

namespace mcekem {

struct KatConfig {
    SystemParams params;
    CodeFamily family = CodeFamily::toy;
    uint32_t row_weight = 0; // mdpc only
    uint64_t count = 0;
    uint64_t seed = 0;
};

/// Text fixture: parameter preamble, then one block per vector with lines
/// count, seed, pk, sk, ct, ss (lowercase hex). Bit-stable across runs and
/// platforms for a fixed config.
std::string generate_kat(const KatConfig& cfg);

struct KatCheck {
    uint64_t vectors = 0;
    uint64_t key_mismatches = 0; // decaps(sk, ct) != ss (possible for mdpc only)
};

// Regenerates every vector and decapsulates it against its own private key.
KatCheck kat_self_check(const KatConfig& cfg);

} // namespace mcekem
