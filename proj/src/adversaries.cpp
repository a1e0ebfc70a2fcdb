#include "mcekem/adversaries.hpp"

#include <set>

namespace mcekem {

uint32_t CheatingAdversary::phase2(const BitVector& handed_key, const BitVector&,
                                   GameOracles& oracles, Rng&) {
    auto recomputed = oracles.ro(x_, e_);
    if (!recomputed) return 0; // simulated game ended on this very query
    return *recomputed == handed_key ? 0 : 1;
}

void UniformDecAdversary::phase1(GameOracles& oracles, Rng& rng) {
    std::set<BitVector> seen;
    while (seen.size() < queries_) {
        BitVector x = random_bit_vector(pk_.params.k, rng);
        BitVector e = sample_constant_weight(pk_.params.n, pk_.params.w, rng);
        BitVector y = vec_add(mat_vec_mul(x, pk_.g), e);
        if (!seen.insert(y).second) continue;
        oracles.dec(y);
    }
}

void RandomProbeAdversary::probe(GameOracles& oracles, uint64_t count, Rng& rng) {
    const SystemParams& p = pk_.params;
    for (uint64_t i = 0; i < count && !stopped_; ++i) {
        switch (rng.next_below(3)) {
            case 0: { // oracle query at a fresh random point
                BitVector x = random_bit_vector(p.k, rng);
                BitVector e = sample_constant_weight(p.n, p.w, rng);
                if (!oracles.ro(x, e)) stopped_ = true;
                break;
            }
            case 1: { // decryption query on an arbitrary word
                oracles.dec(random_bit_vector(p.n, rng));
                break;
            }
            default: { // decryption query on a valid ciphertext
                BitVector x = random_bit_vector(p.k, rng);
                BitVector e = sample_constant_weight(p.n, p.w, rng);
                oracles.dec(vec_add(mat_vec_mul(x, pk_.g), e));
                break;
            }
        }
    }
}

} // namespace mcekem
