#pragma once
#include <cstdint>
#include <map>

#include "mcekem/bits.hpp"
#include "mcekem/rng.hpp"

namespace mcekem {

// Production key-derivation function: SHAKE256 under a fixed ASCII domain
// prefix, with the payload bit length framed in. Deterministic, any output
// length.
BitVector kdf_derive(const BitVector& payload, size_t ell);

/// Lazily sampled random-function table: the idealized model the security
/// argument replaces the KDF with. Keys are raw payload bit strings.
using OracleTable = std::map<BitVector, BitVector>;

// Memoized uniform sampling: returns the stored value for a seen payload,
// otherwise draws a fresh ell-bit string from rng, stores and returns it.
BitVector oracle_query(OracleTable& table, const BitVector& payload, size_t ell, Rng& rng);

/// Key-derivation hook the KEM is written against, so the same code runs
/// over the production KDF and over the oracle double.
class KeyDeriver {
  public:
    virtual ~KeyDeriver() = default;
    virtual BitVector derive(const BitVector& payload, size_t ell) = 0;
};

class XofKdf final : public KeyDeriver {
  public:
    BitVector derive(const BitVector& payload, size_t ell) override {
        return kdf_derive(payload, ell);
    }
};

/// Random-oracle double with a programming hook: the game harness pins the
/// challenge payload's value so the real-key branch of the challenge is
/// drawn from the same stream on the real and simulated sides.
class RandomOracle final : public KeyDeriver {
  public:
    RandomOracle(size_t ell, Rng rng) : ell_(ell), rng_(std::move(rng)) {}

    BitVector derive(const BitVector& payload, size_t ell) override;

    // Pre-sets table[payload]; the payload must not have been queried yet.
    void program(const BitVector& payload, BitVector value);

    bool contains(const BitVector& payload) const { return table_.contains(payload); }
    const OracleTable& table() const { return table_; }

  private:
    size_t ell_;
    Rng rng_;
    OracleTable table_;
};

} // namespace mcekem
