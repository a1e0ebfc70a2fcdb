#pragma once
#include "mcekem/game.hpp"

namespace mcekem {

/// Baseline: never queries, always answers the same guess. Its advantage is
/// the null model every bound is measured against.
class ConstantGuessAdversary final : public Adversary {
  public:
    explicit ConstantGuessAdversary(uint32_t guess = 0) : guess_(guess) {}
    uint32_t phase2(const BitVector&, const BitVector&, GameOracles&, Rng&) override {
        return guess_;
    }

  private:
    uint32_t guess_;
};

/// Wins by recomputing the challenge key: reads the challenge coins through
/// the fixture channel and queries the oracle at them, then compares with
/// the handed key. The strongest distinguisher, and exactly the behavior the
/// reduction converts into a decoding-problem solution.
class CheatingAdversary final : public Adversary {
  public:
    void on_plant(const BitVector& x_star, const BitVector& e_star) override {
        x_ = x_star;
        e_ = e_star;
    }
    uint32_t phase2(const BitVector& handed_key, const BitVector&, GameOracles& oracles,
                    Rng&) override;

  private:
    BitVector x_, e_;
};

/// Issues a fixed number of distinct uniform valid ciphertexts as
/// pre-challenge decryption queries, then guesses blind. Drives the
/// challenge-collision (halt) counting term.
class UniformDecAdversary final : public Adversary {
  public:
    explicit UniformDecAdversary(uint64_t queries) : queries_(queries) {}
    void begin_trial(const KemPublicKey& pk, Rng&) override { pk_ = pk; }
    void phase1(GameOracles& oracles, Rng& rng) override;
    uint32_t phase2(const BitVector&, const BitVector&, GameOracles&, Rng&) override {
        return 0;
    }

  private:
    uint64_t queries_;
    KemPublicKey pk_;
};

/// Fires random well-formed queries at both oracles in both phases, then
/// guesses at random. Exists to exercise every table path: repeats, valid
/// and invalid words, cross-oracle hits.
class RandomProbeAdversary final : public Adversary {
  public:
    RandomProbeAdversary(uint64_t phase1_queries, uint64_t phase2_queries)
        : q1_(phase1_queries), q2_(phase2_queries) {}
    void begin_trial(const KemPublicKey& pk, Rng&) override {
        pk_ = pk;
        stopped_ = false;
    }
    void phase1(GameOracles& oracles, Rng& rng) override { probe(oracles, q1_, rng); }
    uint32_t phase2(const BitVector&, const BitVector&, GameOracles& oracles,
                    Rng& rng) override {
        probe(oracles, q2_, rng);
        return uint32_t(rng.next_below(2));
    }

  private:
    void probe(GameOracles& oracles, uint64_t count, Rng& rng);

    uint64_t q1_, q2_;
    KemPublicKey pk_;
    bool stopped_ = false;
};

} // namespace mcekem
