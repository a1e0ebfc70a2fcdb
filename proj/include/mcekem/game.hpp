#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcekem/kem.hpp"

namespace mcekem {

/// A decoding challenge: find a codeword of G within distance w of y_star.
/// Instances are always planted so extraction can be verified; solvers and
/// the simulator must not read the plant fields.
struct GdpInstance {
    BitMatrix g;
    BitVector y_star;
    uint32_t w = 0;
    SystemParams params;
    BitVector plant_x, plant_e; // verification fixture only
};

GdpInstance make_gdp_instance(const SystemParams& params, CodeFamily family, Rng& rng,
                              uint32_t row_weight = 0);

// True iff c lies in the row space of G and d(c, y_star) <= w.
bool verify_gdp_solution(const GdpInstance& gdp, const BitVector& c);

// Enumerates all 2^k codewords (k <= 20). enumerated, when given, receives
// the number of candidates visited: the deterministic cost profile of the
// search (doubles per unit of k on unsolvable instances).
std::optional<BitVector> brute_force_gdp(const GdpInstance& gdp, uint64_t* enumerated = nullptr);

/// The reduction's bookkeeping: answers for the random oracle live in t1
/// (keyed by x||e, carrying y = xG + e), answers for the decryption oracle
/// in t2 (keyed by y).
struct SimulatorState {
    std::map<BitVector, std::pair<BitVector, BitVector>> t1; // x||e -> (y, K)
    std::map<BitVector, BitVector> t2;                       // y -> K
    BitVector k_star;
    BitVector psi0_star;
    bool challenged = false;
    std::optional<BitVector> solved; // extracted codeword xG
};

// Empty return means the query hit y_star: state.solved holds the extracted
// codeword and the game is over.
std::optional<BitVector> sim_ro_query(SimulatorState& state, const GdpInstance& gdp,
                                      const BitVector& x, const BitVector& e, size_t ell,
                                      Rng& rng);

// Total, like decaps: every proper-length word gets a key.
BitVector sim_dec_query(SimulatorState& state, const BitVector& y, size_t ell, Rng& rng);

// (K*, psi0*) with K* fresh and psi0* = y_star. Single use.
std::pair<BitVector, BitVector> sim_challenge(SimulatorState& state, const GdpInstance& gdp,
                                              size_t ell, Rng& rng);

// Debug sweep hook: t1 entries satisfy y = xG + e, and no word carries
// conflicting keys across the two tables.
bool simulator_tables_consistent(const SimulatorState& state, const GdpInstance& gdp);

/// Query surface handed to an adversary. Empty answers mean: for ro, the
/// simulated game ended (extraction); for dec, the post-challenge refusal to
/// decrypt the challenge ciphertext.
struct GameOracles {
    std::function<std::optional<BitVector>(const BitVector& x, const BitVector& e)> ro;
    std::function<std::optional<BitVector>(const BitVector& y)> dec;
};

/// Attacker under test. Drivers call begin_trial, phase1, then hand the
/// challenge through phase2, which returns the guess b*. on_plant is a test
/// fixture channel: drivers reveal the challenge coins through it after the
/// challenge is fixed, so cheating adversaries can be built.
class Adversary {
  public:
    virtual ~Adversary() = default;
    virtual void begin_trial(const KemPublicKey& pk, Rng& rng);
    virtual void phase1(GameOracles& oracles, Rng& rng);
    virtual void on_plant(const BitVector& x_star, const BitVector& e_star);
    virtual uint32_t phase2(const BitVector& handed_key, const BitVector& psi0_star,
                            GameOracles& oracles, Rng& rng) = 0;
};

enum class TrialOutcome : uint8_t {
    completed,  // guess collected
    halted_f1,  // challenge ciphertext was decryption-queried before the challenge
    solved_f2,  // oracle was queried at the challenge coins; simulator extracted
};

struct GameReport {
    uint64_t trials = 0;
    uint64_t completed = 0;
    uint64_t successes = 0;        // completed trials with b* = b (real game only)
    double advantage_estimate = 0; // |successes/completed - 1/2|
    uint64_t n_kdf = 0;            // oracle queries, all trials
    uint64_t n_dec = 0;            // decryption queries, all trials
    double runtime_theta = 0;      // seconds
    uint64_t f1_count = 0;
    uint64_t f2_count = 0;
    bool f2_fired = false;
    uint64_t extractions_verified = 0; // solved trials whose codeword checks out
    std::optional<BitVector> extracted_c;
    std::vector<TrialOutcome> outcomes;
};

struct GameConfig {
    SystemParams params;
    CodeFamily family = CodeFamily::toy;
    uint32_t row_weight = 0; // mdpc only
    uint64_t trials = 1;
    // When set, receives one line per event (queries, challenge, halts) for
    // diffing runs against each other.
    std::vector<std::string>* transcript = nullptr;
};

// The real IND-CCA game: fresh keypair per trial, oracle-backed KEM, coin b,
// guess collected. F1 halts the trial; an oracle query at the challenge
// coins is flagged (f2) but the game runs on.
GameReport run_cca_game(Adversary& adversary, const GameConfig& cfg, Rng& rng);

// The reduction: same adversary, but every answer comes from the simulator
// tables over a planted instance. No coin exists; a query at the challenge
// coins ends the trial with an extracted, verified codeword.
GameReport run_reduction(Adversary& adversary, const GameConfig& cfg, Rng& rng);

} // namespace mcekem
