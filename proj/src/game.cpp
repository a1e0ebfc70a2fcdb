#include "mcekem/game.hpp"

#include "mcekem/gf2.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

namespace mcekem {

namespace {

void note(const GameConfig& cfg, std::string line) {
    if (cfg.transcript) cfg.transcript->push_back(std::move(line));
}

void check_ro_args(const SystemParams& p, const BitVector& x, const BitVector& e) {
    if (x.length() != p.k || e.length() != p.n || e.weight() != p.w)
        throw std::invalid_argument("adversary protocol violation: oracle query outside F_2^k x W");
}

void check_dec_args(const SystemParams& p, const BitVector& y) {
    if (y.length() != p.n)
        throw std::invalid_argument("adversary protocol violation: decryption query of wrong length");
}

struct TrialStreams {
    Rng keygen, coins, tables, keys, adversary;
    explicit TrialStreams(const Rng& trial)
        : keygen(trial.fork(0)),
          coins(trial.fork(1)),
          tables(trial.fork(2)),
          keys(trial.fork(3)),
          adversary(trial.fork(4)) {}
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void finish_report(GameReport& rep, std::chrono::steady_clock::time_point t0, bool has_coin) {
    if (has_coin && rep.completed > 0)
        rep.advantage_estimate =
            std::abs(double(rep.successes) / double(rep.completed) - 0.5);
    rep.f2_fired = rep.f2_count > 0;
    rep.runtime_theta = seconds_since(t0);
}

} // namespace

void Adversary::begin_trial(const KemPublicKey&, Rng&) {}
void Adversary::phase1(GameOracles&, Rng&) {}
void Adversary::on_plant(const BitVector&, const BitVector&) {}

GdpInstance make_gdp_instance(const SystemParams& params, CodeFamily family, Rng& rng,
                              uint32_t row_weight) {
    params.validate();
    Rng keygen_rng = rng.fork(0);
    Rng coin_rng = rng.fork(1);
    KemKeyPair keys = kem_keygen(params, family, keygen_rng, row_weight);
    BitVector x = random_bit_vector(params.k, coin_rng);
    BitVector e = sample_constant_weight(params.n, params.w, coin_rng);
    BitVector y = vec_add(mat_vec_mul(x, keys.pub.g), e);
    return {std::move(keys.pub.g), std::move(y), params.w, params, std::move(x), std::move(e)};
}

bool verify_gdp_solution(const GdpInstance& gdp, const BitVector& c) {
    if (c.length() != gdp.g.cols()) return false;
    return hamming_distance(c, gdp.y_star) <= gdp.w && in_row_space(gdp.g, c);
}

std::optional<BitVector> brute_force_gdp(const GdpInstance& gdp, uint64_t* enumerated) {
    size_t k = gdp.g.rows();
    if (k > 20) throw std::invalid_argument("brute_force_gdp: k > 20");
    uint64_t visited = 0;
    for (uint64_t m = 0; m < (uint64_t(1) << k); ++m) {
        ++visited;
        BitVector c = mat_vec_mul(BitVector::from_uint(m, k), gdp.g);
        if (hamming_distance(c, gdp.y_star) <= gdp.w) {
            if (enumerated) *enumerated = visited;
            return c;
        }
    }
    if (enumerated) *enumerated = visited;
    return std::nullopt;
}

std::optional<BitVector> sim_ro_query(SimulatorState& state, const GdpInstance& gdp,
                                      const BitVector& x, const BitVector& e, size_t ell,
                                      Rng& rng) {
    BitVector payload = BitVector::concat(x, e);
    if (auto it = state.t1.find(payload); it != state.t1.end()) return it->second.second;

    BitVector y = vec_add(mat_vec_mul(x, gdp.g), e);
    if (y == gdp.y_star) {
        state.solved = mat_vec_mul(x, gdp.g);
        return std::nullopt;
    }
    if (auto it = state.t2.find(y); it != state.t2.end()) return it->second;

    BitVector key = random_bit_vector(ell, rng);
    state.t1.emplace(std::move(payload), std::make_pair(std::move(y), key));
    return key;
}

BitVector sim_dec_query(SimulatorState& state, const BitVector& y, size_t ell, Rng& rng) {
    if (auto it = state.t2.find(y); it != state.t2.end()) return it->second;
    for (const auto& [payload, entry] : state.t1)
        if (entry.first == y) return entry.second;

    BitVector key = random_bit_vector(ell, rng);
    state.t2.emplace(y, key);
    return key;
}

std::pair<BitVector, BitVector> sim_challenge(SimulatorState& state, const GdpInstance& gdp,
                                              size_t ell, Rng& rng) {
    if (state.challenged) throw std::logic_error("sim_challenge: challenge already issued");
    state.challenged = true;
    state.k_star = random_bit_vector(ell, rng);
    state.psi0_star = gdp.y_star;
    return {state.k_star, state.psi0_star};
}

bool simulator_tables_consistent(const SimulatorState& state, const GdpInstance& gdp) {
    size_t k = gdp.g.rows(), n = gdp.g.cols();
    for (const auto& [payload, entry] : state.t1) {
        if (payload.length() != k + n) return false;
        BitVector x = payload.slice(0, k);
        BitVector e = payload.slice(k, n);
        if (vec_add(mat_vec_mul(x, gdp.g), e) != entry.first) return false;
        if (auto it = state.t2.find(entry.first);
            it != state.t2.end() && it->second != entry.second)
            return false;
    }
    return true;
}

GameReport run_cca_game(Adversary& adversary, const GameConfig& cfg, Rng& rng) {
    cfg.params.validate();
    GameReport rep;
    rep.trials = cfg.trials;
    auto t0 = std::chrono::steady_clock::now();

    for (uint64_t trial = 0; trial < cfg.trials; ++trial) {
        Rng trial_rng = rng.fork(trial);
        TrialStreams streams(trial_rng);
        note(cfg, "trial " + std::to_string(trial));

        KemKeyPair keys = kem_keygen(cfg.params, cfg.family, streams.keygen, cfg.row_weight);
        RandomOracle oracle(cfg.params.ell_k, std::move(streams.tables));

        std::set<BitVector> dec_seen;
        bool post_challenge = false;
        bool f2 = false;
        BitVector psi0_star, challenge_payload;

        GameOracles oracles;
        oracles.ro = [&](const BitVector& x, const BitVector& e) -> std::optional<BitVector> {
            check_ro_args(cfg.params, x, e);
            ++rep.n_kdf;
            BitVector payload = BitVector::concat(x, e);
            if (post_challenge && payload == challenge_payload) f2 = true;
            BitVector key = oracle.derive(payload, cfg.params.ell_k);
            note(cfg, "ro " + x.to_hex() + "|" + e.to_hex() + " -> " + key.to_hex());
            return key;
        };
        oracles.dec = [&](const BitVector& y) -> std::optional<BitVector> {
            check_dec_args(cfg.params, y);
            ++rep.n_dec;
            if (post_challenge && y == psi0_star) {
                note(cfg, "dec " + y.to_hex() + " -> bot");
                return std::nullopt;
            }
            if (!post_challenge) dec_seen.insert(y);
            SharedKey key = decaps(keys.priv, KemCiphertext{y}, oracle);
            note(cfg, "dec " + y.to_hex() + " -> " + key.bits.to_hex());
            return key.bits;
        };

        adversary.begin_trial(keys.pub, streams.adversary);
        adversary.phase1(oracles, streams.adversary);

        BitVector x_star = random_bit_vector(cfg.params.k, streams.coins);
        BitVector e_star = sample_constant_weight(cfg.params.n, cfg.params.w, streams.coins);
        psi0_star = vec_add(mat_vec_mul(x_star, keys.pub.g), e_star);
        challenge_payload = BitVector::concat(x_star, e_star);
        uint32_t b = uint32_t(streams.coins.next_below(2));

        if (dec_seen.contains(psi0_star)) {
            ++rep.f1_count;
            rep.outcomes.push_back(TrialOutcome::halted_f1);
            note(cfg, "halt f1");
            continue;
        }
        if (oracle.contains(challenge_payload)) f2 = true;

        // Drawn from the challenge-key stream first in both branches, so the
        // handed key consumes the same draw the simulator's K* does.
        BitVector handed = random_bit_vector(cfg.params.ell_k, streams.keys);
        if (b == 0) {
            if (!oracle.contains(challenge_payload))
                oracle.program(challenge_payload, handed);
            else
                handed = oracle.derive(challenge_payload, cfg.params.ell_k);
        }

        post_challenge = true;
        adversary.on_plant(x_star, e_star);
        note(cfg, "challenge " + psi0_star.to_hex() + " " + handed.to_hex());

        uint32_t b_star = adversary.phase2(handed, psi0_star, oracles, streams.adversary);
        if (b_star > 1)
            throw std::invalid_argument("adversary protocol violation: guess outside {0,1}");
        ++rep.completed;
        if (b_star == b) ++rep.successes;
        if (f2) ++rep.f2_count;
        rep.outcomes.push_back(TrialOutcome::completed);
    }

    finish_report(rep, t0, true);
    return rep;
}

GameReport run_reduction(Adversary& adversary, const GameConfig& cfg, Rng& rng) {
    cfg.params.validate();
    GameReport rep;
    rep.trials = cfg.trials;
    auto t0 = std::chrono::steady_clock::now();

    for (uint64_t trial = 0; trial < cfg.trials; ++trial) {
        Rng trial_rng = rng.fork(trial);
        TrialStreams streams(trial_rng);
        note(cfg, "trial " + std::to_string(trial));

        GdpInstance gdp = make_gdp_instance(cfg.params, cfg.family, trial_rng, cfg.row_weight);
        SimulatorState state;

        std::set<BitVector> dec_seen;
        bool post_challenge = false;
        bool ended = false;

        GameOracles oracles;
        oracles.ro = [&](const BitVector& x, const BitVector& e) -> std::optional<BitVector> {
            check_ro_args(cfg.params, x, e);
            if (ended) throw std::logic_error("query after the simulated game ended");
            ++rep.n_kdf;
            auto key = sim_ro_query(state, gdp, x, e, cfg.params.ell_k, streams.tables);
            if (!key) {
                ended = true;
                note(cfg, "halt f2");
                return std::nullopt;
            }
            note(cfg, "ro " + x.to_hex() + "|" + e.to_hex() + " -> " + key->to_hex());
            return key;
        };
        oracles.dec = [&](const BitVector& y) -> std::optional<BitVector> {
            check_dec_args(cfg.params, y);
            if (ended) throw std::logic_error("query after the simulated game ended");
            ++rep.n_dec;
            if (post_challenge && y == state.psi0_star) {
                note(cfg, "dec " + y.to_hex() + " -> bot");
                return std::nullopt;
            }
            if (!post_challenge) dec_seen.insert(y);
            BitVector key = sim_dec_query(state, y, cfg.params.ell_k, streams.tables);
            note(cfg, "dec " + y.to_hex() + " -> " + key.to_hex());
            return key;
        };

        auto settle_solved = [&]() {
            ++rep.f2_count;
            rep.outcomes.push_back(TrialOutcome::solved_f2);
            if (state.solved && verify_gdp_solution(gdp, *state.solved)) {
                ++rep.extractions_verified;
                rep.extracted_c = state.solved;
            }
        };

        adversary.begin_trial(KemPublicKey{gdp.g, cfg.params}, streams.adversary);
        adversary.phase1(oracles, streams.adversary);
        if (ended) {
            settle_solved();
            continue;
        }

        if (dec_seen.contains(gdp.y_star)) {
            ++rep.f1_count;
            rep.outcomes.push_back(TrialOutcome::halted_f1);
            note(cfg, "halt f1");
            continue;
        }

        auto [k_star, psi0_star] = sim_challenge(state, gdp, cfg.params.ell_k, streams.keys);
        post_challenge = true;
        adversary.on_plant(gdp.plant_x, gdp.plant_e);
        note(cfg, "challenge " + psi0_star.to_hex() + " " + k_star.to_hex());

        adversary.phase2(k_star, psi0_star, oracles, streams.adversary);
        if (ended) {
            settle_solved();
            continue;
        }
        ++rep.completed;
        rep.outcomes.push_back(TrialOutcome::completed);
    }

    finish_report(rep, t0, false);
    return rep;
}

} // namespace mcekem
