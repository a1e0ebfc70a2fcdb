#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mcekem/bits.hpp"
#include "mcekem/params.hpp"
#include "mcekem/rng.hpp"

namespace mcekem {

enum class CodeFamily : uint16_t { toy = 1, mdpc = 2 };

/// Toy family: small-n codes decoded exactly from an exhaustive syndrome
/// table. Serves as the ground-truth oracle for every other decoder.
struct ToyCode {
    static constexpr uint32_t no_leader = 0xffffffffu;

    BitMatrix generator; // systematic [I_k | Q]
    // Indexed by syndrome (n-k bits, packed). Entry = coset leader of weight
    // <= w packed into a u32, or no_leader for non-decodable syndromes.
    std::vector<uint32_t> syndrome_table;

    bool operator==(const ToyCode&) const = default;
};

/// MDPC family: sparse constant-row-weight parity checks, decoded by
/// iterative bit flipping.
struct MdpcCode {
    std::vector<std::vector<uint32_t>> parity_rows; // sorted column indices per row
    uint32_t row_weight = 0;
    uint32_t max_iterations = 100;
    std::vector<uint32_t> threshold_schedule; // empty = adaptive rule per iteration

    bool operator==(const MdpcCode&) const = default;
};

/// The private decoding data for one code, with the parameters it was
/// generated under.
struct CodeDescription {
    SystemParams params;
    std::variant<ToyCode, MdpcCode> body;

    CodeFamily family() const {
        return std::holds_alternative<ToyCode>(body) ? CodeFamily::toy : CodeFamily::mdpc;
    }
    bool operator==(const CodeDescription&) const = default;
};

struct DecodeOutcome {
    bool success = false;
    BitVector x; // message, length k (success only)
    BitVector e; // error, length n, weight <= w (success only)
};

struct BitflipResult {
    std::optional<BitVector> error;
    uint32_t iterations = 0;
};

// Samples systematic codes until one corrects every weight-<=w error.
// Throws when the retry budget is exhausted ("no such code").
std::pair<CodeDescription, BitMatrix> toy_keygen(const SystemParams& params, Rng& rng);

// Samples a sparse constant-row-weight parity-check matrix and derives the
// systematic generator of its null space.
std::pair<CodeDescription, BitMatrix> mdpc_keygen(const SystemParams& params, uint32_t row_weight,
                                                  Rng& rng);

// Deterministic half of mdpc_keygen: systematize the given parity rows
// (re-indexing their columns) and derive G. Empty when H is rank deficient.
std::optional<std::pair<CodeDescription, BitMatrix>> mdpc_build(
    const SystemParams& params, const std::vector<std::vector<uint32_t>>& parity_rows,
    uint32_t row_weight, uint32_t max_iterations = 100, std::vector<uint32_t> threshold_schedule = {});

// Family-dispatched decoder. Failure is a value, never an exception.
DecodeOutcome decode(const CodeDescription& delta, const BitVector& y);

// Gallager-style bit flipping. Returns the error vector when the syndrome
// reaches zero within max_iterations and the correction has weight <=
// weight_bound; failure otherwise.
BitflipResult bitflip_decode(const std::vector<std::vector<uint32_t>>& parity_rows, size_t n,
                             const BitVector& y, uint32_t max_iterations,
                             std::span<const uint32_t> threshold_schedule, size_t weight_bound);

} // namespace mcekem
