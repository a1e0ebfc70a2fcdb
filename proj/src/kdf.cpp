#include "mcekem/kdf.hpp"

#include <stdexcept>

#include "mcekem/shake.hpp"

namespace mcekem {

namespace {
constexpr char domain_prefix[] = "mcekem.kdf.v1";
}

BitVector kdf_derive(const BitVector& payload, size_t ell) {
    Shake256 xof;
    xof.absorb({reinterpret_cast<const uint8_t*>(domain_prefix), sizeof(domain_prefix) - 1});
    uint8_t len_frame[8];
    uint64_t bits = payload.length();
    for (int i = 0; i < 8; ++i) len_frame[i] = uint8_t(bits >> (8 * i));
    xof.absorb(len_frame);
    auto bytes = payload.to_bytes();
    xof.absorb(bytes);
    return BitVector::from_bytes(xof.squeeze((ell + 7) / 8), ell);
}

BitVector oracle_query(OracleTable& table, const BitVector& payload, size_t ell, Rng& rng) {
    auto it = table.find(payload);
    if (it != table.end()) return it->second;
    BitVector value = random_bit_vector(ell, rng);
    table.emplace(payload, value);
    return value;
}

BitVector RandomOracle::derive(const BitVector& payload, size_t ell) {
    if (ell != ell_) throw std::invalid_argument("RandomOracle: inconsistent output length");
    return oracle_query(table_, payload, ell_, rng_);
}

void RandomOracle::program(const BitVector& payload, BitVector value) {
    if (value.length() != ell_) throw std::invalid_argument("RandomOracle: bad programmed length");
    if (table_.contains(payload)) throw std::logic_error("RandomOracle: payload already queried");
    table_.emplace(payload, std::move(value));
}

} // namespace mcekem
