#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "mcekem/bits.hpp"

namespace mcekem {

/// Result of bringing a k×n matrix to systematic form [I_k | Q].
/// perm maps output column positions to input columns: output column j holds
/// input column perm[j], so a word v' in the new coordinates corresponds to
/// the original word v with v'[j] = v[perm[j]].
struct Systematized {
    BitMatrix matrix;
    std::vector<uint32_t> perm;
};

// Gaussian elimination with column swaps. Empty when rank < rows.
std::optional<Systematized> systematize(const BitMatrix& m);

size_t rank(const BitMatrix& m);

// Is v a sum of rows of m?
bool in_row_space(const BitMatrix& m, const BitVector& v);

} // namespace mcekem
