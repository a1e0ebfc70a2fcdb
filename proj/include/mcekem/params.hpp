#pragma once
#include <cstdint>
#include <stdexcept>

namespace mcekem {

// Public system parameters. The field size is fixed to 2 throughout; it is
// kept as a member so serialized headers and reports can state it.
struct SystemParams {
    uint32_t q = 2;
    uint32_t n = 0;       // code length
    uint32_t k = 0;       // code dimension, 0 < k < n
    uint32_t w = 0;       // error weight, w <= n
    uint32_t ell_k = 256; // shared-key length in bits
    uint32_t lambda = 0;  // informational security-parameter label

    void validate() const {
        if (q != 2) throw std::invalid_argument("params: only q = 2 is supported");
        if (k == 0 || k >= n) throw std::invalid_argument("params: need 0 < k < n");
        if (w > n) throw std::invalid_argument("params: need w <= n");
        if (ell_k == 0) throw std::invalid_argument("params: need ell_k >= 1");
    }

    bool operator==(const SystemParams&) const = default;
};

} // namespace mcekem
