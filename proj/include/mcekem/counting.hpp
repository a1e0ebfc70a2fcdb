#pragma once
#include <gmpxx.h>

#include "mcekem/params.hpp"

namespace mcekem {

// |F_2^k x W_{2,n,w}| = 2^k * C(n,w): the ciphertext-coin space the
// security-game counting terms are measured against.
mpz_class count_ciphertext_space(const SystemParams& params);

} // namespace mcekem
