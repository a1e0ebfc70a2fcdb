#include "mcekem/counting.hpp"

namespace mcekem {

mpz_class count_ciphertext_space(const SystemParams& params) {
    params.validate();
    mpz_class messages;
    mpz_ui_pow_ui(messages.get_mpz_t(), 2, params.k);
    mpz_class errors;
    mpz_bin_uiui(errors.get_mpz_t(), params.n, params.w);
    return messages * errors;
}

} // namespace mcekem
