#include "mcekem/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mcekem/gf2.hpp"

namespace mcekem {

namespace {

// Visit every sorted t-subset of {0..n-1}.
template <typename F>
void for_each_support(size_t n, size_t t, F&& visit) {
    if (t > n) return;
    std::vector<uint32_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(const_cast<const std::vector<uint32_t>&>(idx));
        size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Parity-check columns of a systematic G = [I_k | Q]: H = [Q^T | I_r], column
// j packed into the low r bits of a u32.
std::vector<uint32_t> parity_columns(const BitMatrix& g) {
    size_t k = g.rows(), n = g.cols(), r = n - k;
    std::vector<uint32_t> cols(n, 0);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < r; ++i)
            if (g.get(j, k + i)) cols[j] |= uint32_t(1) << i;
    for (size_t i = 0; i < r; ++i) cols[k + i] = uint32_t(1) << i;
    return cols;
}

// Exhaustive coset-leader table for weights 0..w. Empty when two such errors
// share a syndrome (the code does not correct w errors).
std::optional<std::vector<uint32_t>> build_syndrome_table(const BitMatrix& g, const SystemParams& p) {
    size_t r = p.n - p.k;
    auto h_col = parity_columns(g);
    std::vector<uint32_t> table(size_t(1) << r, ToyCode::no_leader);
    bool ambiguous = false;
    for (size_t t = 0; t <= p.w && !ambiguous; ++t) {
        for_each_support(p.n, t, [&](const std::vector<uint32_t>& support) {
            if (ambiguous) return;
            uint32_t syndrome = 0, packed = 0;
            for (uint32_t pos : support) {
                syndrome ^= h_col[pos];
                packed |= uint32_t(1) << pos;
            }
            if (table[syndrome] != ToyCode::no_leader) ambiguous = true;
            else table[syndrome] = packed;
        });
    }
    if (ambiguous) return std::nullopt;
    return table;
}

DecodeOutcome toy_decode(const SystemParams& p, const ToyCode& code, const BitVector& y) {
    size_t k = p.k, r = p.n - p.k;
    uint64_t y_word = y.words()[0];
    uint64_t mask_r = (uint64_t(1) << r) - 1;
    uint64_t syndrome = (y_word >> k) & mask_r;
    for (size_t j = 0; j < k; ++j)
        if ((y_word >> j) & 1) syndrome ^= (code.generator.row(j)[0] >> k) & mask_r;

    uint32_t packed = code.syndrome_table[syndrome];
    if (packed == ToyCode::no_leader) return {};

    DecodeOutcome out;
    out.success = true;
    out.e = BitVector::from_uint(packed, p.n);
    out.x = vec_add(y, out.e).slice(0, k);
    return out;
}

DecodeOutcome mdpc_decode(const SystemParams& p, const MdpcCode& code, const BitVector& y) {
    auto res = bitflip_decode(code.parity_rows, p.n, y, code.max_iterations,
                              code.threshold_schedule, p.w);
    if (!res.error) return {};
    DecodeOutcome out;
    out.success = true;
    out.e = std::move(*res.error);
    out.x = vec_add(y, out.e).slice(0, p.k);
    return out;
}

} // namespace

std::pair<CodeDescription, BitMatrix> toy_keygen(const SystemParams& params, Rng& rng) {
    params.validate();
    if (params.n > 24) throw std::invalid_argument("toy_keygen: n must be <= 24");
    size_t k = params.k, n = params.n;

    constexpr int retry_budget = 10000;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        BitMatrix g(k, n);
        for (size_t i = 0; i < k; ++i) {
            g.set(i, i, true);
            for (size_t c = k; c < n; ++c)
                if (rng.next_byte() & 1) g.set(i, c, true);
        }
        auto table = build_syndrome_table(g, params);
        if (!table) continue;
        CodeDescription delta{params, ToyCode{g, std::move(*table)}};
        return {std::move(delta), std::move(g)};
    }
    throw std::runtime_error("no such code: no " + std::to_string(params.w) +
                             "-error-correcting [" + std::to_string(params.n) + "," +
                             std::to_string(params.k) + "] code found in " +
                             std::to_string(retry_budget) + " samples");
}

std::optional<std::pair<CodeDescription, BitMatrix>> mdpc_build(
    const SystemParams& params, const std::vector<std::vector<uint32_t>>& parity_rows,
    uint32_t row_weight, uint32_t max_iterations, std::vector<uint32_t> threshold_schedule) {
    params.validate();
    size_t n = params.n, k = params.k, r = n - k;
    if (parity_rows.size() != r) throw std::invalid_argument("mdpc_build: need n-k parity rows");

    BitMatrix h(r, n);
    for (size_t i = 0; i < r; ++i) {
        if (parity_rows[i].size() != row_weight)
            throw std::invalid_argument("mdpc_build: row weight mismatch");
        for (uint32_t c : parity_rows[i]) {
            if (c >= n || h.get(i, c)) throw std::invalid_argument("mdpc_build: bad row support");
            h.set(i, c, true);
        }
    }

    auto sys = systematize(h); // [I_r | R], columns permuted
    if (!sys) return std::nullopt;

    // Final column order puts the R block first so G comes out systematic:
    // new column j holds original column pi[j].
    std::vector<uint32_t> pi(n);
    for (size_t j = 0; j < k; ++j) pi[j] = sys->perm[r + j];
    for (size_t j = k; j < n; ++j) pi[j] = sys->perm[j - k];

    BitMatrix g(k, n);
    for (size_t i = 0; i < k; ++i) {
        g.set(i, i, true);
        for (size_t c = 0; c < r; ++c)
            if (sys->matrix.get(c, r + i)) g.set(i, k + c, true);
    }

    std::vector<uint32_t> inv_pi(n);
    for (size_t j = 0; j < n; ++j) inv_pi[pi[j]] = uint32_t(j);
    std::vector<std::vector<uint32_t>> rows(r);
    for (size_t i = 0; i < r; ++i) {
        rows[i].reserve(row_weight);
        for (uint32_t c : parity_rows[i]) rows[i].push_back(inv_pi[c]);
        std::sort(rows[i].begin(), rows[i].end());
    }

    CodeDescription delta{params,
                          MdpcCode{std::move(rows), row_weight, max_iterations,
                                   std::move(threshold_schedule)}};
    return std::make_pair(std::move(delta), std::move(g));
}

std::pair<CodeDescription, BitMatrix> mdpc_keygen(const SystemParams& params, uint32_t row_weight,
                                                  Rng& rng) {
    params.validate();
    if (row_weight == 0 || row_weight > params.n)
        throw std::invalid_argument("mdpc_keygen: row_weight out of range");

    size_t r = params.n - params.k;
    constexpr int retry_budget = 100;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        std::vector<std::vector<uint32_t>> rows(r);
        for (size_t i = 0; i < r; ++i) {
            BitVector support = sample_constant_weight(params.n, row_weight, rng);
            rows[i].reserve(row_weight);
            for (size_t j = 0; j < params.n; ++j)
                if (support.get(j)) rows[i].push_back(uint32_t(j));
        }
        auto built = mdpc_build(params, rows, row_weight);
        if (built) return std::move(*built);
    }
    throw std::runtime_error("mdpc_keygen: sampled parity matrices stayed rank deficient");
}

DecodeOutcome decode(const CodeDescription& delta, const BitVector& y) {
    if (y.length() != delta.params.n) throw std::invalid_argument("decode: wrong word length");
    if (const auto* toy = std::get_if<ToyCode>(&delta.body))
        return toy_decode(delta.params, *toy, y);
    return mdpc_decode(delta.params, std::get<MdpcCode>(delta.body), y);
}

BitflipResult bitflip_decode(const std::vector<std::vector<uint32_t>>& parity_rows, size_t n,
                             const BitVector& y, uint32_t max_iterations,
                             std::span<const uint32_t> threshold_schedule, size_t weight_bound) {
    if (y.length() != n) throw std::invalid_argument("bitflip_decode: wrong word length");
    size_t r = parity_rows.size();

    std::vector<uint32_t> col_degree(n, 0);
    for (const auto& row : parity_rows)
        for (uint32_t c : row) ++col_degree[c];

    BitVector z = y;
    std::vector<uint8_t> syndrome(r, 0);
    std::vector<uint32_t> upc(n, 0);

    auto recompute_syndrome = [&]() {
        size_t unsatisfied = 0;
        for (size_t i = 0; i < r; ++i) {
            uint8_t bit = 0;
            for (uint32_t c : parity_rows[i]) bit ^= uint8_t(z.get(c));
            syndrome[i] = bit;
            unsatisfied += bit;
        }
        return unsatisfied;
    };

    size_t unsatisfied = recompute_syndrome();
    for (uint32_t iter = 0; iter <= max_iterations; ++iter) {
        if (unsatisfied == 0) {
            BitVector e = vec_add(z, y);
            if (e.weight() <= weight_bound) return {std::move(e), iter};
            return {std::nullopt, iter};
        }
        if (iter == max_iterations) return {std::nullopt, iter};

        std::fill(upc.begin(), upc.end(), 0);
        uint32_t max_upc = 0;
        for (size_t i = 0; i < r; ++i) {
            if (!syndrome[i]) continue;
            for (uint32_t c : parity_rows[i]) max_upc = std::max(max_upc, ++upc[c]);
        }
        bool flipped = false;
        if (iter < threshold_schedule.size()) {
            uint32_t threshold = threshold_schedule[iter];
            for (size_t c = 0; c < n; ++c)
                if (upc[c] >= threshold) {
                    z.flip(c);
                    flipped = true;
                }
        } else {
            // Gallager-B style: flip bits near the current maximum unsatisfied
            // count, but never below a per-column majority. If the band is
            // empty, fall back to the plain majority rule for this pass.
            constexpr uint32_t delta = 4;
            uint32_t band = max_upc > delta ? max_upc - delta : 1;
            for (size_t c = 0; c < n; ++c)
                if (upc[c] >= band && upc[c] >= col_degree[c] / 2 + 1) {
                    z.flip(c);
                    flipped = true;
                }
            if (!flipped)
                for (size_t c = 0; c < n; ++c)
                    if (upc[c] >= col_degree[c] / 2 + 1) {
                        z.flip(c);
                        flipped = true;
                    }
        }
        if (!flipped) return {std::nullopt, iter};
        unsatisfied = recompute_syndrome();
    }
    return {std::nullopt, max_iterations};
}

} // namespace mcekem
