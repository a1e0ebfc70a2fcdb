#include "mcekem/gf2.hpp"

#include <numeric>

namespace mcekem {

std::optional<Systematized> systematize(const BitMatrix& m) {
    size_t k = m.rows(), n = m.cols();
    if (k > n) return std::nullopt;
    BitMatrix work = m;
    std::vector<uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (size_t pivot = 0; pivot < k; ++pivot) {
        // find a 1 at or right of the diagonal, preferring the diagonal column
        size_t pr = k, pc = n;
        for (size_t c = pivot; c < n && pr == k; ++c)
            for (size_t r = pivot; r < k; ++r)
                if (work.get(r, c)) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == k) return std::nullopt; // rank < k
        if (pc != pivot) {
            work.swap_cols(pivot, pc);
            std::swap(perm[pivot], perm[pc]);
        }
        work.swap_rows(pivot, pr);
        for (size_t r = 0; r < k; ++r)
            if (r != pivot && work.get(r, pivot)) work.xor_row_into(pivot, r);
    }
    return Systematized{std::move(work), std::move(perm)};
}

size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pivot = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        work.swap_rows(r, pivot);
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != r && work.get(i, c)) work.xor_row_into(r, i);
        ++r;
    }
    return r;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
    BitMatrix work = m;
    BitVector residue = v;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pivot = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        work.swap_rows(r, pivot);
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != r && work.get(i, c)) work.xor_row_into(r, i);
        if (residue.get(c)) residue ^= work.row_vector(r);
        ++r;
    }
    return residue.weight() == 0;
}

} // namespace mcekem
