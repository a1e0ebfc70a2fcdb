#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcekem/bits.hpp"
#include "mcekem/counting.hpp"
#include "mcekem/gf2.hpp"
#include "mcekem/kdf.hpp"
#include "mcekem/rng.hpp"
#include "mcekem/shake.hpp"

using namespace mcekem;

namespace {

std::vector<uint8_t> ascii(const std::string& s) { return {s.begin(), s.end()}; }

std::string shake_hex(const std::vector<uint8_t>& msg, size_t out_len) {
    auto digest = Shake256::digest(msg, out_len);
    return BitVector::from_bytes(digest, digest.size() * 8).to_hex();
}

// Test-side dot-product evaluation of x*G, column by column.
BitVector slow_mat_vec(const BitVector& x, const BitMatrix& g) {
    BitVector out(g.cols());
    for (size_t c = 0; c < g.cols(); ++c) {
        bool bit = false;
        for (size_t r = 0; r < g.rows(); ++r) bit ^= x.get(r) && g.get(r, c);
        out.set(c, bit);
    }
    return out;
}

// Test-side row-space membership: enumerate all row combinations.
bool slow_in_row_space(const BitMatrix& m, const BitVector& v) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << m.rows()); ++mask) {
        BitVector acc(m.cols());
        for (size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1) acc ^= m.row_vector(r);
        if (acc == v) return true;
    }
    return false;
}

size_t slow_rank(const BitMatrix& m) {
    std::set<BitVector> span;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m.rows()); ++mask) {
        BitVector acc(m.cols());
        for (size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1) acc ^= m.row_vector(r);
        span.insert(acc);
    }
    size_t bits = 0;
    while ((size_t(1) << bits) < span.size()) ++bits;
    return bits;
}

BitMatrix random_matrix(size_t rows, size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.set(r, c, rng.next_below(2) == 1);
    return m;
}

} // namespace

TEST_CASE("bit vector construction and accessors") {
    BitVector v(10);
    CHECK(v.length() == 10);
    CHECK(v.weight() == 0);
    v.set(3, true);
    v.set(9, true);
    CHECK(v.get(3));
    CHECK(!v.get(4));
    CHECK(v.weight() == 2);
    v.flip(3);
    CHECK(!v.get(3));
    CHECK(v.weight() == 1);

    auto s = BitVector::from_string("1011");
    CHECK(s.length() == 4);
    CHECK(s.get(0));
    CHECK(!s.get(1));
    CHECK(s.get(2));
    CHECK(s.get(3));
    CHECK(s.to_string() == "1011");

    auto u = BitVector::from_uint(0b1101, 6);
    CHECK(u.to_string() == "101100");
    CHECK(u.to_uint() == 0b1101);
}

TEST_CASE("bit vector byte round trip is LSB first") {
    std::vector<uint8_t> bytes{0x03};
    auto v = BitVector::from_bytes(bytes, 8);
    CHECK(v.to_string() == "11000000");
    CHECK(v.to_bytes() == bytes);
    CHECK(v.to_hex() == "03");

    // Partial final byte: bits beyond the length must be dropped.
    auto w = BitVector::from_bytes(std::vector<uint8_t>{0xff}, 5);
    CHECK(w.weight() == 5);
    CHECK(w.to_bytes() == std::vector<uint8_t>{0x1f});

    // 12 bits across a byte boundary.
    auto x = BitVector::from_bytes(std::vector<uint8_t>{0x80, 0x0f}, 12);
    CHECK(x.to_string() == "000000011111");
}

TEST_CASE("bit vector xor slice concat") {
    auto a = BitVector::from_string("110010");
    auto b = BitVector::from_string("011011");
    CHECK((a ^ b).to_string() == "101001");
    CHECK(((a ^ b) ^ b) == a);
    CHECK(vec_add(a, b) == (a ^ b));
    CHECK_THROWS_AS(vec_add(a, BitVector(5)), std::invalid_argument);

    CHECK(a.slice(1, 4).to_string() == "1001");
    CHECK(a.slice(0, 6) == a);
    CHECK(a.slice(6, 0).length() == 0);
    CHECK(BitVector::concat(a, b).to_string() == "110010011011");
    CHECK(BitVector::concat(a.slice(0, 3), a.slice(3, 3)) == a);

    CHECK(hamming_distance(a, b) == 3);
    CHECK(hamming_distance(a, a) == 0);
}

TEST_CASE("bit vector slices across word boundaries") {
    Rng rng(uint64_t{404});
    auto v = random_bit_vector(200, rng);
    auto left = v.slice(0, 77);
    auto right = v.slice(77, 123);
    CHECK(BitVector::concat(left, right) == v);
    for (size_t i = 0; i < 123; ++i) CHECK(right.get(i) == v.get(77 + i));

    // Equality must not be confused by stale high bits after slicing.
    BitVector all(200);
    for (size_t i = 0; i < 200; ++i) all.set(i, true);
    auto cut = all.slice(0, 65);
    BitVector fresh(65);
    for (size_t i = 0; i < 65; ++i) fresh.set(i, true);
    CHECK(cut == fresh);
}

TEST_CASE("bit matrix rows and column swaps") {
    BitMatrix m(3, 70);
    m.set(0, 0, true);
    m.set(1, 64, true);
    m.set(2, 69, true);
    CHECK(m.row_vector(1).get(64));
    m.swap_cols(0, 64);
    CHECK(m.get(1, 0));
    CHECK(m.get(0, 64));
    m.swap_rows(0, 1);
    CHECK(m.get(0, 0));
    m.xor_row_into(0, 2);
    CHECK(m.get(2, 0));
    CHECK(m.get(2, 69));

    auto id = BitMatrix::identity(5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) CHECK(id.get(i, j) == (i == j));

    BitVector row(70);
    row.set(33, true);
    m.set_row(2, row);
    CHECK(m.row_vector(2) == row);
}

TEST_CASE("shake256 matches reference digests") {
    CHECK(shake_hex({}, 32) == "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
    CHECK(shake_hex({}, 64) ==
          "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f"
          "d75dc4ddd8c0f200cb05019d67b592f6fc821c49479ab48640292eacb3b7c4be");
    CHECK(shake_hex(ascii("abc"), 32) ==
          "483366601360a8771c6863080cc4114d8db44530f8f1e1ee4f94ea37e78b5739");
    CHECK(shake_hex(ascii("The quick brown fox jumps over the lazy dog"), 32) ==
          "2f671343d9b2e1604dc9dcf0753e5fe15c7c64a0d283cbbf722d411a0e36f6ca");

    std::vector<uint8_t> all_bytes(256);
    for (size_t i = 0; i < 256; ++i) all_bytes[i] = uint8_t(i);
    CHECK(shake_hex(all_bytes, 48) ==
          "336c8aa7f2b08bda6bd7402cd2ea89760b7728a8b31802b80524756361165366"
          "ff8159f2f4568a2bfa286db638789562");
}

TEST_CASE("shake256 rate boundary inputs") {
    // 135, 136, 137 bytes of 'a' straddle the 136-byte absorb rate.
    CHECK(shake_hex(std::vector<uint8_t>(135, 'a'), 32) ==
          "55b991ece1e567b6e7c2c714444dd201cd51f4f3832d08e1d26bebc63e07a3d7");
    CHECK(shake_hex(std::vector<uint8_t>(136, 'a'), 32) ==
          "8fcc5a08f0a1f6827c9cf64ee8d16e0443106359ca6c8efd230759256f44996a");
    CHECK(shake_hex(std::vector<uint8_t>(137, 'a'), 32) ==
          "a44e1a438dad6273d540be65ee26386c59588efb09139dc086385d2db0c25782");
    CHECK(shake_hex(std::vector<uint8_t>(1000, 'a'), 16) == "e262331ad290c96ab1c0fa045470244b");
}

TEST_CASE("shake256 incremental equals one shot") {
    auto msg = ascii("The quick brown fox jumps over the lazy dog");
    auto oneshot = Shake256::digest(msg, 96);

    Shake256 split;
    split.absorb(std::span(msg).subspan(0, 7));
    split.absorb(std::span(msg).subspan(7, 20));
    split.absorb(std::span(msg).subspan(27));
    std::vector<uint8_t> out(96);
    split.squeeze(std::span(out).subspan(0, 11));
    split.squeeze(std::span(out).subspan(11, 60));
    split.squeeze(std::span(out).subspan(71));
    CHECK(out == oneshot);

    Shake256 reuse;
    std::vector<uint8_t> one(1);
    reuse.squeeze(one);
    CHECK_THROWS_AS(reuse.absorb(msg), std::logic_error);
}

TEST_CASE("rng determinism and forks") {
    Rng a(uint64_t{7});
    Rng b(uint64_t{7});
    for (int i = 0; i < 100; ++i) CHECK(a.next_byte() == b.next_byte());

    // Forking is independent of draw position on the parent.
    Rng parent(uint64_t{7});
    Rng child_before = parent.fork(0);
    parent.next_u64();
    Rng child_after = parent.fork(0);
    for (int i = 0; i < 32; ++i) CHECK(child_before.next_byte() == child_after.next_byte());

    // Distinct fork ids and distinct seeds give distinct streams.
    Rng c0 = parent.fork(1);
    Rng c1 = parent.fork(2);
    std::vector<uint8_t> s0(16), s1(16);
    c0.fill(s0);
    c1.fill(s1);
    CHECK(s0 != s1);
    Rng other(uint64_t{8});
    std::vector<uint8_t> s2(16);
    other.fill(s2);
    Rng base(uint64_t{7});
    std::vector<uint8_t> s3(16);
    base.fill(s3);
    CHECK(s2 != s3);

    // Parent stream is unaffected by forking mid-stream.
    Rng p1(uint64_t{99});
    Rng p2(uint64_t{99});
    (void)p1.fork(5);
    CHECK(p1.next_u64() == p2.next_u64());
}

TEST_CASE("rng bounded draws") {
    Rng rng(uint64_t{123});
    CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
    CHECK(rng.next_below(1) == 0);
    for (int i = 0; i < 2000; ++i) {
        uint64_t v = rng.next_below(6);
        CHECK(v < 6);
    }

    // Uniformity within 3 sigma for a non-power-of-two bound.
    std::vector<size_t> counts(6, 0);
    const size_t draws = 12000;
    for (size_t i = 0; i < draws; ++i) ++counts[rng.next_below(6)];
    double expect = draws / 6.0;
    double sigma = std::sqrt(draws * (1.0 / 6) * (5.0 / 6));
    for (size_t bin = 0; bin < 6; ++bin)
        CHECK(std::abs(double(counts[bin]) - expect) <= 3 * sigma);
}

TEST_CASE("constant weight sampling") {
    Rng rng(uint64_t{55});
    for (size_t n : {1u, 5u, 16u, 64u, 200u}) {
        for (size_t w : {size_t{0}, size_t{1}, n / 2, n}) {
            auto v = sample_constant_weight(n, w, rng);
            CHECK(v.length() == n);
            CHECK(v.weight() == w);
        }
    }
    CHECK_THROWS_AS(sample_constant_weight(4, 5, rng), std::invalid_argument);

    // All C(6,2)=15 supports appear uniformly within 3 sigma.
    std::map<uint64_t, size_t> support_counts;
    const size_t draws = 60000;
    for (size_t i = 0; i < draws; ++i) ++support_counts[sample_constant_weight(6, 2, rng).to_uint()];
    CHECK(support_counts.size() == 15);
    double expect = draws / 15.0;
    double sigma = std::sqrt(draws * (1.0 / 15) * (14.0 / 15));
    for (const auto& [support, count] : support_counts)
        CHECK(std::abs(double(count) - expect) <= 3 * sigma);
}

TEST_CASE("matrix vector product over F_2") {
    // Hamming-type generator, checked against per-column dot products.
    BitMatrix g(4, 7);
    const char* rows[4] = {"1000110", "0100101", "0010011", "0001111"};
    for (size_t r = 0; r < 4; ++r) g.set_row(r, BitVector::from_string(rows[r]));

    CHECK(mat_vec_mul(BitVector::from_string("1000"), g).to_string() == "1000110");
    CHECK(mat_vec_mul(BitVector::from_string("0000"), g).weight() == 0);
    CHECK(mat_vec_mul(BitVector::from_string("1100"), g) ==
          (BitVector::from_string("1000110") ^ BitVector::from_string("0100101")));

    Rng rng(uint64_t{2024});
    for (int trial = 0; trial < 50; ++trial) {
        size_t k = 1 + rng.next_below(8), n = k + rng.next_below(120);
        auto m = random_matrix(k, n, rng);
        auto x = random_bit_vector(k, rng);
        auto y = random_bit_vector(k, rng);
        CHECK(mat_vec_mul(x, m) == slow_mat_vec(x, m));
        CHECK(mat_vec_mul(x ^ y, m) == (mat_vec_mul(x, m) ^ mat_vec_mul(y, m)));
    }
    CHECK_THROWS_AS(mat_vec_mul(BitVector(3), g), std::invalid_argument);
}

TEST_CASE("systematize produces row-equivalent systematic form") {
    // Already systematic input: untouched, identity permutation.
    BitMatrix g(2, 4);
    g.set_row(0, BitVector::from_string("1011"));
    g.set_row(1, BitVector::from_string("0110"));
    auto sys = systematize(g);
    REQUIRE(sys.has_value());
    CHECK(sys->matrix == g);
    CHECK(sys->perm == std::vector<uint32_t>{0, 1, 2, 3});

    // Rank-deficient input: duplicate rows.
    BitMatrix bad(2, 4);
    bad.set_row(0, BitVector::from_string("1100"));
    bad.set_row(1, BitVector::from_string("1100"));
    CHECK(!systematize(bad).has_value());
    CHECK(rank(bad) == 1);

    Rng rng(uint64_t{31});
    size_t succeeded = 0;
    for (int trial = 0; trial < 200; ++trial) {
        size_t k = 1 + rng.next_below(6), n = k + rng.next_below(10);
        auto m = random_matrix(k, n, rng);
        size_t true_rank = slow_rank(m);
        CHECK(rank(m) == true_rank);
        auto out = systematize(m);
        CHECK(out.has_value() == (true_rank == k));
        if (!out) continue;
        ++succeeded;

        // Left block is the identity; permutation is a bijection.
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) CHECK(out->matrix.get(r, c) == (r == c));
        std::set<uint32_t> cols(out->perm.begin(), out->perm.end());
        CHECK(cols.size() == n);
        CHECK(*cols.rbegin() == n - 1);

        // Row spaces agree modulo the column permutation.
        for (size_t r = 0; r < k; ++r) {
            BitVector permuted(n);
            for (size_t j = 0; j < n; ++j) permuted.set(j, m.get(r, out->perm[j]));
            CHECK(slow_in_row_space(out->matrix, permuted));
        }
    }
    CHECK(succeeded > 50);
}

TEST_CASE("row space membership") {
    Rng rng(uint64_t{77});
    for (int trial = 0; trial < 120; ++trial) {
        size_t k = 1 + rng.next_below(6), n = k + rng.next_below(9);
        auto m = random_matrix(k, n, rng);
        auto probe = random_bit_vector(n, rng);
        CHECK(in_row_space(m, probe) == slow_in_row_space(m, probe));

        // Known members must always pass.
        uint64_t mask = rng.next_below(uint64_t(1) << k);
        BitVector member(n);
        for (size_t r = 0; r < k; ++r)
            if ((mask >> r) & 1) member ^= m.row_vector(r);
        CHECK(in_row_space(m, member));
    }
}

TEST_CASE("ciphertext space counting") {
    CHECK(count_ciphertext_space({.n = 7, .k = 4, .w = 1}) == 112);
    CHECK(count_ciphertext_space({.n = 7, .k = 4, .w = 0}) == 16);

    // Bigger instance, against an independently enumerated binomial.
    mpz_class big = count_ciphertext_space({.n = 24, .k = 12, .w = 4});
    mpz_class expect = 4096;
    expect *= 10626; // C(24,4) walked by hand below
    CHECK(big == expect);

    // Exhaustive cross-check for all n <= 12: count weight-w supports by
    // enumeration and message words by iteration.
    for (uint32_t n = 1; n <= 12; ++n) {
        for (uint32_t k = 1; k < n; ++k) {
            for (uint32_t w = 0; w <= n; ++w) {
                uint64_t supports = 0;
                for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask)
                    if (size_t(std::popcount(mask)) == w) ++supports;
                uint64_t messages = 0;
                for (uint64_t x = 0; x < (uint64_t(1) << k); ++x) ++messages;
                mpz_class got = count_ciphertext_space({.n = n, .k = k, .w = w});
                CHECK(got == mpz_class(supports) * mpz_class(uint64_t(messages)));
            }
        }
    }
}

TEST_CASE("kdf determinism and output framing") {
    auto payload = BitVector::from_string("1100101110");
    CHECK(kdf_derive(payload, 256) == kdf_derive(payload, 256));
    CHECK(kdf_derive(payload, 0).length() == 0);
    for (size_t ell : {1u, 2u, 7u, 8u, 9u, 64u, 255u, 256u, 300u}) {
        auto k = kdf_derive(payload, ell);
        CHECK(k.length() == ell);
    }

    // Same bytes, different bit length: must derive different keys.
    auto p9 = BitVector::from_bytes(std::vector<uint8_t>{0xff, 0x01}, 9);
    auto p10 = BitVector::from_bytes(std::vector<uint8_t>{0xff, 0x01}, 10);
    CHECK(kdf_derive(p9, 128) != kdf_derive(p10, 128));

    // Output length is not framed in, so shorter outputs are prefixes.
    auto k64 = kdf_derive(payload, 64);
    auto k256 = kdf_derive(payload, 256);
    CHECK(k256.slice(0, 64) == k64);
}

TEST_CASE("kdf has no near-collisions on single-bit flips") {
    Rng rng(uint64_t{808});
    for (int trial = 0; trial < 2000; ++trial) {
        auto a = random_bit_vector(11 + rng.next_below(40), rng);
        auto b = a;
        b.flip(rng.next_below(a.length()));
        CHECK(kdf_derive(a, 256) != kdf_derive(b, 256));
    }
}

TEST_CASE("oracle table replay and freshness") {
    OracleTable table;
    Rng rng(uint64_t{5150});
    auto p1 = BitVector::from_string("0101");
    auto p2 = BitVector::from_string("1010");

    auto v1 = oracle_query(table, p1, 64, rng);
    CHECK(v1.length() == 64);
    CHECK(oracle_query(table, p1, 64, rng) == v1);
    CHECK(table.size() == 1);
    auto v2 = oracle_query(table, p2, 64, rng);
    CHECK(v2 != v1);
    CHECK(table.size() == 2);

    // Same seed, same query order: identical transcript.
    OracleTable ta, tb;
    Rng ra(uint64_t{1}), rb(uint64_t{1});
    for (int i = 0; i < 20; ++i) {
        auto p = BitVector::from_uint(uint64_t(i * 37 % 16), 4);
        CHECK(oracle_query(ta, p, 32, ra) == oracle_query(tb, p, 32, rb));
    }
    CHECK(ta == tb);
}

TEST_CASE("random oracle double with programming") {
    RandomOracle oracle(128, Rng(uint64_t{42}));
    auto p = BitVector::from_string("111000");
    auto k1 = oracle.derive(p, 128);
    CHECK(k1.length() == 128);
    CHECK(oracle.derive(p, 128) == k1);
    CHECK(oracle.contains(p));
    CHECK_THROWS_AS(oracle.derive(p, 64), std::invalid_argument);

    auto q = BitVector::from_string("000111");
    auto pinned = kdf_derive(BitVector::from_string("1"), 128);
    oracle.program(q, pinned);
    CHECK(oracle.derive(q, 128) == pinned);
    CHECK_THROWS_AS(oracle.program(q, pinned), std::logic_error);
    CHECK_THROWS_AS(oracle.program(p, pinned), std::logic_error);
}
