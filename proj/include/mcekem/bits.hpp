#pragma once
#include <cstdint>
#include <cstddef>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcekem {

class BitMatrix;
class BitVector;
BitVector mat_vec_mul(const BitVector& x, const BitMatrix& g);

/// A word of F_2^n, bit-packed into 64-bit limbs. Bit i lives in limb i/64 at
/// position i%64; serialized form is LSB-first within bytes. All bits beyond
/// length() are kept zero so equality and ordering work on the raw limbs.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_bytes(std::span<const uint8_t> bytes, size_t length);
    static BitVector from_string(std::string_view bits); // e.g. "1011", bit 0 first
    static BitVector from_uint(uint64_t value, size_t length); // length <= 64

    size_t length() const { return len_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    size_t weight() const;
    uint64_t to_uint() const; // length <= 64

    BitVector& operator^=(const BitVector& other); // lengths must match
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    bool operator==(const BitVector&) const = default;
    std::strong_ordering operator<=>(const BitVector&) const = default;

    BitVector slice(size_t begin, size_t count) const;
    static BitVector concat(const BitVector& a, const BitVector& b);

    std::vector<uint8_t> to_bytes() const; // ceil(len/8) bytes, LSB-first
    std::string to_string() const;
    std::string to_hex() const;

    std::span<const uint64_t> words() const { return words_; }

  private:
    friend class BitMatrix;
    friend BitVector mat_vec_mul(const BitVector& x, const BitMatrix& g);

    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

// XOR with length checking: this is addition over F_2.
BitVector vec_add(const BitVector& a, const BitVector& b);
size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Dense bit matrix, row-major with a fixed limb stride per row.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

    static BitMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t stride() const { return stride_; }

    bool get(size_t r, size_t c) const { return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        uint64_t& word = words_[r * stride_ + (c >> 6)];
        if (v) word |= mask; else word &= ~mask;
    }

    std::span<const uint64_t> row(size_t r) const { return {words_.data() + r * stride_, stride_}; }
    std::span<uint64_t> row(size_t r) { return {words_.data() + r * stride_, stride_}; }

    BitVector row_vector(size_t r) const;
    void set_row(size_t r, const BitVector& v);
    void xor_row_into(size_t src, size_t dst); // row[dst] ^= row[src]
    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);

    bool operator==(const BitMatrix&) const = default;

  private:
    size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> words_;
};

// x * G over F_2: XOR of the rows of G selected by the set bits of x.
BitVector mat_vec_mul(const BitVector& x, const BitMatrix& g);

} // namespace mcekem
