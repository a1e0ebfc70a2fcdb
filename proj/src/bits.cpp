#include "mcekem/bits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mcekem {

namespace {
constexpr char hex_digits[] = "0123456789abcdef";
}

BitVector BitVector::from_bytes(std::span<const uint8_t> bytes, size_t length) {
    if (bytes.size() < (length + 7) / 8)
        throw std::invalid_argument("BitVector::from_bytes: too few bytes");
    BitVector v(length);
    for (size_t i = 0; i < (length + 7) / 8; ++i)
        v.words_[i >> 3] |= uint64_t(bytes[i]) << ((i & 7) * 8);
    if (length % 64 != 0 && !v.words_.empty())
        v.words_.back() &= (uint64_t(1) << (length % 64)) - 1;
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitVector::from_string: not a bit string");
    }
    return v;
}

BitVector BitVector::from_uint(uint64_t value, size_t length) {
    if (length > 64) throw std::invalid_argument("BitVector::from_uint: length > 64");
    uint64_t mask = length == 64 ? ~uint64_t(0) : (uint64_t(1) << length) - 1;
    if ((value & ~mask) != 0) throw std::invalid_argument("BitVector::from_uint: value does not fit");
    BitVector v(length);
    if (length > 0) v.words_[0] = value;
    return v;
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t word : words_) total += std::popcount(word);
    return total;
}

uint64_t BitVector::to_uint() const {
    if (len_ > 64) throw std::invalid_argument("BitVector::to_uint: length > 64");
    return words_.empty() ? 0 : words_[0];
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitVector: length mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector BitVector::slice(size_t begin, size_t count) const {
    if (begin + count > len_) throw std::invalid_argument("BitVector::slice: out of range");
    BitVector out(count);
    for (size_t i = 0; i < count; ++i)
        if (get(begin + i)) out.set(i, true);
    return out;
}

BitVector BitVector::concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.len_ + b.len_);
    for (size_t i = 0; i < a.len_; ++i)
        if (a.get(i)) out.set(i, true);
    for (size_t i = 0; i < b.len_; ++i)
        if (b.get(i)) out.set(a.len_ + i, true);
    return out;
}

std::vector<uint8_t> BitVector::to_bytes() const {
    std::vector<uint8_t> out((len_ + 7) / 8, 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = uint8_t(words_[i >> 3] >> ((i & 7) * 8));
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVector::to_hex() const {
    std::string s;
    for (uint8_t b : to_bytes()) {
        s += hex_digits[b >> 4];
        s += hex_digits[b & 15];
    }
    return s;
}

BitVector vec_add(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length()) throw std::invalid_argument("vec_add: length mismatch");
    BitVector out = a;
    out ^= b;
    return out;
}

size_t hamming_distance(const BitVector& a, const BitVector& b) {
    return vec_add(a, b).weight();
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVector BitMatrix::row_vector(size_t r) const {
    BitVector v(cols_);
    auto src = row(r);
    std::copy(src.begin(), src.end(), v.words_.begin());
    return v;
}

void BitMatrix::set_row(size_t r, const BitVector& v) {
    if (v.length() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    auto dst = row(r);
    std::copy(v.words_.begin(), v.words_.end(), dst.begin());
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
    auto s = row(static_cast<size_t>(src));
    auto d = row(dst);
    for (size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (size_t i = 0; i < stride_; ++i) std::swap(ra[i], rb[i]);
}

void BitMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t r = 0; r < rows_; ++r) {
        bool va = get(r, a), vb = get(r, b);
        set(r, a, vb);
        set(r, b, va);
    }
}

BitVector mat_vec_mul(const BitVector& x, const BitMatrix& g) {
    if (x.length() != g.rows()) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
    BitVector acc(g.cols());
    for (size_t r = 0; r < g.rows(); ++r) {
        if (!x.get(r)) continue;
        auto src = g.row(r);
        for (size_t i = 0; i < src.size(); ++i) acc.words_[i] ^= src[i];
    }
    return acc;
}

} // namespace mcekem
