#include "mcekem/serial.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace mcekem {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(uint8_t(v));
    out.push_back(uint8_t(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

/// Bounds-checked little-endian cursor over an input buffer.
class Reader {
  public:
    explicit Reader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    uint16_t u16() { return uint16_t(u(2)); }
    uint32_t u32() { return uint32_t(u(4)); }
    uint64_t u64() { return u(8); }

    std::span<const uint8_t> take(size_t count) {
        need(count);
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    size_t remaining() const { return bytes_.size() - pos_; }

    void expect_end() const {
        if (remaining() != 0) throw std::runtime_error("corrupt file: trailing bytes");
    }

  private:
    void need(size_t count) const {
        if (remaining() < count) throw std::runtime_error("corrupt file: truncated");
    }
    uint64_t u(size_t width) {
        need(width);
        uint64_t v = 0;
        for (size_t i = 0; i < width; ++i) v |= uint64_t(bytes_[pos_ + i]) << (8 * i);
        pos_ += width;
        return v;
    }

    std::span<const uint8_t> bytes_;
    size_t pos_ = 0;
};

size_t row_bytes(const SystemParams& p) { return (size_t(p.n) + 7) / 8; }

void append_matrix(std::vector<uint8_t>& out, const BitMatrix& m) {
    for (size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row_vector(r).to_bytes();
        out.insert(out.end(), row.begin(), row.end());
    }
}

BitMatrix read_matrix(Reader& in, size_t rows, size_t cols) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        m.set_row(r, BitVector::from_bytes(in.take((cols + 7) / 8), cols));
    return m;
}

} // namespace

std::vector<uint8_t> encode_header(CodeFamily family, const SystemParams& params) {
    params.validate();
    std::vector<uint8_t> out;
    out.reserve(FileHeader::size);
    out.insert(out.end(), std::begin(FileHeader::magic), std::end(FileHeader::magic));
    put_u16(out, FileHeader::current_version);
    put_u16(out, uint16_t(family));
    put_u32(out, params.n);
    put_u32(out, params.k);
    put_u32(out, params.w);
    put_u32(out, params.ell_k);
    return out;
}

FileHeader decode_header(std::span<const uint8_t> bytes) {
    Reader in(bytes);
    auto magic = in.take(8);
    if (std::memcmp(magic.data(), FileHeader::magic, 8) != 0)
        throw std::runtime_error("not a key/ciphertext file: bad magic");
    FileHeader h;
    h.version = in.u16();
    if (h.version != FileHeader::current_version)
        throw std::runtime_error("unsupported file version " + std::to_string(h.version));
    uint16_t family = in.u16();
    if (family != uint16_t(CodeFamily::toy) && family != uint16_t(CodeFamily::mdpc))
        throw std::runtime_error("unknown code family id " + std::to_string(family));
    h.family = CodeFamily(family);
    h.params.n = in.u32();
    h.params.k = in.u32();
    h.params.w = in.u32();
    h.params.ell_k = in.u32();
    try {
        h.params.validate();
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(std::string("corrupt file: ") + err.what());
    }
    return h;
}

std::vector<uint8_t> public_key_payload(const KemPublicKey& pk) {
    std::vector<uint8_t> out;
    out.reserve(pk.params.k * row_bytes(pk.params));
    append_matrix(out, pk.g);
    return out;
}

std::vector<uint8_t> private_key_payload(const KemPrivateKey& sk) {
    std::vector<uint8_t> out;
    if (const auto* toy = std::get_if<ToyCode>(&sk.delta.body)) {
        append_matrix(out, toy->generator);
        for (uint32_t entry : toy->syndrome_table) put_u32(out, entry);
    } else {
        const auto& mdpc = std::get<MdpcCode>(sk.delta.body);
        put_u32(out, mdpc.row_weight);
        put_u32(out, mdpc.max_iterations);
        put_u32(out, uint32_t(mdpc.threshold_schedule.size()));
        for (uint32_t t : mdpc.threshold_schedule) put_u32(out, t);
        for (const auto& row : mdpc.parity_rows)
            for (uint32_t c : row) put_u32(out, c);
    }
    auto s = sk.s.to_bytes();
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<uint8_t> ciphertext_payload(const KemCiphertext& ct) { return ct.psi0.to_bytes(); }

std::vector<uint8_t> serialize_public_key(const KemPublicKey& pk, CodeFamily family) {
    auto out = encode_header(family, pk.params);
    auto payload = public_key_payload(pk);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::pair<KemPublicKey, CodeFamily> parse_public_key(std::span<const uint8_t> bytes) {
    FileHeader h = decode_header(bytes);
    Reader in(bytes.subspan(FileHeader::size));
    BitMatrix g = read_matrix(in, h.params.k, h.params.n);
    in.expect_end();
    return {KemPublicKey{std::move(g), h.params}, h.family};
}

std::vector<uint8_t> serialize_private_key(const KemPrivateKey& sk) {
    auto out = encode_header(sk.delta.family(), sk.params);
    auto payload = private_key_payload(sk);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

KemPrivateKey parse_private_key(std::span<const uint8_t> bytes) {
    FileHeader h = decode_header(bytes);
    const SystemParams& p = h.params;
    Reader in(bytes.subspan(FileHeader::size));

    CodeDescription delta;
    delta.params = p;
    if (h.family == CodeFamily::toy) {
        if (p.n > 24) throw std::runtime_error("corrupt file: toy family needs n <= 24");
        BitMatrix g = read_matrix(in, p.k, p.n);
        std::vector<uint32_t> table(size_t(1) << (p.n - p.k));
        for (auto& entry : table) {
            entry = in.u32();
            if (entry == ToyCode::no_leader) continue;
            if (entry >> p.n) throw std::runtime_error("corrupt file: coset leader out of range");
            if (size_t(std::popcount(entry)) > p.w)
                throw std::runtime_error("corrupt file: coset leader too heavy");
        }
        delta.body = ToyCode{std::move(g), std::move(table)};
    } else {
        uint32_t row_weight = in.u32();
        if (row_weight == 0 || row_weight > p.n)
            throw std::runtime_error("corrupt file: parity row weight out of range");
        uint32_t max_iterations = in.u32();
        uint32_t schedule_len = in.u32();
        if (schedule_len > 1u << 20) throw std::runtime_error("corrupt file: schedule too long");
        std::vector<uint32_t> schedule(schedule_len);
        for (auto& t : schedule) t = in.u32();
        size_t r = p.n - p.k;
        std::vector<std::vector<uint32_t>> rows(r);
        for (auto& row : rows) {
            row.resize(row_weight);
            uint32_t prev = 0;
            for (size_t i = 0; i < row_weight; ++i) {
                row[i] = in.u32();
                if (row[i] >= p.n || (i > 0 && row[i] <= prev))
                    throw std::runtime_error("corrupt file: parity row not sorted in range");
                prev = row[i];
            }
        }
        delta.body = MdpcCode{std::move(rows), row_weight, max_iterations, std::move(schedule)};
    }

    BitVector s = BitVector::from_bytes(in.take((p.k + 7) / 8), p.k);
    in.expect_end();
    return KemPrivateKey{std::move(delta), std::move(s), p};
}

std::vector<uint8_t> serialize_ciphertext(const KemCiphertext& ct, const SystemParams& params,
                                          CodeFamily family) {
    if (ct.psi0.length() != params.n)
        throw std::invalid_argument("serialize_ciphertext: wrong length");
    auto out = encode_header(family, params);
    auto payload = ciphertext_payload(ct);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::pair<KemCiphertext, SystemParams> parse_ciphertext(std::span<const uint8_t> bytes) {
    FileHeader h = decode_header(bytes);
    Reader in(bytes.subspan(FileHeader::size));
    BitVector psi0 = BitVector::from_bytes(in.take((size_t(h.params.n) + 7) / 8), h.params.n);
    in.expect_end();
    return {KemCiphertext{std::move(psi0)}, h.params};
}

std::vector<uint8_t> serialize_hybrid(const HybridCiphertext& hct, const SystemParams& params,
                                      CodeFamily family) {
    auto out = encode_header(family, params);
    auto psi0 = hct.kem_ct.psi0.to_bytes();
    out.insert(out.end(), psi0.begin(), psi0.end());
    put_u64(out, hct.dem_ct.size());
    out.insert(out.end(), hct.dem_ct.begin(), hct.dem_ct.end());
    out.insert(out.end(), hct.tag.begin(), hct.tag.end());
    return out;
}

std::pair<HybridCiphertext, SystemParams> parse_hybrid(std::span<const uint8_t> bytes) {
    FileHeader h = decode_header(bytes);
    Reader in(bytes.subspan(FileHeader::size));
    HybridCiphertext hct;
    hct.kem_ct.psi0 = BitVector::from_bytes(in.take((size_t(h.params.n) + 7) / 8), h.params.n);
    uint64_t dem_len = in.u64();
    if (dem_len > in.remaining()) throw std::runtime_error("corrupt file: truncated");
    auto dem = in.take(size_t(dem_len));
    hct.dem_ct.assign(dem.begin(), dem.end());
    auto tag = in.take(hybrid_tag_bytes);
    std::copy(tag.begin(), tag.end(), hct.tag.begin());
    in.expect_end();
    return {std::move(hct), h.params};
}

std::string to_hex(std::span<const uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

std::vector<uint8_t> from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::runtime_error("hex string with odd length");
    std::vector<uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::runtime_error("not a hex string");
        out[i] = uint8_t(hi << 4 | lo);
    }
    return out;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("read error on " + path);
    return bytes;
}

void write_file(const std::string& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw std::runtime_error("write error on " + path);
}

void write_file(const std::string& path, const std::string& text) {
    write_file(path, std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(text.data()),
                                              text.size()));
}

} // namespace mcekem
