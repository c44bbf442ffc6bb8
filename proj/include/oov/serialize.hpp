#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oov {

// CRC-64/XZ: reflected polynomial 0xC96C5795D7870F42, init and xorout all-ones.
namespace detail {

inline const std::array<uint64_t, 256>& crc64_table() {
    static const std::array<uint64_t, 256> table = [] {
        std::array<uint64_t, 256> t{};
        for (uint32_t b = 0; b < 256; ++b) {
            uint64_t crc = b;
            for (int bit = 0; bit < 8; ++bit)
                crc = (crc >> 1) ^ ((crc & 1) ? 0xC96C5795D7870F42ull : 0);
            t[b] = crc;
        }
        return t;
    }();
    return table;
}

}  // namespace detail

inline uint64_t crc64(std::span<const uint8_t> data) {
    const auto& table = detail::crc64_table();
    uint64_t crc = ~uint64_t{0};
    for (uint8_t byte : data) crc = (crc >> 8) ^ table[(crc ^ byte) & 0xFF];
    return ~crc;
}

// Little-endian byte stream writer.
struct ByteWriter {
    std::vector<uint8_t> bytes;

    void u8(uint8_t v) { bytes.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64_span(std::span<const uint64_t> vs) {
        for (uint64_t v : vs) u64(v);
    }
    void u32_span(std::span<const uint32_t> vs) {
        for (uint32_t v : vs) u32(v);
    }
};

struct ByteReader {
    std::span<const uint8_t> bytes;
    size_t pos = 0;

    void need(size_t count) const {
        if (pos + count > bytes.size()) throw std::runtime_error("container: truncated data");
    }
    uint8_t u8() {
        need(1);
        return bytes[pos++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t{bytes[pos + i]} << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t{bytes[pos + i]} << (8 * i);
        pos += 8;
        return v;
    }
    std::vector<uint64_t> u64_vec(size_t count) {
        std::vector<uint64_t> out(count);
        for (size_t i = 0; i < count; ++i) out[i] = u64();
        return out;
    }
    std::vector<uint32_t> u32_vec(size_t count) {
        std::vector<uint32_t> out(count);
        for (size_t i = 0; i < count; ++i) out[i] = u32();
        return out;
    }
    bool done() const { return pos == bytes.size(); }
};

}  // namespace oov
