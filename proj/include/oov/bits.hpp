#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oov {

// Fixed-width bit sequence. Coordinate 0 is the first character of the text
// form and the least significant bit of word 0.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(uint32_t dim) : dim_(dim), words_(word_count(dim), 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(static_cast<uint32_t>(s.size()));
        for (uint32_t j = 0; j < v.dim_; ++j) {
            if (s[j] == '1') {
                v.set(j);
            } else if (s[j] != '0') {
                throw std::invalid_argument("BitVec: expected '0' or '1', got '" +
                                            std::string(1, s[j]) + "'");
            }
        }
        return v;
    }

    static BitVec from_support(uint32_t dim, std::span<const uint32_t> coords) {
        BitVec v(dim);
        for (uint32_t j : coords) v.set(j);
        return v;
    }

    uint32_t dim() const { return dim_; }

    bool get(uint32_t j) const {
        check_index(j);
        return (words_[j >> 6] >> (j & 63)) & 1u;
    }

    void set(uint32_t j, bool value = true) {
        check_index(j);
        if (value) {
            words_[j >> 6] |= uint64_t{1} << (j & 63);
        } else {
            words_[j >> 6] &= ~(uint64_t{1} << (j & 63));
        }
    }

    uint32_t popcount() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
        return c;
    }

    std::span<const uint64_t> words() const { return words_; }

    // First `limit` set coordinates, ascending.
    std::vector<uint32_t> support(uint32_t limit = UINT32_MAX) const {
        std::vector<uint32_t> out;
        for (size_t w = 0; w < words_.size() && out.size() < limit; ++w) {
            uint64_t bits = words_[w];
            while (bits != 0 && out.size() < limit) {
                out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    std::string to_string() const {
        std::string s(dim_, '0');
        for (uint32_t j = 0; j < dim_; ++j)
            if (get(j)) s[j] = '1';
        return s;
    }

    // Integer value with coordinate 0 as the least significant bit.
    uint64_t to_index() const {
        if (dim_ > 64) throw std::invalid_argument("BitVec::to_index: dim > 64");
        return words_.empty() ? 0 : words_[0];
    }

    bool operator==(const BitVec&) const = default;

    static size_t word_count(uint32_t dim) { return (size_t{dim} + 63) / 64; }

private:
    void check_index(uint32_t j) const {
        if (j >= dim_) throw std::out_of_range("BitVec: coordinate index out of range");
    }

    uint32_t dim_ = 0;
    std::vector<uint64_t> words_;
};

// Strictly increasing coordinate indices inside [0, dim).
class CoordSet {
public:
    CoordSet() = default;

    CoordSet(uint32_t dim, std::vector<uint32_t> members)
        : dim_(dim), members_(std::move(members)) {
        for (size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] >= dim_)
                throw std::invalid_argument("CoordSet: member out of range");
            if (i > 0 && members_[i] <= members_[i - 1])
                throw std::invalid_argument("CoordSet: members must be strictly increasing");
        }
    }

    uint32_t dim() const { return dim_; }
    uint32_t size() const { return static_cast<uint32_t>(members_.size()); }
    std::span<const uint32_t> members() const { return members_; }
    uint32_t operator[](size_t i) const { return members_[i]; }

    bool contains(uint32_t j) const {
        for (uint32_t m : members_) {
            if (m == j) return true;
            if (m > j) return false;
        }
        return false;
    }

    CoordSet complement() const {
        std::vector<uint32_t> out;
        out.reserve(dim_ - members_.size());
        size_t k = 0;
        for (uint32_t j = 0; j < dim_; ++j) {
            if (k < members_.size() && members_[k] == j) {
                ++k;
            } else {
                out.push_back(j);
            }
        }
        return CoordSet(dim_, std::move(out));
    }

    bool operator==(const CoordSet&) const = default;

private:
    uint32_t dim_ = 0;
    std::vector<uint32_t> members_;
};

inline void require_same_dim(uint32_t a, uint32_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}

// True iff no coordinate is set in both vectors.
inline bool is_orthogonal(const BitVec& x, const BitVec& q) {
    require_same_dim(x.dim(), q.dim(), "is_orthogonal");
    auto xw = x.words();
    auto qw = q.words();
    for (size_t i = 0; i < xw.size(); ++i)
        if ((xw[i] & qw[i]) != 0) return false;
    return true;
}

// Keeps the coordinates listed in `keep`; result bit j equals v bit keep[j].
inline BitVec restrict_to(const BitVec& v, const CoordSet& keep) {
    require_same_dim(v.dim(), keep.dim(), "restrict_to");
    BitVec out(keep.size());
    auto m = keep.members();
    for (uint32_t j = 0; j < keep.size(); ++j)
        if (v.get(m[j])) out.set(j);
    return out;
}

inline bool is_zero_on(const BitVec& v, const CoordSet& c) {
    require_same_dim(v.dim(), c.dim(), "is_zero_on");
    for (uint32_t j : c.members())
        if (v.get(j)) return false;
    return true;
}

}  // namespace oov
