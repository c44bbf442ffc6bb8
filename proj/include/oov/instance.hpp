#pragma once

#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oov/bits.hpp"

namespace oov {

// Exact probability value, parsed from "a/b" or a plain decimal.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;

    Rational() = default;
    Rational(uint64_t n, uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Rational parse(const std::string& text) {
        if (text.empty() || text.find_first_not_of("0123456789./") != std::string::npos)
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            uint64_t n = std::stoull(text.substr(0, slash));
            uint64_t d = std::stoull(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoull(text), 1);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len > 18) throw std::invalid_argument("Rational: too many decimal digits");
        uint64_t den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(std::stoull(digits), den);
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Rational&) const = default;

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

struct OVInstance {
    uint32_t dim = 0;
    std::vector<BitVec> vectors;

    OVInstance() = default;
    OVInstance(uint32_t d, std::vector<BitVec> vecs) : dim(d), vectors(std::move(vecs)) {
        for (const BitVec& v : vectors)
            require_same_dim(v.dim(), dim, "OVInstance");
    }

    static OVInstance from_strings(std::initializer_list<std::string_view> rows) {
        std::vector<BitVec> vecs;
        uint32_t d = 0;
        for (auto s : rows) {
            vecs.push_back(BitVec::from_string(s));
            d = vecs.back().dim();
        }
        return OVInstance(d, std::move(vecs));
    }

    uint32_t n() const { return static_cast<uint32_t>(vectors.size()); }
};

// SplitMix64 evaluated at an arbitrary stream position; the canonical
// finalizer makes (seed, counter) -> word reproducible everywhere.
inline uint64_t splitmix64_at(uint64_t seed, uint64_t counter) {
    uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace detail {

// floor(p * 2^64) as a 65-bit threshold; a draw u is "zero" iff u < threshold.
inline unsigned __int128 bp_threshold(const Rational& p) {
    if (p.num > p.den) throw std::invalid_argument("sample_instance: p must be in [0, 1]");
    return (static_cast<unsigned __int128>(p.num) << 64) / p.den;
}

}  // namespace detail

// Each bit is 0 independently with probability p; fully determined by
// (seed, n, d, p) across platforms.
inline OVInstance sample_instance(uint32_t n, uint32_t d, const Rational& p, uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("sample_instance: n and d must be >= 1");
    unsigned __int128 threshold = detail::bp_threshold(p);
    std::vector<BitVec> vecs;
    vecs.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        BitVec v(d);
        for (uint32_t j = 0; j < d; ++j) {
            uint64_t u = splitmix64_at(seed, uint64_t{i} * d + j);
            bool zero = static_cast<unsigned __int128>(u) < threshold;
            if (!zero) v.set(j);
        }
        vecs.push_back(std::move(v));
    }
    return OVInstance(d, std::move(vecs));
}

// Text format: header "OOV <n> <d>" then one row of d characters per vector.
inline void save_instance_text(const OVInstance& x, std::ostream& out) {
    out << "OOV " << x.n() << ' ' << x.dim << '\n';
    for (const BitVec& v : x.vectors) out << v.to_string() << '\n';
}

inline OVInstance load_instance_text(std::istream& in) {
    std::string magic;
    uint64_t n = 0, d = 0;
    if (!(in >> magic >> n >> d) || magic != "OOV")
        throw std::runtime_error("instance: bad header, expected 'OOV <n> <d>'");
    std::string line;
    std::getline(in, line);
    std::vector<BitVec> vecs;
    vecs.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("instance: expected " + std::to_string(n) +
                                     " rows, got " + std::to_string(i));
        if (line.size() != d)
            throw std::runtime_error("instance: row " + std::to_string(i + 1) +
                                     " has length " + std::to_string(line.size()) +
                                     ", expected " + std::to_string(d));
        vecs.push_back(BitVec::from_string(line));
    }
    while (std::getline(in, line))
        if (!line.empty())
            throw std::runtime_error("instance: trailing content after " + std::to_string(n) +
                                     " rows");
    return OVInstance(static_cast<uint32_t>(d), std::move(vecs));
}

}  // namespace oov
