#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mdecc {

/// Dynamically sized bit vector over GF(2), LSB-first (bit 0 is the first bit).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i, bool v = true) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(int i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    /// Reads `width` bits (width <= 64) starting at `offset`.
    uint64_t get_bits(int offset, int width) const {
        uint64_t v = 0;
        for (int k = 0; k < width; ++k)
            if (get(offset + k)) v |= uint64_t(1) << k;
        return v;
    }

    void set_bits(int offset, int width, uint64_t value) {
        for (int k = 0; k < width; ++k) set(offset + k, (value >> k) & 1);
    }

    BitVec& operator^=(const BitVec& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    uint64_t hash64() const {
        uint64_t h = 0xcbf29ce484222325ull ^ uint64_t(nbits_);
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return h;
    }

    /// Hex string, nibble for bits 0..3 first.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        int nnib = (nbits_ + 3) / 4;
        std::string s;
        s.reserve(nnib);
        for (int k = 0; k < nnib; ++k) s.push_back(digits[get_bits(4 * k, std::min(4, nbits_ - 4 * k))]);
        return s;
    }

    static BitVec from_hex(const std::string& s, int nbits) {
        BitVec v(nbits);
        for (int k = 0; k < (int)s.size(); ++k) {
            char c = s[k];
            int d = (c >= '0' && c <= '9') ? c - '0' : (c >= 'a' && c <= 'f') ? c - 'a' + 10 : (c >= 'A' && c <= 'F') ? c - 'A' + 10 : -1;
            if (d < 0) continue;
            for (int b = 0; b < 4 && 4 * k + b < nbits; ++b)
                if ((d >> b) & 1) v.set(4 * k + b);
        }
        return v;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVecHash {
    size_t operator()(const BitVec& v) const { return size_t(v.hash64()); }
};

}  // namespace mdecc
