#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mdecc/gf.hpp"

namespace mdecc {

/// Shortened BCH parity-check column set over GF(2^degree). Column c packs
/// alpha^c, alpha^{3c} (and alpha^{5c}, alpha^{7c} when t_cap = 4) LSB-first,
/// `degree` bits each. Any XOR of up to t_cap distinct columns is nonzero and
/// identifies its column subset uniquely.
class BchColumns {
public:
    /// Smallest field degree with 2^degree - 1 >= count.
    static BchColumns build(int t_cap, int count);
    static BchColumns build(int t_cap, int count, int degree);

    int t_cap() const { return t_cap_; }
    int degree() const { return degree_; }
    int width() const { return 2 * (t_cap_ / 2) * degree_; }  // 2d or 4t bits
    int count() const { return (int)cols_.size(); }
    uint64_t column(int c) const { return cols_[c]; }

    /// Unique subset of at most max_size column indices whose XOR equals sum;
    /// empty vector for sum == 0, nullopt when no such subset exists.
    std::optional<std::vector<int>> identify(uint64_t sum, int max_size) const;

private:
    BchColumns(int t_cap, int count, int degree);

    int t_cap_;
    int degree_;
    std::vector<uint64_t> cols_;
    std::unordered_map<uint64_t, std::vector<int>> sums_;
};

}  // namespace mdecc
