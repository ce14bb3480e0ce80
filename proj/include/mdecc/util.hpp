#pragma once

#include <bit>
#include <cstdint>

namespace mdecc {

/// Smallest k with 2^k >= x (x >= 1); ceil_log2(1) == 0.
inline int ceil_log2(long long x) {
    return x <= 1 ? 0 : 64 - std::countl_zero(uint64_t(x - 1));
}

}  // namespace mdecc
