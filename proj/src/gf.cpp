#include "mdecc/gf.hpp"

#include <stdexcept>
#include <unordered_map>

namespace mdecc::gf {

uint32_t primitive_poly(int m) {
    switch (m) {
        case 2: return 0x7;          // x^2+x+1
        case 3: return 0xB;          // x^3+x+1
        case 4: return 0x13;         // x^4+x+1
        case 5: return 0x25;         // x^5+x^2+1
        case 6: return 0x43;         // x^6+x+1
        case 7: return 0x89;         // x^7+x^3+1
        case 8: return 0x11D;        // x^8+x^4+x^3+x^2+1
        case 9: return 0x211;        // x^9+x^4+1
        case 10: return 0x409;       // x^10+x^3+1
        case 11: return 0x805;       // x^11+x^2+1
        case 12: return 0x1053;      // x^12+x^6+x^4+x+1
        case 13: return 0x201B;      // x^13+x^4+x^3+x+1
        case 14: return 0x4443;      // x^14+x^10+x^6+x+1
        case 15: return 0x8003;      // x^15+x+1
        case 16: return 0x1100B;     // x^16+x^12+x^3+x+1
        case 17: return 0x20009;     // x^17+x^3+1
        case 18: return 0x40081;     // x^18+x^7+1
        case 19: return 0x80027;     // x^19+x^5+x^2+x+1
        case 20: return 0x100009;    // x^20+x^3+1
        case 21: return 0x200005;    // x^21+x^2+1
        case 22: return 0x400003;    // x^22+x+1
        case 23: return 0x800021;    // x^23+x^5+1
        case 24: return 0x1000087;   // x^24+x^7+x^2+x+1
        default:
            throw std::invalid_argument("unsupported field degree m=" + std::to_string(m) +
                                        " (supported range 2..24)");
    }
}

Field::Field(int m) : Field(m, primitive_poly(m)) {}

Field::Field(int m, uint32_t prim_poly) : m_(m), poly_(prim_poly) {
    if (m < kMinDegree || m > kMaxDegree) throw std::invalid_argument("unsupported field degree");
    if (poly_degree(prim_poly) != m) throw std::invalid_argument("polynomial degree does not match m");
    order_ = (uint32_t(1) << m) - 1;
    init();
}

namespace {
std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}
}  // namespace

void Field::init() {
    if (m_ <= kTableDegree) {
        antilog_.resize(order_);
        log_.assign(order_ + 1, 0);
        uint32_t b = 1;
        for (uint32_t k = 0; k < order_; ++k) {
            if (b == 1 && k > 0)
                throw std::invalid_argument("polynomial is not primitive (order of x too small)");
            antilog_[k] = b;
            log_[b] = k;
            b <<= 1;
            if (b >> m_) b ^= poly_;
        }
        if (b != 1) throw std::invalid_argument("polynomial is not primitive");
    } else {
        // order check via the factorization of 2^m - 1
        if (pow(alpha(), order_) != 1) throw std::invalid_argument("polynomial is not primitive");
        for (uint64_t q : prime_factors(order_))
            if (pow(alpha(), order_ / q) == 1)
                throw std::invalid_argument("polynomial is not primitive");
    }
}

uint32_t Field::mul_direct(uint32_t a, uint32_t b) const {
    uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m_) a ^= poly_;
    }
    return acc;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!antilog_.empty()) {
        uint64_t s = uint64_t(log_[a]) + log_[b];
        if (s >= order_) s -= order_;
        return antilog_[s];
    }
    return mul_direct(a, b);
}

uint32_t Field::pow(uint32_t a, long long k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    uint64_t e = uint64_t((k % order_ + order_) % order_);
    if (!antilog_.empty()) return antilog_[(uint64_t(log_[a]) * e) % order_];
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_direct(r, base);
        base = mul_direct(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t Field::pow_alpha(long long k) const {
    uint64_t e = uint64_t((k % order_ + order_) % order_);
    if (!antilog_.empty()) return antilog_[e];
    return pow(alpha(), (long long)e);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, order_ - 1);
}

uint32_t Field::log(uint32_t a) const {
    auto r = try_log(a);
    if (!r) throw std::domain_error("log of zero");
    return *r;
}

std::optional<uint32_t> Field::try_log(uint32_t a) const {
    if (a == 0) return std::nullopt;
    if (!antilog_.empty()) return log_[a];
    return log_bsgs(a);
}

uint32_t Field::log_bsgs(uint32_t a) const {
    // baby-step giant-step on the cyclic group of size 2^m - 1
    uint32_t step = 1;
    while (uint64_t(step) * step < order_) ++step;
    std::unordered_map<uint32_t, uint32_t> baby;
    baby.reserve(step);
    uint32_t cur = 1;
    for (uint32_t j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = mul_direct(cur, alpha());
    }
    uint32_t giant = pow(inv(alpha()), step);  // alpha^{-step}
    uint32_t gamma = a;
    for (uint32_t i = 0; i * step <= order_; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) return (uint64_t(i) * step + it->second) % order_;
        gamma = mul_direct(gamma, giant);
    }
    throw std::logic_error("discrete log not found");
}

uint8_t gf4_mul(uint8_t a, uint8_t b) {
    uint8_t a0 = a & 1, a1 = (a >> 1) & 1;
    uint8_t b0 = b & 1, b1 = (b >> 1) & 1;
    uint8_t c0 = (a0 & b0) ^ (a1 & b1);
    uint8_t c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return uint8_t(c0 | (c1 << 1));
}

uint8_t gf4_pow_beta(long long v) {
    switch (v % 3) {
        case 0: return kGf4One;
        case 1: return kGf4Beta;
        default: return gf4_mul(kGf4Beta, kGf4Beta);  // beta^2 = beta + 1
    }
}

int poly_degree(uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

uint64_t poly_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (poly_degree(a) + poly_degree(b) > 63) throw std::overflow_error("poly_mul overflow");
    uint64_t acc = 0;
    int shift = 0;
    while (b) {
        if (b & 1) acc ^= a << shift;
        b >>= 1;
        ++shift;
    }
    return acc;
}

uint64_t poly_mod(uint64_t a, uint64_t g) {
    if (g == 0) throw std::domain_error("division by zero polynomial");
    int dg = poly_degree(g);
    int da = poly_degree(a);
    while (da >= dg) {
        a ^= g << (da - dg);
        da = poly_degree(a);
    }
    return a;
}

}  // namespace mdecc::gf
