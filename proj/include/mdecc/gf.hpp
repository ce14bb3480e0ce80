#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mdecc::gf {

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 24;
// log/antilog tables are built up to this degree; direct multiplication above.
constexpr int kTableDegree = 20;

/// Fixed primitive polynomial for GF(2^m), bit i = coefficient of x^i.
/// Throws std::invalid_argument outside [kMinDegree, kMaxDegree].
uint32_t primitive_poly(int m);

/// GF(2^m) arithmetic context. alpha is the residue of x and is primitive by
/// construction; elements are m-bit coefficient vectors, constant term in bit 0.
class Field {
public:
    explicit Field(int m);
    Field(int m, uint32_t prim_poly);  // custom polynomial, primitivity enforced

    int degree() const { return m_; }
    uint32_t poly() const { return poly_; }
    uint32_t order() const { return order_; }  // 2^m - 1
    static uint32_t alpha() { return 2; }

    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // a != 0
    uint32_t pow(uint32_t a, long long k) const;
    uint32_t pow_alpha(long long k) const;  // alpha^(k mod order), k >= 0

    /// Discrete log base alpha; a must be nonzero.
    uint32_t log(uint32_t a) const;
    std::optional<uint32_t> try_log(uint32_t a) const;

private:
    void init();
    uint32_t mul_direct(uint32_t a, uint32_t b) const;
    uint32_t log_bsgs(uint32_t a) const;

    int m_;
    uint32_t poly_;
    uint32_t order_;
    std::vector<uint32_t> antilog_;  // alpha^k for k < order (m <= kTableDegree)
    std::vector<uint32_t> log_;
};

// --- GF(4) over basis {1, beta}, beta^2 = beta + 1 ---------------------------
// Encoding: bit 0 = coefficient of 1, bit 1 = coefficient of beta.
constexpr uint8_t kGf4One = 1;
constexpr uint8_t kGf4Beta = 2;

uint8_t gf4_mul(uint8_t a, uint8_t b);
inline uint8_t gf4_add(uint8_t a, uint8_t b) { return a ^ b; }
/// beta^(v mod 3) for v >= 0.
uint8_t gf4_pow_beta(long long v);

// --- GF(2)[x] packed into uint64_t (bit i = coefficient of x^i) --------------
int poly_degree(uint64_t p);  // -1 for the zero polynomial
uint64_t poly_mul(uint64_t a, uint64_t b);
uint64_t poly_mod(uint64_t a, uint64_t g);

}  // namespace mdecc::gf
