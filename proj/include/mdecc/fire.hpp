#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mdecc {

struct FireBurst {
    int position;      // first erroneous bit
    uint64_t pattern;  // burst bits, bit 0 set
};

/// Cyclic burst-correcting code with generator (x^{2b-1} + 1) p(x), p(x)
/// primitive of degree p_degree >= b. Natural length is
/// lcm(2b-1, 2^p_degree - 1); shortening restricts positions to < n without
/// touching the generator. Corrects any single burst of length <= b.
class FireCode {
public:
    /// Throws std::invalid_argument on infeasible parameters
    /// (p_degree < b, p(x) dividing x^{2b-1}+1, generator degree > 63, n > n_full).
    static FireCode make(int b, int p_degree, int n);
    /// Smallest feasible p_degree with natural length >= n_min; code shortened to n_min.
    static FireCode build(int b, int n_min);

    int b() const { return b_; }
    int p_degree() const { return p_degree_; }
    uint64_t p_poly() const { return p_poly_; }
    uint64_t generator() const { return g_; }
    int redundancy() const { return g_degree_; }  // 2b - 1 + p_degree
    long long n_full() const { return n_full_; }
    int n() const { return n_; }

    uint64_t syndrome(const std::vector<uint8_t>& word) const;  // word.size() == n
    uint64_t syndrome_of_positions(const std::vector<int>& ones) const;
    uint64_t xpow(long long k) const;           // x^k mod g
    uint64_t mulx(uint64_t residue) const;      // x * residue mod g
    uint64_t burst_syndrome(int position, uint64_t pattern) const;

    /// Error trapping over the full cycle; positions outside the shortened
    /// length are rejected. Call only with a nonzero syndrome.
    std::optional<FireBurst> trap(uint64_t syndrome) const;

private:
    friend class ComponentCode;
    FireCode() = default;

    int b_ = 0, p_degree_ = 0, g_degree_ = 0, n_ = 0;
    uint64_t p_poly_ = 0, g_ = 0;
    long long n_full_ = 0;
};

/// Role of a 1-D component code inside the coloring method. Burst locators
/// are a known alternative with lower redundancy but exist only under
/// restrictive conditions; they are declared here and not implemented.
enum class ComponentRole { BurstCorrecting, BurstLocator };

/// One coloring's component code: a Fire code sized for burst capability b
/// over `length` colors. Modular colorings wrap bursts around the color ring,
/// so their components decode cyclic bursts through an exhaustively verified
/// syndrome table instead of error trapping.
class ComponentCode {
public:
    static ComponentCode build(int coloring_index, int b, int length, bool cyclic);

    int coloring_index() const { return coloring_index_; }
    int b() const { return fire_.b(); }
    int length() const { return length_; }
    bool cyclic() const { return cyclic_; }
    ComponentRole role() const { return ComponentRole::BurstCorrecting; }
    const FireCode& fire() const { return fire_; }
    int redundancy() const { return fire_.redundancy(); }

    uint64_t color_residue(int color) const { return color_residue_[color]; }
    /// Set of erroneous colors for a component syndrome; empty for zero,
    /// nullopt when no burst of length <= b explains it.
    std::optional<std::vector<int>> decode_error_colors(uint64_t syndrome) const;

private:
    ComponentCode() = default;
    bool try_build_cyclic_table();

    int coloring_index_ = 0, length_ = 0;
    bool cyclic_ = false;
    FireCode fire_;
    std::vector<uint64_t> color_residue_;
    std::unordered_map<uint64_t, std::vector<int>> cyclic_table_;
};

}  // namespace mdecc
