#include "mdecc/fire.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mdecc/gf.hpp"

namespace mdecc {

FireCode FireCode::make(int b, int p_degree, int n) {
    if (b < 1) throw std::invalid_argument("burst capability must be >= 1");
    if (p_degree < b) throw std::invalid_argument("p_degree must be >= burst capability");
    if (n < 1) throw std::invalid_argument("length must be >= 1");
    uint64_t p = gf::primitive_poly(p_degree);
    long long c = 2LL * b - 1;
    long long e = (1LL << p_degree) - 1;  // order of the roots of p
    if (c % e == 0) throw std::invalid_argument("p(x) divides x^{2b-1}+1; parameters infeasible");
    if (c + p_degree > 63) throw std::invalid_argument("generator degree exceeds 63 bits");
    FireCode f;
    f.b_ = b;
    f.p_degree_ = p_degree;
    f.p_poly_ = p;
    f.g_ = gf::poly_mul((uint64_t(1) << c) | 1, p);
    f.g_degree_ = (int)c + p_degree;
    f.n_full_ = std::lcm(c, e);
    if (n > f.n_full_) throw std::invalid_argument("length exceeds the natural code length");
    f.n_ = n;
    return f;
}

FireCode FireCode::build(int b, int n_min) {
    for (int rho = std::max(b, gf::kMinDegree); rho <= gf::kMaxDegree; ++rho) {
        long long c = 2LL * b - 1;
        long long e = (1LL << rho) - 1;
        if (c % e == 0) continue;
        if (c + rho > 63) break;
        if (std::lcm(c, e) < n_min) continue;
        return make(b, rho, n_min);
    }
    throw std::invalid_argument("no feasible fire code for b=" + std::to_string(b) +
                                " n_min=" + std::to_string(n_min));
}

uint64_t FireCode::syndrome(const std::vector<uint8_t>& word) const {
    if ((int)word.size() != n_) throw std::invalid_argument("word length must equal n");
    uint64_t res = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        res = mulx(res);
        if (word[i]) res ^= 1;
    }
    return res;
}

uint64_t FireCode::syndrome_of_positions(const std::vector<int>& ones) const {
    uint64_t res = 0;
    for (int p : ones) res ^= xpow(p);
    return res;
}

uint64_t FireCode::xpow(long long k) const {
    uint64_t res = 1;
    for (long long i = 0; i < k; ++i) res = mulx(res);
    return res;
}

uint64_t FireCode::mulx(uint64_t residue) const {
    residue <<= 1;
    if ((residue >> g_degree_) & 1) residue ^= g_;
    return residue;
}

uint64_t FireCode::burst_syndrome(int position, uint64_t pattern) const {
    uint64_t res = pattern;
    for (int i = 0; i < position; ++i) res = mulx(res);
    return gf::poly_mod(res, g_);
}

std::optional<FireBurst> FireCode::trap(uint64_t s) const {
    if (s == 0) return std::nullopt;
    uint64_t cur = s;
    for (long long k = 0; k < n_full_; ++k) {
        if (cur < (uint64_t(1) << b_) && (cur & 1)) {
            long long pos = (n_full_ - k) % n_full_;
            int len = gf::poly_degree(cur) + 1;
            if (pos + len <= n_) return FireBurst{(int)pos, cur};
        }
        cur = mulx(cur);
    }
    return std::nullopt;
}

ComponentCode ComponentCode::build(int coloring_index, int b, int length, bool cyclic) {
    if (length < b) throw std::invalid_argument("component shorter than its burst capability");
    for (int rho = std::max(b, gf::kMinDegree); rho <= gf::kMaxDegree; ++rho) {
        long long c = 2LL * b - 1;
        long long e = (1LL << rho) - 1;
        if (c % e == 0) continue;
        if (c + rho > 63) break;
        if (std::lcm(c, e) < length) continue;
        ComponentCode comp;
        comp.coloring_index_ = coloring_index;
        comp.length_ = length;
        comp.cyclic_ = cyclic;
        comp.fire_ = FireCode::make(b, rho, length);
        comp.color_residue_.resize(length);
        uint64_t res = 1;
        for (int col = 0; col < length; ++col) {
            comp.color_residue_[col] = res;
            res = comp.fire_.mulx(res);
        }
        if (cyclic && !comp.try_build_cyclic_table()) continue;  // larger rho, retry
        return comp;
    }
    throw std::invalid_argument("no feasible component code: b=" + std::to_string(b) +
                                " length=" + std::to_string(length));
}

bool ComponentCode::try_build_cyclic_table() {
    // every error set confined to a cyclic window of b colors, keyed by syndrome
    cyclic_table_.clear();
    int bb = fire_.b();
    if ((long long)length_ << (bb - 1) > (1LL << 22))
        throw std::invalid_argument("cyclic component table too large: b=" + std::to_string(bb) +
                                    " over " + std::to_string(length_) + " colors");
    for (int start = 0; start < length_; ++start) {
        for (uint64_t pat = 1; pat < (uint64_t(1) << bb); pat += 2) {  // bit 0 set
            std::vector<int> colors;
            uint64_t syn = 0;
            for (int i = 0; i < bb; ++i)
                if ((pat >> i) & 1) {
                    int col = (start + i) % length_;
                    colors.push_back(col);
                    syn ^= color_residue_[col];
                }
            std::sort(colors.begin(), colors.end());
            colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
            if ((int)colors.size() != __builtin_popcountll(pat)) continue;  // window self-overlap
            auto it = cyclic_table_.find(syn);
            if (it == cyclic_table_.end())
                cyclic_table_.emplace(syn, std::move(colors));
            else if (it->second != colors)
                return false;  // ambiguous syndrome at this p_degree
        }
    }
    return cyclic_table_.count(0) == 0;
}

std::optional<std::vector<int>> ComponentCode::decode_error_colors(uint64_t syndrome) const {
    if (syndrome == 0) return std::vector<int>{};
    if (cyclic_) {
        auto it = cyclic_table_.find(syndrome);
        if (it == cyclic_table_.end()) return std::nullopt;
        return it->second;
    }
    auto burst = fire_.trap(syndrome);
    if (!burst) return std::nullopt;
    std::vector<int> colors;
    for (int i = 0; i <= gf::poly_degree(burst->pattern); ++i)
        if ((burst->pattern >> i) & 1) colors.push_back(burst->position + i);
    return colors;
}

}  // namespace mdecc
