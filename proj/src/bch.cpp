#include "mdecc/bch.hpp"

#include <stdexcept>

namespace mdecc {

BchColumns BchColumns::build(int t_cap, int count) {
    int degree = gf::kMinDegree;
    while (((uint32_t(1) << degree) - 1) < (uint32_t)count) ++degree;
    return build(t_cap, count, degree);
}

BchColumns BchColumns::build(int t_cap, int count, int degree) {
    return BchColumns(t_cap, count, degree);
}

BchColumns::BchColumns(int t_cap, int count, int degree) : t_cap_(t_cap), degree_(degree) {
    if (t_cap != 2 && t_cap != 4) throw std::invalid_argument("t_cap must be 2 or 4");
    if (count < 1) throw std::invalid_argument("need at least one column");
    gf::Field f(degree);
    if ((uint32_t)count > f.order())
        throw std::invalid_argument("column count exceeds 2^degree - 1");
    int parts = t_cap / 2 * 2;  // 2 or 4 field elements per column
    cols_.reserve(count);
    for (int c = 0; c < count; ++c) {
        uint64_t col = 0;
        for (int p = 0; p < parts; ++p) {
            uint32_t e = f.pow_alpha((long long)(2 * p + 1) * c);
            col |= uint64_t(e) << (p * degree);
        }
        cols_.push_back(col);
    }
    // precomputed subset sums of size 1..t_cap; distinctness is the designed
    // distance of the code and must hold for a valid column set
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int want, uint64_t acc) -> void {
        if (want == 0) {
            auto [it, fresh] = sums_.emplace(acc, idx);
            if (!fresh) throw std::logic_error("BCH subset-sum collision; column set invalid");
            return;
        }
        for (int i = start; i <= count - want; ++i) {
            idx.push_back(i);
            self(self, i + 1, want - 1, acc ^ cols_[i]);
            idx.pop_back();
        }
    };
    for (int w = 1; w <= t_cap; ++w) rec(rec, 0, w, 0);
    if (sums_.count(0)) throw std::logic_error("BCH column set has a vanishing subset sum");
}

std::optional<std::vector<int>> BchColumns::identify(uint64_t sum, int max_size) const {
    if (sum == 0) return std::vector<int>{};
    auto it = sums_.find(sum);
    if (it == sums_.end() || (int)it->second.size() > max_size) return std::nullopt;
    return it->second;
}

}  // namespace mdecc
