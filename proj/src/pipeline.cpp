#include "mdecc/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdecc {

ColoringCode::ColoringCode(ColoringScheme scheme, std::string variant)
    : scheme_(std::move(scheme)), variant_(std::move(variant)) {}

ColoringCode ColoringCode::assemble(ColoringScheme scheme, std::string variant) {
    auto p1 = check_p1(scheme);
    if (!p1.pass) throw std::invalid_argument("scheme fails (p.1): " + p1.detail);
    auto p2 = check_p2(scheme);
    if (!p2.pass) throw std::invalid_argument("scheme fails (p.2): " + p2.detail);
    ColoringCode code(std::move(scheme), std::move(variant));
    int off = 0;
    for (int s = 0; s < code.scheme_.colorings(); ++s) {
        code.components_.push_back(ComponentCode::build(s, (int)code.scheme_.span(s),
                                                        (int)code.scheme_.length(s),
                                                        code.scheme_.modular(s)));
        code.offsets_.push_back(off);
        off += code.components_.back().redundancy();
    }
    code.r_ = off;
    return code;
}

std::string ColoringCode::name() const {
    return "coloring-" + variant_ + "[" + scheme_.dims().str() +
           " r=" + std::to_string(r_) + "]";
}

std::vector<SegmentInfo> ColoringCode::segments() const {
    std::vector<SegmentInfo> seg;
    for (size_t s = 0; s < components_.size(); ++s)
        seg.push_back({"component" + std::to_string(s + 1), offsets_[s],
                       components_[s].redundancy()});
    return seg;
}

nlohmann::json ColoringCode::config_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : components_)
        comps.push_back({{"s", c.coloring_index() + 1},
                         {"b", c.b()},
                         {"p_degree", c.fire().p_degree()},
                         {"length", c.length()},
                         {"cyclic", c.cyclic()},
                         {"redundancy", c.redundancy()}});
    return {{"construction", "coloring-" + variant_},
            {"D", scheme_.dims().rank()},
            {"n", scheme_.dims().edges[0]},
            {"components", comps}};
}

BitVec ColoringCode::column_at(long long cell) const {
    Position p = scheme_.dims().position_of(cell);
    BitVec col(r_);
    for (size_t s = 0; s < components_.size(); ++s) {
        uint64_t res = components_[s].color_residue((int)scheme_.color((int)s, p));
        col.set_bits(offsets_[s], components_[s].redundancy(), res);
    }
    return col;
}

DecodeResult ColoringCode::decode(const BitVec& s) const {
    if (s.none()) return DecodeResult::no_error();
    int d = scheme_.colorings();
    std::vector<std::vector<int>> colors(d);
    for (int k = 0; k < d; ++k) {
        auto e = components_[k].decode_error_colors(
            s.get_bits(offsets_[k], components_[k].redundancy()));
        if (!e) return DecodeResult::uncorrectable();
        colors[k] = std::move(*e);
    }
    int w = (int)colors[0].size();
    if (w == 0) return DecodeResult::uncorrectable();  // nonzero syndrome, clean components
    for (int k = 1; k < d; ++k)
        if ((int)colors[k].size() != w) return DecodeResult::uncorrectable();

    // candidate cells: every color matches some erroneous color of its coloring
    long long n = scheme_.dims().volume();
    std::vector<long long> candidates;
    std::vector<std::vector<int>> cand_slot;  // per candidate: index into colors[k], per k
    for (long long idx = 0; idx < n; ++idx) {
        Position p = scheme_.dims().position_of(idx);
        std::vector<int> slot(d);
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
            long long c = scheme_.color(k, p);
            auto it = std::find(colors[k].begin(), colors[k].end(), c);
            if (it == colors[k].end())
                ok = false;
            else
                slot[k] = (int)(it - colors[k].begin());
        }
        if (ok) {
            candidates.push_back(idx);
            cand_slot.push_back(std::move(slot));
        }
    }
    if ((int)candidates.size() < w) return DecodeResult::uncorrectable();

    // pick one cell per erroneous first color so that every coloring's
    // erroneous color set is consumed exactly once
    std::vector<std::vector<int>> by_first(w);
    for (size_t c = 0; c < candidates.size(); ++c) by_first[cand_slot[c][0]].push_back((int)c);
    std::vector<std::vector<char>> used(d, std::vector<char>(w, 0));
    std::vector<int> chosen;
    std::vector<ErrorPattern> matches;
    auto rec = [&](auto&& self, int i) -> void {
        if ((int)matches.size() > 1) return;
        if (i == w) {
            std::vector<Position> cells;
            for (int c : chosen) cells.push_back(scheme_.dims().position_of(candidates[c]));
            ErrorPattern pat(std::move(cells));
            if (pat.weight() != w) return;
            if (!confinable(scheme_.dims(), scheme_.cluster(), pat)) return;
            if (syndrome_of(pat) != s) return;
            if (std::find(matches.begin(), matches.end(), pat) == matches.end())
                matches.push_back(std::move(pat));
            return;
        }
        for (int c : by_first[i]) {
            bool free = true;
            for (int k = 1; k < d && free; ++k)
                if (used[k][cand_slot[c][k]]) free = false;
            if (!free) continue;
            for (int k = 1; k < d; ++k) used[k][cand_slot[c][k]] = 1;
            chosen.push_back(c);
            self(self, i + 1);
            chosen.pop_back();
            for (int k = 1; k < d; ++k) used[k][cand_slot[c][k]] = 0;
        }
    };
    rec(rec, 0);
    if (matches.empty()) return DecodeResult::uncorrectable();
    if (matches.size() > 1) return DecodeResult::ambiguous();
    return DecodeResult::corrected(matches[0]);
}

DecodeResult ColoringCode::decode_array(const std::vector<uint8_t>& received) const {
    return decode(syndrome_of_array(received));
}

}  // namespace mdecc
