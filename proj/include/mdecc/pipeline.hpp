#pragma once

#include "mdecc/code.hpp"
#include "mdecc/coloring.hpp"
#include "mdecc/fire.hpp"

namespace mdecc {

/// D-dimensional code assembled from a coloring scheme and one Fire component
/// code per coloring. A cell's parity-check column concatenates, per
/// component, the residue x^{color_s(cell)} mod g_s; an array is a codeword
/// exactly when all its component projections are component codewords. Total
/// redundancy is the sum of the component redundancies.
class ColoringCode final : public BlockCode {
public:
    /// Builds the component for coloring s with burst capability
    /// span_s = B + delta_s over eta_s colors; scheme must satisfy (p.1) and
    /// (p.2). Throws std::invalid_argument when a component is infeasible.
    static ColoringCode assemble(ColoringScheme scheme, std::string variant);

    const ColoringScheme& scheme() const { return scheme_; }
    const std::vector<ComponentCode>& components() const { return components_; }
    int component_offset(int s) const { return offsets_[s]; }
    const std::string& variant() const { return variant_; }

    const Dims& dims() const override { return scheme_.dims(); }
    int redundancy() const override { return r_; }
    const ClusterShape& shape() const override { return scheme_.cluster(); }
    std::string name() const override;
    std::vector<SegmentInfo> segments() const override;
    nlohmann::json config_json() const override;
    BitVec column_at(long long cell) const override;

    /// Component-wise burst decoding followed by reference matching: the
    /// erroneous cells are the unique cluster-confined cell set whose color
    /// sets reproduce every component's erroneous colors.
    DecodeResult decode(const BitVec& syndrome) const override;
    DecodeResult decode_array(const std::vector<uint8_t>& received) const;

private:
    ColoringCode(ColoringScheme scheme, std::string variant);

    ColoringScheme scheme_;
    std::string variant_;
    std::vector<ComponentCode> components_;
    std::vector<int> offsets_;
    int r_ = 0;
};

}  // namespace mdecc
