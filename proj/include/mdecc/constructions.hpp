#pragma once

#include <memory>
#include <optional>
#include <unordered_map>

#include "mdecc/bch.hpp"
#include "mdecc/code.hpp"
#include "mdecc/gf.hpp"

namespace mdecc {

/// Smallest m with 2^m - 1 >= volume(dims).
int auto_field_degree(const Dims& dims);

/// Shared layout of the parity-check constructions: an indicator bit, a
/// construction-specific middle segment, and the folded-field segment holding
/// alpha^{linear index} of the cell. Each axis step multiplies the field
/// segment by a fixed power of alpha, which is what the decoders invert.
class ConstructionCode : public BlockCode {
public:
    const Dims& dims() const override { return dims_; }
    int redundancy() const override { return r_; }
    const ClusterShape& shape() const override { return shape_; }
    const gf::Field& field() const { return field_; }
    int field_offset() const { return r_ - field_.degree(); }

protected:
    ConstructionCode(Dims dims, int m, ClusterShape shape);

    /// Every x < N with alpha^x * gamma = sigma. With 2^m - 1 >= N there is at
    /// most one; at the minimal degree (2^m = N) the folding wraps once and a
    /// second candidate x + 2^m - 1 may exist.
    std::vector<long long> anchor_candidates(uint32_t sigma, uint32_t gamma) const;
    uint32_t field_bits(const BitVec& s) const { return (uint32_t)s.get_bits(field_offset(), field_.degree()); }
    /// Accumulates candidates that recompute to `s` and lie in the cluster class.
    void consider(const BitVec& s, std::vector<Position> cells,
                  std::vector<ErrorPattern>& found) const;
    /// Corrected when exactly one candidate survived, else uncorrectable.
    static DecodeResult resolve(std::vector<ErrorPattern> found);

    Dims dims_;
    gf::Field field_;
    ClusterShape shape_;
    int r_ = 0;
};

/// Corrects any error pattern confined to a 2-burst. Column: indicator 1,
/// the d-bit dimension tag A i^T (column j of A is the binary code of j),
/// then alpha^{linear index}. Redundancy m + ceil(log2 D) + 1.
class CodeA final : public ConstructionCode {
public:
    CodeA(Dims dims, int m);

    int dim_bits() const { return d_; }
    std::string name() const override;
    std::vector<SegmentInfo> segments() const override;
    nlohmann::json config_json() const override;
    BitVec column_at(long long cell) const override;
    DecodeResult decode(const BitVec& s) const override;

private:
    int d_;
};

/// Corrects any error pattern confined to a 3-burst on an axis line. Column:
/// indicator, coordinate-sum parity, ceil(log2(D+1)) GF(4) symbols
/// beta^{B i^T} (integer matrix product), then alpha^{linear index}.
/// Redundancy m + 2 ceil(log2(D+1)) + 2.
class CodeB final : public ConstructionCode {
public:
    CodeB(Dims dims, int m);

    int gf4_symbols() const { return q_; }
    /// Integer column of B for axis j (0-based): value D - j, MSB in row 0.
    int b_column(int axis) const { return dims_.rank() - axis; }
    std::string name() const override;
    std::vector<SegmentInfo> segments() const override;
    nlohmann::json config_json() const override;
    BitVec column_at(long long cell) const override;
    DecodeResult decode(const BitVec& s) const override;

private:
    uint8_t gf4_symbol(const Position& p, int row) const;
    std::optional<int> axis_for_value(int v) const;

    int q_;
};

/// Corrects up to two errors inside a semi-cross with arms of length one.
/// Middle segment is H i^T mod 2 with H a double-error-correcting BCH column
/// set, one column per dimension. When 2^d - 1 < D the component degree is
/// raised to the smallest sufficient d'; realized redundancy is m + 2d' + 1.
class CodeC final : public ConstructionCode {
public:
    CodeC(Dims dims, int m);

    const BchColumns& bch() const { return bch_; }
    int nominal_dim_bits() const { return d_nominal_; }
    int realized_dim_bits() const { return bch_.degree(); }
    std::string name() const override;
    std::vector<SegmentInfo> segments() const override;
    nlohmann::json config_json() const override;
    BitVec column_at(long long cell) const override;
    DecodeResult decode(const BitVec& s) const override;

private:
    int d_nominal_;
    BchColumns bch_;
};

/// Corrects up to two errors inside a semi-cross with arms of length R.
/// Middle segment XORs, per dimension, one of 2R dedicated columns of a
/// four-error-correcting BCH set selected by the coordinate mod 2R.
/// Redundancy m + 4t + 1 with t the smallest integer where 2^t - 1 >= 2RD.
class CodeD final : public ConstructionCode {
public:
    CodeD(Dims dims, int m, int arm);

    int arm() const { return arm_; }
    int t() const { return bch_.degree(); }
    const BchColumns& bch() const { return bch_; }
    std::string name() const override;
    std::vector<SegmentInfo> segments() const override;
    nlohmann::json config_json() const override;
    BitVec column_at(long long cell) const override;
    DecodeResult decode(const BitVec& s) const override;
    /// Algebraic path only (no table fallback); nullopt when it cannot narrow.
    std::optional<DecodeResult> decode_algebraic(const BitVec& s) const;

private:
    void build_table();

    int arm_;
    BchColumns bch_;
    std::unordered_map<BitVec, ErrorPattern, BitVecHash> table_;
};

/// Corrects up to two errors inside a cross with arms of length one. Like the
/// semi-cross weight-2 code with residues mod 4 plus one extra bit
/// floor(sum(i)/2) mod 2 that separates equal-sign from opposite-sign
/// diagonal pairs. Redundancy m + 4t + 2 with 2^t - 1 >= 4D.
class CodeE final : public ConstructionCode {
public:
    CodeE(Dims dims, int m);

    int t() const { return bch_.degree(); }
    const BchColumns& bch() const { return bch_; }
    std::string name() const override;
    std::vector<SegmentInfo> segments() const override;
    nlohmann::json config_json() const override;
    BitVec column_at(long long cell) const override;
    DecodeResult decode(const BitVec& s) const override;
    std::optional<DecodeResult> decode_algebraic(const BitVec& s) const;

private:
    void build_table();

    BchColumns bch_;
    std::unordered_map<BitVec, ErrorPattern, BitVecHash> table_;
};

}  // namespace mdecc
