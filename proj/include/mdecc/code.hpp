#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdecc/bits.hpp"
#include "mdecc/lattice.hpp"

namespace mdecc {

enum class DecodeStatus { NoError, Corrected, Uncorrectable, Ambiguous };

std::string to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Uncorrectable;
    ErrorPattern pattern;  // populated when status == Corrected

    static DecodeResult no_error() { return {DecodeStatus::NoError, {}}; }
    static DecodeResult corrected(ErrorPattern p) { return {DecodeStatus::Corrected, std::move(p)}; }
    static DecodeResult uncorrectable() { return {DecodeStatus::Uncorrectable, {}}; }
    static DecodeResult ambiguous() { return {DecodeStatus::Ambiguous, {}}; }
};

struct SegmentInfo {
    std::string name;
    int offset;
    int width;
};

/// A linear code on a D-dimensional binary array, defined by one r-bit
/// parity-check column per cell. The syndrome of an array is the XOR of the
/// columns of its nonzero cells; codewords are exactly the arrays with zero
/// syndrome. Immutable after construction; all members are safe to call
/// concurrently.
class BlockCode {
public:
    virtual ~BlockCode() = default;

    virtual const Dims& dims() const = 0;
    virtual int redundancy() const = 0;
    virtual const ClusterShape& shape() const = 0;
    virtual std::string name() const = 0;
    virtual std::vector<SegmentInfo> segments() const = 0;
    virtual nlohmann::json config_json() const = 0;

    virtual BitVec column_at(long long cell) const = 0;
    BitVec column_of(const Position& p) const { return column_at(dims().index_of(p)); }

    BitVec syndrome_of(const ErrorPattern& e) const;
    /// Syndrome of a full array given as row-major 0/1 cells.
    BitVec syndrome_of_array(const std::vector<uint8_t>& cells) const;

    /// Decodes a syndrome under the promise that the underlying error is
    /// confined to this code's cluster class; anything else may come back as
    /// Uncorrectable or alias to a class pattern.
    virtual DecodeResult decode(const BitVec& syndrome) const = 0;
};

/// Systematic encoder for any BlockCode: scans cells in linear-index order and
/// keeps the first set whose parity-check columns are linearly independent as
/// parity positions; every remaining cell carries one information bit.
class Encoder {
public:
    explicit Encoder(const BlockCode& code);

    int rank() const { return (int)parity_cells_.size(); }
    long long info_bits() const { return code_->dims().volume() - rank(); }
    const std::vector<long long>& parity_cells() const { return parity_cells_; }

    /// info.size() == info_bits(); returns a row-major 0/1 array with zero syndrome.
    std::vector<uint8_t> encode(const std::vector<uint8_t>& info) const;

private:
    const BlockCode* code_;
    std::vector<long long> parity_cells_;
    std::vector<long long> info_cells_;
    std::vector<BitVec> solve_rows_;  // inverse of the parity-column submatrix
};

}  // namespace mdecc
