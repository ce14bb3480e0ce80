#pragma once

#include <string>
#include <vector>

namespace mdecc {

/// Coordinates of one array cell, one entry per dimension, 0-based.
using Position = std::vector<int>;

/// Edge lengths of a D-dimensional array. The array is noncyclic: a cluster
/// window that would leave the array does not exist.
struct Dims {
    std::vector<int> edges;  // n_1..n_D, each >= 2

    Dims() = default;
    explicit Dims(std::vector<int> e);
    static Dims cube(int d, int n);
    static Dims parse(const std::string& csv);  // "4,4,4"

    int rank() const { return (int)edges.size(); }
    long long volume() const;
    /// Row-major stride of `axis` (0-based): product of the edges after it.
    long long step(int axis) const;
    long long index_of(const Position& p) const;
    Position position_of(long long idx) const;
    bool in_bounds(const Position& p) const;
    std::string str() const;

    bool operator==(const Dims& o) const { return edges == o.edges; }
};

enum class ShapeKind {
    TwoBurst,        // one cell or two adjacent cells
    ThreeBurstLine,  // confined to three consecutive cells on an axis line
    SemiCross,       // any nonempty subset of a semi-cross window, arms R
    Cross,           // any nonempty subset of a cross window, arms R
    WeightSemiCross, // at most `weight` errors inside a semi-cross window
    WeightCross,     // at most `weight` errors inside a cross window
    WeightSquare,    // at most `weight` errors inside an RxR axis square
};

struct ClusterShape {
    ShapeKind kind = ShapeKind::TwoBurst;
    int arm = 1;     // R where applicable
    int weight = 0;  // 0 = no weight limit

    static ClusterShape two_burst() { return {ShapeKind::TwoBurst, 1, 0}; }
    static ClusterShape three_burst_line() { return {ShapeKind::ThreeBurstLine, 1, 0}; }
    static ClusterShape semi_cross(int r) { return {ShapeKind::SemiCross, r, 0}; }
    static ClusterShape cross(int r) { return {ShapeKind::Cross, r, 0}; }
    static ClusterShape weight_semi_cross(int r, int w = 2) { return {ShapeKind::WeightSemiCross, r, w}; }
    static ClusterShape weight_cross(int r, int w = 2) { return {ShapeKind::WeightCross, r, w}; }
    static ClusterShape weight_square(int r, int w = 2) { return {ShapeKind::WeightSquare, r, w}; }

    /// Cells in one cluster window of this shape in dimension D.
    long long window_cells(int d) const;
    std::string label() const;

    bool operator==(const ClusterShape& o) const {
        return kind == o.kind && arm == o.arm && weight == o.weight;
    }
};

/// A nonempty set of distinct in-bounds cells, kept sorted lexicographically.
struct ErrorPattern {
    std::vector<Position> cells;

    ErrorPattern() = default;
    explicit ErrorPattern(std::vector<Position> c) : cells(std::move(c)) { canonicalize(); }

    void canonicalize();
    int weight() const { return (int)cells.size(); }
    std::string str() const;

    bool operator==(const ErrorPattern& o) const { return cells == o.cells; }
    bool operator!=(const ErrorPattern& o) const { return !(*this == o); }
};

/// Offset vectors of one cluster window relative to its anchor. Defined for
/// the semi-cross and cross families (including their weight-limited
/// variants); other kinds are window families, not single windows.
std::vector<std::vector<int>> shape_offsets(const ClusterShape& shape, int d);

/// Every error pattern in the correctable class of `shape` on `dims`, each
/// exactly once. A pattern belongs to the class iff it is a nonempty subset
/// (of size <= weight when limited) of some cluster window that lies fully
/// inside the array.
std::vector<ErrorPattern> enumerate_patterns(const Dims& dims, const ClusterShape& shape);

/// True iff `pattern` belongs to the correctable class of `shape` on `dims`.
bool confinable(const Dims& dims, const ClusterShape& shape, const ErrorPattern& pattern);

}  // namespace mdecc
