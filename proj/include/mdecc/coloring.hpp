#pragma once

#include <string>
#include <vector>

#include "mdecc/lattice.hpp"

namespace mdecc {

/// One coloring: color(p) = sum_k coeff[k] * p_k, reduced mod `modulus` when
/// modulus > 0 (plain integer color otherwise).
struct ColoringRow {
    std::vector<long long> coeff;
    long long modulus = 0;
};

/// D x D coloring matrix, one row per coloring.
struct ColoringMatrix {
    std::vector<ColoringRow> rows;

    int dim() const { return (int)rows.size(); }
    bool all_plain() const;
    /// Exact integer determinant of the coefficient matrix.
    long long det() const;
    bool invertible() const { return det() != 0; }

    /// Semi-cross scheme: row 1 is (1, 2, ..., D); row s >= 2 has entry k for
    /// k < s and k - D - 1 for k >= s. All rows plain. The correction guarantee
    /// covers even D; odd D is constructible for experiments.
    static ColoringMatrix semicross(int d);
    /// Same entries with rows 2..D reduced mod n(D+1) on an n-cube.
    static ColoringMatrix semicross_modular(int d, int n);
    /// Cross scheme: entry a_{sk} = s*k mod (2s(D-s+1)+1) with representatives
    /// in [-s(D-s+1), s(D-s+1)]; rows >= 2 reduced mod 2s(D-s+1)n.
    static ColoringMatrix cross(int d, int n);
};

/// A coloring matrix bound to a cluster shape and an array. Records, per
/// coloring: the window span measured from the shape offsets (so the slack
/// delta_s = span_s - B), the color range, and the component length eta_s.
class ColoringScheme {
public:
    ColoringScheme(ColoringMatrix matrix, ClusterShape shape, Dims dims);

    const ColoringMatrix& matrix() const { return matrix_; }
    const ClusterShape& cluster() const { return shape_; }
    const Dims& dims() const { return dims_; }
    int colorings() const { return matrix_.dim(); }
    int burst_cells() const { return burst_; }  // B

    bool modular(int s) const { return matrix_.rows[s].modulus > 0; }
    long long raw_color(int s, const Position& p) const;
    /// 0-based color: raw - lo_s for plain rows, raw mod M for modular rows.
    long long color(int s, const Position& p) const;

    long long lo(int s) const { return lo_[s]; }
    long long span(int s) const { return span_[s]; }          // B + delta_s
    long long delta(int s) const { return span_[s] - burst_; }
    long long length(int s) const { return eta_[s]; }         // eta_s

private:
    ColoringMatrix matrix_;
    ClusterShape shape_;
    Dims dims_;
    int burst_;
    std::vector<long long> lo_, eta_, span_;
};

struct CheckResult {
    bool pass = true;
    std::string detail;  // first counterexample
};

/// (p.1) Colors inside every in-bounds cluster window are distinct and fit in
/// a window of span_s consecutive colors (taken around the color ring for
/// modular rows).
CheckResult check_p1(const ColoringScheme& scheme);
/// (p.2) No two cells of the array share the full color tuple. Exhaustive.
CheckResult check_p2(const ColoringScheme& scheme);
/// Determinant test for (p.2); meaningful for all-plain schemes where it is
/// equivalent to the exhaustive scan.
bool check_p2_determinant(const ColoringScheme& scheme);
/// (p.3) Cells sharing a first color have s-colors congruent mod span_s.
/// Diagnostic only: burst-correcting components do not require it.
CheckResult check_p3(const ColoringScheme& scheme);

/// Component word of coloring s: bit j is the XOR of all cells colored j.
std::vector<uint8_t> project(const ColoringScheme& scheme, int s,
                             const std::vector<uint8_t>& array);

}  // namespace mdecc
