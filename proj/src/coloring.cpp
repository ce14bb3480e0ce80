#include "mdecc/coloring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mdecc {

bool ColoringMatrix::all_plain() const {
    for (const auto& r : rows)
        if (r.modulus > 0) return false;
    return true;
}

long long ColoringMatrix::det() const {
    // Bareiss fraction-free elimination, exact in 128 bits at these sizes
    int n = dim();
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = rows[i].coeff[j];
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    __int128 det = sign * a[n - 1][n - 1];
    if (det > std::numeric_limits<long long>::max() || det < std::numeric_limits<long long>::min())
        throw std::overflow_error("determinant exceeds 64 bits");
    return (long long)det;
}

ColoringMatrix ColoringMatrix::semicross(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    ColoringMatrix m;
    m.rows.resize(d);
    for (int k = 0; k < d; ++k) m.rows[0].coeff.push_back(k + 1);
    for (int s0 = 1; s0 < d; ++s0)
        for (int k = 0; k < d; ++k)
            m.rows[s0].coeff.push_back(k < s0 ? k + 1 : k + 1 - d - 1);
    return m;
}

ColoringMatrix ColoringMatrix::semicross_modular(int d, int n) {
    ColoringMatrix m = semicross(d);
    for (int s0 = 1; s0 < d; ++s0) m.rows[s0].modulus = (long long)n * (d + 1);
    return m;
}

ColoringMatrix ColoringMatrix::cross(int d, int n) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    ColoringMatrix m;
    m.rows.resize(d);
    for (int s0 = 0; s0 < d; ++s0) {
        long long s = s0 + 1;
        long long half = s * (d - s + 1);
        long long genmod = 2 * half + 1;
        for (int k = 0; k < d; ++k) {
            long long a = (s * (k + 1)) % genmod;
            if (a > half) a -= genmod;
            m.rows[s0].coeff.push_back(a);
        }
        if (s0 > 0) m.rows[s0].modulus = 2 * half * n;
    }
    return m;
}

ColoringScheme::ColoringScheme(ColoringMatrix matrix, ClusterShape shape, Dims dims)
    : matrix_(std::move(matrix)), shape_(shape), dims_(std::move(dims)) {
    int d = dims_.rank();
    if (matrix_.dim() != d) throw std::invalid_argument("matrix dimension must match the array");
    burst_ = (int)shape_.window_cells(d);
    auto offs = shape_offsets(shape_, d);
    for (int s = 0; s < d; ++s) {
        const auto& row = matrix_.rows[s];
        long long mn = 0, mx = 0;
        for (const auto& o : offs) {
            long long v = 0;
            for (int k = 0; k < d; ++k) v += row.coeff[k] * o[k];
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        span_.push_back(mx - mn + 1);
        if (row.modulus > 0) {
            lo_.push_back(0);
            eta_.push_back(row.modulus);
        } else {
            long long lo = 0, hi = 0;
            for (int k = 0; k < d; ++k) {
                long long reach = row.coeff[k] * (dims_.edges[k] - 1);
                lo += std::min(0LL, reach);
                hi += std::max(0LL, reach);
            }
            lo_.push_back(lo);
            eta_.push_back(hi - lo + 1);
        }
    }
}

long long ColoringScheme::raw_color(int s, const Position& p) const {
    const auto& row = matrix_.rows[s];
    long long v = 0;
    for (int k = 0; k < dims_.rank(); ++k) v += row.coeff[k] * p[k];
    return v;
}

long long ColoringScheme::color(int s, const Position& p) const {
    long long v = raw_color(s, p);
    long long m = matrix_.rows[s].modulus;
    if (m > 0) return ((v % m) + m) % m;
    return v - lo_[s];
}

namespace {

template <typename F>
void for_each_anchor(const ColoringScheme& sch, F&& f) {
    const Dims& dims = sch.dims();
    int d = dims.rank();
    bool crossed = sch.cluster().kind == ShapeKind::Cross || sch.cluster().kind == ShapeKind::WeightCross;
    int r = sch.cluster().arm;
    Position lo(d), hi(d);
    for (int k = 0; k < d; ++k) {
        lo[k] = crossed ? r : 0;
        hi[k] = dims.edges[k] - 1 - r;
        if (lo[k] > hi[k]) return;
    }
    Position p = lo;
    while (true) {
        f(p);
        int k = d - 1;
        while (k >= 0) {
            if (++p[k] <= hi[k]) break;
            p[k] = lo[k];
            --k;
        }
        if (k < 0) return;
    }
}

std::string anchor_str(const Position& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

CheckResult check_p1(const ColoringScheme& sch) {
    int d = sch.dims().rank();
    auto offs = shape_offsets(sch.cluster(), d);
    // raw offset colors per coloring; window colors are these plus the anchor color
    std::vector<std::vector<long long>> offcolor(d);
    for (int s = 0; s < d; ++s)
        for (const auto& o : offs) {
            long long v = 0;
            for (int k = 0; k < d; ++k) v += sch.matrix().rows[s].coeff[k] * o[k];
            offcolor[s].push_back(v);
        }
    CheckResult res;
    std::vector<long long> colors(offs.size());
    for_each_anchor(sch, [&](const Position& anchor) {
        if (!res.pass) return;
        for (int s = 0; s < d && res.pass; ++s) {
            long long base = sch.raw_color(s, anchor);
            long long m = sch.matrix().rows[s].modulus;
            for (size_t c = 0; c < offs.size(); ++c) {
                long long v = base + offcolor[s][c];
                colors[c] = m > 0 ? ((v % m) + m) % m : v;
            }
            std::sort(colors.begin(), colors.end());
            for (size_t c = 1; c < colors.size(); ++c)
                if (colors[c] == colors[c - 1]) {
                    res = {false, "duplicate color " + std::to_string(colors[c]) + " in coloring " +
                                      std::to_string(s + 1) + " at anchor " + anchor_str(anchor)};
                    return;
                }
            long long extent;
            if (m > 0) {
                // smallest window around the color ring covering every color
                long long maxgap = colors.front() + m - colors.back();
                for (size_t c = 1; c < colors.size(); ++c)
                    maxgap = std::max(maxgap, colors[c] - colors[c - 1]);
                extent = m - maxgap;
            } else {
                extent = colors.back() - colors.front();
            }
            if (extent > sch.span(s) - 1) {
                res = {false, "coloring " + std::to_string(s + 1) + " spreads over " +
                                  std::to_string(extent + 1) + " > " + std::to_string(sch.span(s)) +
                                  " colors at anchor " + anchor_str(anchor)};
                return;
            }
        }
    });
    return res;
}

namespace {

// Walks all positions in row-major order keeping the raw colors incrementally.
template <typename F>
void scan_colors(const ColoringScheme& sch, F&& f) {
    const Dims& dims = sch.dims();
    int d = dims.rank();
    long long n = dims.volume();
    std::vector<long long> raw(d, 0);
    Position p(d, 0);
    for (long long idx = 0; idx < n; ++idx) {
        f(idx, raw);
        int k = d - 1;
        while (k >= 0) {
            if (p[k] + 1 < dims.edges[k]) {
                ++p[k];
                for (int s = 0; s < d; ++s) raw[s] += sch.matrix().rows[s].coeff[k];
                break;
            }
            for (int s = 0; s < d; ++s) raw[s] -= sch.matrix().rows[s].coeff[k] * p[k];
            p[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

unsigned __int128 tuple_key(const ColoringScheme& sch, const std::vector<long long>& raw) {
    unsigned __int128 key = 0;
    for (int s = 0; s < sch.colorings(); ++s) {
        long long m = sch.matrix().rows[s].modulus;
        long long c = m > 0 ? ((raw[s] % m) + m) % m : raw[s] - sch.lo(s);
        key = key * (unsigned __int128)sch.length(s) + (unsigned __int128)c;
    }
    return key;
}

}  // namespace

CheckResult check_p2(const ColoringScheme& sch) {
    long long n = sch.dims().volume();
    std::vector<uint64_t> hashes;
    hashes.reserve(n);
    scan_colors(sch, [&](long long, const std::vector<long long>& raw) {
        unsigned __int128 key = tuple_key(sch, raw);
        hashes.push_back(mix64((uint64_t)key) ^ mix64((uint64_t)(key >> 64) + 0x51ed2701));
    });
    std::vector<uint64_t> sorted = hashes;
    std::sort(sorted.begin(), sorted.end());
    std::unordered_set<uint64_t> dup;
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) dup.insert(sorted[i]);
    if (dup.empty()) return {};
    // second pass: exact keys for the few positions whose hash collided
    std::vector<std::pair<unsigned __int128, long long>> exact;
    scan_colors(sch, [&](long long idx, const std::vector<long long>& raw) {
        if (dup.count(hashes[idx])) exact.emplace_back(tuple_key(sch, raw), idx);
    });
    std::sort(exact.begin(), exact.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < exact.size(); ++i)
        if (exact[i].first == exact[i - 1].first) {
            Position a = sch.dims().position_of(exact[i - 1].second);
            Position b = sch.dims().position_of(exact[i].second);
            return {false, "positions " + anchor_str(a) + " and " + anchor_str(b) +
                               " share every color"};
        }
    return {};
}

bool check_p2_determinant(const ColoringScheme& sch) { return sch.matrix().invertible(); }

CheckResult check_p3(const ColoringScheme& sch) {
    long long n = sch.dims().volume();
    if (n > 200000) throw std::invalid_argument("p3 diagnostic limited to small arrays");
    std::unordered_map<long long, std::vector<long long>> buckets;
    for (long long idx = 0; idx < n; ++idx)
        buckets[sch.color(0, sch.dims().position_of(idx))].push_back(idx);
    for (const auto& [c1, cells] : buckets) {
        (void)c1;
        for (size_t i = 0; i < cells.size(); ++i)
            for (size_t j = i + 1; j < cells.size(); ++j) {
                Position a = sch.dims().position_of(cells[i]);
                Position b = sch.dims().position_of(cells[j]);
                for (int s = 1; s < sch.colorings(); ++s) {
                    long long period = sch.span(s);
                    long long m = sch.matrix().rows[s].modulus;
                    long long diff = sch.color(s, a) - sch.color(s, b);
                    bool ok;
                    if (m > 0) {
                        long long dd = ((diff % m) + m) % m;
                        ok = dd % period == 0 || (m - dd) % period == 0;
                    } else {
                        ok = (diff % period) == 0;
                    }
                    if (!ok)
                        return {false, "cells " + anchor_str(a) + " and " + anchor_str(b) +
                                           " share color 1 but coloring " + std::to_string(s + 1) +
                                           " differs by " + std::to_string(diff)};
                }
            }
    }
    return {};
}

std::vector<uint8_t> project(const ColoringScheme& sch, int s, const std::vector<uint8_t>& array) {
    long long n = sch.dims().volume();
    if ((long long)array.size() != n) throw std::invalid_argument("array size does not match dims");
    std::vector<uint8_t> word(sch.length(s), 0);
    for (long long idx = 0; idx < n; ++idx)
        if (array[idx]) word[sch.color(s, sch.dims().position_of(idx))] ^= 1;
    return word;
}

}  // namespace mdecc
