#include "mdecc/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdecc {

Dims::Dims(std::vector<int> e) : edges(std::move(e)) {
    if (edges.empty()) throw std::invalid_argument("dims: at least one dimension required");
    for (int n : edges)
        if (n < 2) throw std::invalid_argument("dims: every edge must be >= 2");
}

Dims Dims::cube(int d, int n) { return Dims(std::vector<int>(d, n)); }

Dims Dims::parse(const std::string& csv) {
    std::vector<int> e;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        e.push_back(std::stoi(tok));
    }
    return Dims(e);
}

long long Dims::volume() const {
    long long v = 1;
    for (int n : edges) v *= n;
    return v;
}

long long Dims::step(int axis) const {
    long long s = 1;
    for (int k = axis + 1; k < rank(); ++k) s *= edges[k];
    return s;
}

long long Dims::index_of(const Position& p) const {
    if (!in_bounds(p)) throw std::out_of_range("position out of bounds");
    long long idx = 0;
    for (int k = 0; k < rank(); ++k) idx = idx * edges[k] + p[k];
    return idx;
}

Position Dims::position_of(long long idx) const {
    Position p(rank());
    for (int k = rank() - 1; k >= 0; --k) {
        p[k] = int(idx % edges[k]);
        idx /= edges[k];
    }
    return p;
}

bool Dims::in_bounds(const Position& p) const {
    if ((int)p.size() != rank()) return false;
    for (int k = 0; k < rank(); ++k)
        if (p[k] < 0 || p[k] >= edges[k]) return false;
    return true;
}

std::string Dims::str() const {
    std::string s;
    for (int k = 0; k < rank(); ++k) {
        if (k) s += ",";
        s += std::to_string(edges[k]);
    }
    return s;
}

long long ClusterShape::window_cells(int d) const {
    switch (kind) {
        case ShapeKind::TwoBurst: return 2;
        case ShapeKind::ThreeBurstLine: return 3;
        case ShapeKind::SemiCross:
        case ShapeKind::WeightSemiCross: return (long long)arm * d + 1;
        case ShapeKind::Cross:
        case ShapeKind::WeightCross: return 2LL * arm * d + 1;
        case ShapeKind::WeightSquare: return (long long)arm * arm;
    }
    return 0;
}

std::string ClusterShape::label() const {
    switch (kind) {
        case ShapeKind::TwoBurst: return "two-burst";
        case ShapeKind::ThreeBurstLine: return "three-burst-line";
        case ShapeKind::SemiCross: return "semicross(" + std::to_string(arm) + ")";
        case ShapeKind::Cross: return "cross(" + std::to_string(arm) + ")";
        case ShapeKind::WeightSemiCross:
            return "weight" + std::to_string(weight) + "-semicross(" + std::to_string(arm) + ")";
        case ShapeKind::WeightCross:
            return "weight" + std::to_string(weight) + "-cross(" + std::to_string(arm) + ")";
        case ShapeKind::WeightSquare:
            return "weight" + std::to_string(weight) + "-square(" + std::to_string(arm) + ")";
    }
    return "?";
}

void ErrorPattern::canonicalize() {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

std::string ErrorPattern::str() const {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ";";
        s += "(";
        for (size_t k = 0; k < cells[i].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(cells[i][k]);
        }
        s += ")";
    }
    return s;
}

std::vector<std::vector<int>> shape_offsets(const ClusterShape& shape, int d) {
    std::vector<std::vector<int>> offs;
    offs.emplace_back(d, 0);
    switch (shape.kind) {
        case ShapeKind::SemiCross:
        case ShapeKind::WeightSemiCross:
            for (int j = 0; j < d; ++j)
                for (int l = 1; l <= shape.arm; ++l) {
                    std::vector<int> o(d, 0);
                    o[j] = l;
                    offs.push_back(o);
                }
            return offs;
        case ShapeKind::Cross:
        case ShapeKind::WeightCross:
            for (int j = 0; j < d; ++j)
                for (int l = 1; l <= shape.arm; ++l) {
                    std::vector<int> o(d, 0);
                    o[j] = l;
                    offs.push_back(o);
                    o[j] = -l;
                    offs.push_back(o);
                }
            return offs;
        default:
            throw std::invalid_argument("shape_offsets: " + shape.label() +
                                        " is a window family, not a single window");
    }
}

namespace {

// Iterates every position of the box [lo_k, hi_k] per coordinate.
template <typename F>
void for_each_in_box(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) {
    int d = (int)lo.size();
    for (int k = 0; k < d; ++k)
        if (lo[k] > hi[k]) return;
    Position p(lo.begin(), lo.end());
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

struct PatternSet {
    const Dims& dims;
    std::set<std::vector<long long>> seen;
    std::vector<ErrorPattern> out;

    explicit PatternSet(const Dims& d) : dims(d) {}

    void add(const std::vector<Position>& cells) {
        std::vector<long long> key;
        key.reserve(cells.size());
        for (const auto& c : cells) key.push_back(dims.index_of(c));
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(ErrorPattern(cells));
    }
};

// Emits every nonempty subset of `window`, limited to `max_w` cells (0 = all).
void emit_subsets(const std::vector<Position>& window, int max_w, PatternSet& ps) {
    int n = (int)window.size();
    if (max_w == 0 || max_w >= n) {
        if (n > 24) throw std::invalid_argument("cluster window too large for full subset enumeration");
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
            std::vector<Position> cells;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) cells.push_back(window[i]);
            ps.add(cells);
        }
        return;
    }
    // size-limited: combinations of each size up to max_w
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start, int want) -> void {
        if (want == 0) {
            std::vector<Position> cells;
            for (int i : idx) cells.push_back(window[i]);
            ps.add(cells);
            return;
        }
        for (int i = start; i <= n - want; ++i) {
            idx.push_back(i);
            self(self, i + 1, want - 1);
            idx.pop_back();
        }
    };
    for (int w = 1; w <= max_w; ++w) rec(rec, 0, w);
}

}  // namespace

std::vector<ErrorPattern> enumerate_patterns(const Dims& dims, const ClusterShape& shape) {
    int d = dims.rank();
    PatternSet ps(dims);

    auto line_windows = [&](int len) {
        for (int j = 0; j < d; ++j) {
            if (dims.edges[j] < len) continue;
            std::vector<int> lo(d, 0), hi(dims.edges.begin(), dims.edges.end());
            for (int k = 0; k < d; ++k) hi[k] -= 1;
            hi[j] = dims.edges[j] - len;
            for_each_in_box(lo, hi, [&](const Position& q) {
                std::vector<Position> window;
                for (int l = 0; l < len; ++l) {
                    Position c = q;
                    c[j] += l;
                    window.push_back(c);
                }
                emit_subsets(window, 0, ps);
            });
        }
    };

    switch (shape.kind) {
        case ShapeKind::TwoBurst:
            line_windows(2);
            break;
        case ShapeKind::ThreeBurstLine:
            line_windows(3);
            break;
        case ShapeKind::SemiCross:
        case ShapeKind::WeightSemiCross:
        case ShapeKind::Cross:
        case ShapeKind::WeightCross: {
            bool crossed = shape.kind == ShapeKind::Cross || shape.kind == ShapeKind::WeightCross;
            auto offs = shape_offsets(shape, d);
            std::vector<int> lo(d), hi(d);
            for (int k = 0; k < d; ++k) {
                lo[k] = crossed ? shape.arm : 0;
                hi[k] = dims.edges[k] - 1 - shape.arm;
            }
            for_each_in_box(lo, hi, [&](const Position& q) {
                std::vector<Position> window;
                for (const auto& o : offs) {
                    Position c = q;
                    for (int k = 0; k < d; ++k) c[k] += o[k];
                    window.push_back(c);
                }
                emit_subsets(window, shape.weight, ps);
            });
            break;
        }
        case ShapeKind::WeightSquare: {
            if (d < 2) throw std::invalid_argument("square shape needs at least two dimensions");
            int r = shape.arm;
            for (int j = 0; j < d; ++j)
                for (int k = j + 1; k < d; ++k) {
                    if (dims.edges[j] < r || dims.edges[k] < r) continue;
                    std::vector<int> lo(d, 0), hi(d);
                    for (int t = 0; t < d; ++t) hi[t] = dims.edges[t] - 1;
                    hi[j] = dims.edges[j] - r;
                    hi[k] = dims.edges[k] - r;
                    for_each_in_box(lo, hi, [&](const Position& q) {
                        std::vector<Position> window;
                        for (int a = 0; a < r; ++a)
                            for (int b = 0; b < r; ++b) {
                                Position c = q;
                                c[j] += a;
                                c[k] += b;
                                window.push_back(c);
                            }
                        emit_subsets(window, shape.weight, ps);
                    });
                }
            break;
        }
    }
    return std::move(ps.out);
}

namespace {

bool line_confinable(const Dims& dims, int len, const ErrorPattern& p) {
    int d = dims.rank();
    int w = p.weight();
    if (w > len) return false;
    for (int j = 0; j < d; ++j) {
        bool same = true;
        for (int k = 0; k < d && same; ++k) {
            if (k == j) continue;
            for (int i = 1; i < w; ++i)
                if (p.cells[i][k] != p.cells[0][k]) {
                    same = false;
                    break;
                }
        }
        if (!same) continue;
        int lo = p.cells[0][j], hi = p.cells[0][j];
        for (int i = 1; i < w; ++i) {
            lo = std::min(lo, p.cells[i][j]);
            hi = std::max(hi, p.cells[i][j]);
        }
        if (hi - lo > len - 1) continue;
        int qlo = std::max(0, hi - (len - 1));
        int qhi = std::min(lo, dims.edges[j] - len);
        if (qlo <= qhi) return true;
    }
    return false;
}

bool offset_valid(const Position& cell, const Position& q, const ClusterShape& shape) {
    int nz = -1;
    for (int k = 0; k < (int)cell.size(); ++k) {
        if (cell[k] == q[k]) continue;
        if (nz >= 0) return false;
        nz = k;
    }
    if (nz < 0) return true;  // the anchor itself
    int delta = cell[nz] - q[nz];
    bool crossed = shape.kind == ShapeKind::Cross || shape.kind == ShapeKind::WeightCross;
    if (crossed) return delta >= -shape.arm && delta <= shape.arm;
    return delta >= 1 && delta <= shape.arm;
}

bool star_confinable(const Dims& dims, const ClusterShape& shape, const ErrorPattern& p) {
    int d = dims.rank();
    int r = shape.arm;
    bool crossed = shape.kind == ShapeKind::Cross || shape.kind == ShapeKind::WeightCross;
    std::vector<int> lo(d), hi(d);
    for (int k = 0; k < d; ++k) {
        int cmin = p.cells[0][k], cmax = p.cells[0][k];
        for (const auto& c : p.cells) {
            cmin = std::min(cmin, c[k]);
            cmax = std::max(cmax, c[k]);
        }
        if (crossed) {
            lo[k] = std::max({cmax - r, r});
            hi[k] = std::min({cmin + r, dims.edges[k] - 1 - r});
        } else {
            lo[k] = std::max(cmax - r, 0);
            hi[k] = std::min(cmin, dims.edges[k] - 1 - r);
        }
        if (lo[k] > hi[k]) return false;
    }
    bool found = false;
    for_each_in_box(lo, hi, [&](const Position& q) {
        if (found) return;
        for (const auto& c : p.cells)
            if (!offset_valid(c, q, shape)) return;
        found = true;
    });
    return found;
}

bool square_confinable(const Dims& dims, const ClusterShape& shape, const ErrorPattern& p) {
    int d = dims.rank();
    if (d < 2) return false;
    int r = shape.arm;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            bool same = true;
            for (int t = 0; t < d && same; ++t) {
                if (t == j || t == k) continue;
                for (const auto& c : p.cells)
                    if (c[t] != p.cells[0][t]) {
                        same = false;
                        break;
                    }
            }
            if (!same) continue;
            auto fits = [&](int axis) {
                int cmin = p.cells[0][axis], cmax = p.cells[0][axis];
                for (const auto& c : p.cells) {
                    cmin = std::min(cmin, c[axis]);
                    cmax = std::max(cmax, c[axis]);
                }
                if (cmax - cmin > r - 1) return false;
                int qlo = std::max(0, cmax - (r - 1));
                int qhi = std::min(cmin, dims.edges[axis] - r);
                return qlo <= qhi;
            };
            if (fits(j) && fits(k)) return true;
        }
    return false;
}

}  // namespace

bool confinable(const Dims& dims, const ClusterShape& shape, const ErrorPattern& pattern) {
    if (pattern.cells.empty()) return false;
    for (const auto& c : pattern.cells)
        if (!dims.in_bounds(c)) return false;
    if (shape.weight > 0 && pattern.weight() > shape.weight) return false;
    switch (shape.kind) {
        case ShapeKind::TwoBurst: return line_confinable(dims, 2, pattern);
        case ShapeKind::ThreeBurstLine: return line_confinable(dims, 3, pattern);
        case ShapeKind::SemiCross:
        case ShapeKind::WeightSemiCross:
        case ShapeKind::Cross:
        case ShapeKind::WeightCross: return star_confinable(dims, shape, pattern);
        case ShapeKind::WeightSquare: return square_confinable(dims, shape, pattern);
    }
    return false;
}

}  // namespace mdecc
