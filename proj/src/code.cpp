#include "mdecc/code.hpp"

#include <stdexcept>

namespace mdecc {

std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::NoError: return "no-error";
        case DecodeStatus::Corrected: return "corrected";
        case DecodeStatus::Uncorrectable: return "uncorrectable";
        case DecodeStatus::Ambiguous: return "ambiguous";
    }
    return "?";
}

BitVec BlockCode::syndrome_of(const ErrorPattern& e) const {
    BitVec s(redundancy());
    for (const auto& c : e.cells) s ^= column_of(c);
    return s;
}

BitVec BlockCode::syndrome_of_array(const std::vector<uint8_t>& cells) const {
    if ((long long)cells.size() != dims().volume())
        throw std::invalid_argument("array size does not match dims");
    BitVec s(redundancy());
    for (long long i = 0; i < (long long)cells.size(); ++i)
        if (cells[i]) s ^= column_at(i);
    return s;
}

Encoder::Encoder(const BlockCode& code) : code_(&code) {
    int r = code.redundancy();
    long long n = code.dims().volume();
    // Gaussian elimination over columns: basis_[k] has pivot bit pivot_bit_[k].
    std::vector<BitVec> basis;
    std::vector<int> pivot_bit;
    std::vector<BitVec> raw;  // original columns of the chosen parity cells
    long long cell = 0;
    for (; cell < n && (int)parity_cells_.size() < r; ++cell) {
        BitVec col = code.column_at(cell);
        BitVec reduced = col;
        for (size_t k = 0; k < basis.size(); ++k)
            if (reduced.get(pivot_bit[k])) reduced ^= basis[k];
        if (reduced.none()) {
            info_cells_.push_back(cell);
            continue;
        }
        int pb = 0;
        while (!reduced.get(pb)) ++pb;
        basis.push_back(reduced);
        pivot_bit.push_back(pb);
        raw.push_back(col);
        parity_cells_.push_back(cell);
    }
    for (; cell < n; ++cell) info_cells_.push_back(cell);

    // Invert the r x rank parity submatrix M (columns = raw): solve M x = s for
    // every unit s via Gauss-Jordan on [M | I].
    int rk = (int)parity_cells_.size();
    std::vector<BitVec> rows(r, BitVec(rk)), aug(r, BitVec(r));
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < rk; ++k)
            if (raw[k].get(i)) rows[i].set(k);
        aug[i].set(i);
    }
    std::vector<int> pivot_row(rk, -1);
    int prow = 0;
    for (int col = 0; col < rk; ++col) {
        int sel = -1;
        for (int i = prow; i < r; ++i)
            if (rows[i].get(col)) {
                sel = i;
                break;
            }
        if (sel < 0) throw std::logic_error("encoder: parity submatrix lost rank");
        std::swap(rows[sel], rows[prow]);
        std::swap(aug[sel], aug[prow]);
        for (int i = 0; i < r; ++i)
            if (i != prow && rows[i].get(col)) {
                rows[i] ^= rows[prow];
                aug[i] ^= aug[prow];
            }
        pivot_row[col] = prow;
        ++prow;
    }
    solve_rows_.resize(rk);
    for (int k = 0; k < rk; ++k) solve_rows_[k] = aug[pivot_row[k]];
}

std::vector<uint8_t> Encoder::encode(const std::vector<uint8_t>& info) const {
    if ((long long)info.size() != info_bits())
        throw std::invalid_argument("info length must be N - rank");
    long long n = code_->dims().volume();
    std::vector<uint8_t> cells(n, 0);
    for (size_t i = 0; i < info_cells_.size(); ++i) cells[info_cells_[i]] = info[i] & 1;
    BitVec s = code_->syndrome_of_array(cells);
    for (size_t k = 0; k < parity_cells_.size(); ++k) {
        // x_k = <solve_rows_[k], s>
        int par = 0;
        for (int b = 0; b < s.size(); ++b)
            if (solve_rows_[k].get(b) && s.get(b)) par ^= 1;
        cells[parity_cells_[k]] = (uint8_t)par;
    }
    return cells;
}

}  // namespace mdecc
