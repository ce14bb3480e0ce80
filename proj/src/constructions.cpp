#include "mdecc/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdecc/util.hpp"

namespace mdecc {

namespace {

// Largest class we enumerate eagerly for the table-backed decoders.
constexpr long long kTableVolumeLimit = 1 << 20;

}  // namespace

int auto_field_degree(const Dims& dims) {
    long long n = dims.volume();
    for (int m = gf::kMinDegree; m <= gf::kMaxDegree; ++m)
        if (((1LL << m) - 1) >= n) return m;
    throw std::invalid_argument("array volume exceeds every supported field");
}

ConstructionCode::ConstructionCode(Dims dims, int m, ClusterShape shape)
    : dims_(std::move(dims)), field_(m), shape_(shape) {
    // 2^m - 1 >= N keeps the folded powers distinct; 2^m = N is also accepted,
    // the fold then wraps once and decoding weighs both anchor candidates
    if ((1LL << m) < dims_.volume())
        throw std::invalid_argument("field too small: need 2^m >= array volume");
}

std::vector<long long> ConstructionCode::anchor_candidates(uint32_t sigma, uint32_t gamma) const {
    std::vector<long long> out;
    if (sigma == 0 || gamma == 0) return out;
    long long order = field_.order();
    long long x = ((long long)field_.log(sigma) - (long long)field_.log(gamma) + order) % order;
    for (; x < dims_.volume(); x += order) out.push_back(x);
    return out;
}

void ConstructionCode::consider(const BitVec& s, std::vector<Position> cells,
                                std::vector<ErrorPattern>& found) const {
    for (const auto& c : cells)
        if (!dims_.in_bounds(c)) return;
    ErrorPattern p(std::move(cells));
    if (!confinable(dims_, shape_, p)) return;
    if (syndrome_of(p) != s) return;
    if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(std::move(p));
}

DecodeResult ConstructionCode::resolve(std::vector<ErrorPattern> found) {
    if (found.size() == 1) return DecodeResult::corrected(std::move(found[0]));
    return DecodeResult::uncorrectable();
}

// --- Construction A ----------------------------------------------------------

CodeA::CodeA(Dims dims, int m)
    : ConstructionCode(std::move(dims), m, ClusterShape::two_burst()),
      d_(ceil_log2(dims_.rank())) {
    r_ = field_.degree() + d_ + 1;
}

std::string CodeA::name() const {
    return "A[" + dims_.str() + " m=" + std::to_string(field_.degree()) + "]";
}

std::vector<SegmentInfo> CodeA::segments() const {
    return {{"indicator", 0, 1}, {"dimension", 1, d_}, {"field", 1 + d_, field_.degree()}};
}

nlohmann::json CodeA::config_json() const {
    return {{"construction", "A"}, {"dims", dims_.edges}, {"m", field_.degree()}};
}

BitVec CodeA::column_at(long long cell) const {
    Position p = dims_.position_of(cell);
    BitVec col(r_);
    col.set(0);
    uint32_t tag = 0;
    for (int j = 0; j < dims_.rank(); ++j)
        if (p[j] & 1) tag ^= (uint32_t)j;
    col.set_bits(1, d_, tag);
    col.set_bits(1 + d_, field_.degree(), field_.pow_alpha(cell));
    return col;
}

DecodeResult CodeA::decode(const BitVec& s) const {
    if (s.none()) return DecodeResult::no_error();
    uint32_t sigma = field_bits(s);
    std::vector<ErrorPattern> found;
    if (s.get(0)) {
        for (long long x : anchor_candidates(sigma, 1))
            consider(s, {dims_.position_of(x)}, found);
    } else {
        int j = (int)s.get_bits(1, d_);
        if (j >= dims_.rank()) return DecodeResult::uncorrectable();
        uint32_t gamma = field_.add(1, field_.pow_alpha(dims_.step(j)));
        for (long long x : anchor_candidates(sigma, gamma)) {
            Position p = dims_.position_of(x), p2 = p;
            p2[j] += 1;
            consider(s, {p, p2}, found);
        }
    }
    return resolve(std::move(found));
}

// --- Construction B ----------------------------------------------------------

CodeB::CodeB(Dims dims, int m)
    : ConstructionCode(std::move(dims), m, ClusterShape::three_burst_line()),
      q_(ceil_log2(dims_.rank() + 1)) {
    r_ = field_.degree() + 2 * q_ + 2;
}

std::string CodeB::name() const {
    return "B[" + dims_.str() + " m=" + std::to_string(field_.degree()) + "]";
}

std::vector<SegmentInfo> CodeB::segments() const {
    return {{"indicator", 0, 1},
            {"parity", 1, 1},
            {"gf4", 2, 2 * q_},
            {"field", 2 + 2 * q_, field_.degree()}};
}

nlohmann::json CodeB::config_json() const {
    return {{"construction", "B"}, {"dims", dims_.edges}, {"m", field_.degree()}};
}

uint8_t CodeB::gf4_symbol(const Position& p, int row) const {
    long long v = 0;  // row `row` of B i^T, taken over the integers
    for (int j = 0; j < dims_.rank(); ++j)
        if ((b_column(j) >> (q_ - 1 - row)) & 1) v += p[j];
    return gf::gf4_pow_beta(v);
}

std::optional<int> CodeB::axis_for_value(int v) const {
    if (v < 1 || v > dims_.rank()) return std::nullopt;
    return dims_.rank() - v;
}

BitVec CodeB::column_at(long long cell) const {
    Position p = dims_.position_of(cell);
    BitVec col(r_);
    col.set(0);
    long long csum = 0;
    for (int v : p) csum += v;
    col.set(1, csum & 1);
    for (int k = 0; k < q_; ++k) col.set_bits(2 + 2 * k, 2, gf4_symbol(p, k));
    col.set_bits(2 + 2 * q_, field_.degree(), field_.pow_alpha(cell));
    return col;
}

DecodeResult CodeB::decode(const BitVec& s) const {
    if (s.none()) return DecodeResult::no_error();
    uint32_t sigma = field_bits(s);
    int zero_value = 0, nonzero_value = 0;
    for (int k = 0; k < q_; ++k) {
        if (s.get_bits(2 + 2 * k, 2) == 0)
            zero_value |= 1 << (q_ - 1 - k);
        else
            nonzero_value |= 1 << (q_ - 1 - k);
    }
    std::vector<ErrorPattern> found;
    if (s.get(0)) {
        if (zero_value == 0) {
            // weight 1: every GF(4) symbol of a single column is a power of beta
            for (long long x : anchor_candidates(sigma, 1))
                consider(s, {dims_.position_of(x)}, found);
            return resolve(std::move(found));
        }
        // weight 3 along the axis whose B column matches the vanished symbols
        auto j = axis_for_value(zero_value);
        if (!j) return DecodeResult::uncorrectable();
        long long step = dims_.step(*j);
        uint32_t gamma =
            field_.add(field_.add(1, field_.pow_alpha(step)), field_.pow_alpha(2 * step));
        auto build3 = [&](long long anchor) {
            Position p = dims_.position_of(anchor), p1 = p, p2 = p;
            p1[*j] += 1;
            p2[*j] += 2;
            consider(s, {p, p1, p2}, found);
        };
        if (gamma != 0) {
            for (long long x : anchor_candidates(sigma, gamma)) build3(x);
        } else {
            // alpha^step has order 3 and the field segment vanishes; scan anchors
            for (long long x = 0; x < dims_.volume(); ++x) build3(x);
        }
        return resolve(std::move(found));
    }
    // weight 2; the surviving symbols match the B column of the burst axis
    auto j = axis_for_value(nonzero_value);
    if (!j) return DecodeResult::uncorrectable();
    int delta = s.get(1) ? 1 : 2;
    long long step = dims_.step(*j);
    uint32_t gamma = field_.add(1, field_.pow_alpha((long long)delta * step));
    for (long long x : anchor_candidates(sigma, gamma)) {
        Position p = dims_.position_of(x), p2 = p;
        p2[*j] += delta;
        consider(s, {p, p2}, found);
    }
    return resolve(std::move(found));
}

// --- Construction C ----------------------------------------------------------

CodeC::CodeC(Dims dims, int m)
    : ConstructionCode(std::move(dims), m, ClusterShape::weight_semi_cross(1)),
      d_nominal_(ceil_log2(dims_.rank())),
      bch_(BchColumns::build(2, dims_.rank())) {
    r_ = field_.degree() + bch_.width() + 1;
}

std::string CodeC::name() const {
    return "C[" + dims_.str() + " m=" + std::to_string(field_.degree()) + "]";
}

std::vector<SegmentInfo> CodeC::segments() const {
    return {{"indicator", 0, 1},
            {"bch", 1, bch_.width()},
            {"field", 1 + bch_.width(), field_.degree()}};
}

nlohmann::json CodeC::config_json() const {
    return {{"construction", "C"},
            {"dims", dims_.edges},
            {"m", field_.degree()},
            {"d_nominal", d_nominal_},
            {"d_realized", bch_.degree()}};
}

BitVec CodeC::column_at(long long cell) const {
    Position p = dims_.position_of(cell);
    BitVec col(r_);
    col.set(0);
    uint64_t mid = 0;  // H i^T mod 2: XOR of the columns of odd coordinates
    for (int j = 0; j < dims_.rank(); ++j)
        if (p[j] & 1) mid ^= bch_.column(j);
    col.set_bits(1, bch_.width(), mid);
    col.set_bits(1 + bch_.width(), field_.degree(), field_.pow_alpha(cell));
    return col;
}

DecodeResult CodeC::decode(const BitVec& s) const {
    if (s.none()) return DecodeResult::no_error();
    uint32_t sigma = field_bits(s);
    std::vector<ErrorPattern> found;
    if (s.get(0)) {
        for (long long x : anchor_candidates(sigma, 1))
            consider(s, {dims_.position_of(x)}, found);
        return resolve(std::move(found));
    }
    auto subset = bch_.identify(s.get_bits(1, bch_.width()), 2);
    if (!subset || subset->empty()) return DecodeResult::uncorrectable();
    if (subset->size() == 1) {
        // center plus the arm in dimension j
        int j = (*subset)[0];
        uint32_t gamma = field_.add(1, field_.pow_alpha(dims_.step(j)));
        for (long long x : anchor_candidates(sigma, gamma)) {
            Position p = dims_.position_of(x), p2 = p;
            p2[j] += 1;
            consider(s, {p, p2}, found);
        }
    } else {
        // two arms; the anchor cell itself is error free
        int j = (*subset)[0], k = (*subset)[1];
        uint32_t gamma =
            field_.add(field_.pow_alpha(dims_.step(j)), field_.pow_alpha(dims_.step(k)));
        for (long long x : anchor_candidates(sigma, gamma)) {
            Position q = dims_.position_of(x), pj = q, pk = q;
            pj[j] += 1;
            pk[k] += 1;
            consider(s, {pj, pk}, found);
        }
    }
    return resolve(std::move(found));
}

// --- Construction D ----------------------------------------------------------

CodeD::CodeD(Dims dims, int m, int arm)
    : ConstructionCode(std::move(dims), m, ClusterShape::weight_semi_cross(arm)),
      arm_(arm),
      bch_(BchColumns::build(4, 2 * arm * dims_.rank())) {
    if (arm_ < 1) throw std::invalid_argument("arm length must be >= 1");
    r_ = field_.degree() + bch_.width() + 1;
    build_table();
}

void CodeD::build_table() {
    if (dims_.volume() > kTableVolumeLimit) return;
    for (auto& e : enumerate_patterns(dims_, shape_)) {
        BitVec s = syndrome_of(e);
        auto [it, fresh] = table_.emplace(std::move(s), std::move(e));
        (void)it;
        if (!fresh) throw std::logic_error("syndrome collision inside the declared class");
    }
}

std::string CodeD::name() const {
    return "D[" + dims_.str() + " m=" + std::to_string(field_.degree()) +
           " R=" + std::to_string(arm_) + "]";
}

std::vector<SegmentInfo> CodeD::segments() const {
    return {{"indicator", 0, 1},
            {"bch", 1, bch_.width()},
            {"field", 1 + bch_.width(), field_.degree()}};
}

nlohmann::json CodeD::config_json() const {
    return {{"construction", "D"},
            {"dims", dims_.edges},
            {"m", field_.degree()},
            {"R", arm_},
            {"t", bch_.degree()}};
}

BitVec CodeD::column_at(long long cell) const {
    Position p = dims_.position_of(cell);
    BitVec col(r_);
    col.set(0);
    uint64_t mid = 0;
    for (int j = 0; j < dims_.rank(); ++j) mid ^= bch_.column(j * 2 * arm_ + p[j] % (2 * arm_));
    col.set_bits(1, bch_.width(), mid);
    col.set_bits(1 + bch_.width(), field_.degree(), field_.pow_alpha(cell));
    return col;
}

std::optional<DecodeResult> CodeD::decode_algebraic(const BitVec& s) const {
    if (s.none()) return DecodeResult::no_error();
    uint32_t sigma = field_bits(s);
    std::vector<ErrorPattern> found;
    if (s.get(0)) {
        // odd weight inside the class means a single error
        for (long long x : anchor_candidates(sigma, 1))
            consider(s, {dims_.position_of(x)}, found);
        if (found.size() == 1) return DecodeResult::corrected(found[0]);
        return std::nullopt;
    }
    auto subset = bch_.identify(s.get_bits(1, bch_.width()), 4);
    if (!subset) return std::nullopt;
    int span = 2 * arm_;
    auto deltas_from = [&](int a, int b) {
        std::vector<int> out;
        int d1 = ((b - a) % span + span) % span;
        if (d1 >= 1 && d1 <= arm_) out.push_back(d1);
        int d2 = span - d1;
        if (d2 >= 1 && d2 <= arm_ && d2 != d1) out.push_back(d2);
        return out;
    };
    if (subset->size() == 2) {
        int j0 = (*subset)[0] / span, j1 = (*subset)[1] / span;
        if (j0 != j1) return std::nullopt;
        int a = (*subset)[0] % span, b = (*subset)[1] % span;
        for (int delta : deltas_from(a, b)) {
            uint32_t gamma = field_.add(1, field_.pow_alpha((long long)delta * dims_.step(j0)));
            for (long long x : anchor_candidates(sigma, gamma)) {
                Position p = dims_.position_of(x), p2 = p;
                p2[j0] += delta;
                consider(s, {p, p2}, found);
            }
        }
    } else if (subset->size() == 4) {
        int k = (*subset)[0] / span, j = (*subset)[3] / span;
        if ((*subset)[1] / span != k || (*subset)[2] / span != j || k == j) return std::nullopt;
        int a0 = (*subset)[0] % span, a1 = (*subset)[1] % span;
        int c0 = (*subset)[2] % span, c1 = (*subset)[3] % span;
        long long order = field_.order();
        for (int u : deltas_from(a0, a1))
            for (int v : deltas_from(c0, c1)) {
                // anchor q; cells q + u e_k and q + v e_j
                long long diff = (long long)u * dims_.step(k) - (long long)v * dims_.step(j);
                if (diff == 0) continue;
                long long mag = diff > 0 ? diff : -diff;
                uint32_t gamma = field_.add(1, field_.pow_alpha(mag % order));
                for (long long x : anchor_candidates(sigma, gamma)) {
                    // x is the cell with the smaller linear index
                    Position lo = dims_.position_of(x);
                    Position q = lo;
                    if (diff > 0)
                        q[j] -= v;  // lo = q + v e_j
                    else
                        q[k] -= u;  // lo = q + u e_k
                    if (q[j] < 0 || q[k] < 0) continue;
                    Position pk = q, pj = q;
                    pk[k] += u;
                    pj[j] += v;
                    consider(s, {pk, pj}, found);
                }
            }
    } else {
        return std::nullopt;
    }
    if (found.size() == 1) return DecodeResult::corrected(found[0]);
    return std::nullopt;
}

DecodeResult CodeD::decode(const BitVec& s) const {
    auto alg = decode_algebraic(s);
    if (alg) return *alg;
    auto it = table_.find(s);
    if (it != table_.end()) return DecodeResult::corrected(it->second);
    return DecodeResult::uncorrectable();
}

// --- Construction E ----------------------------------------------------------

CodeE::CodeE(Dims dims, int m)
    : ConstructionCode(std::move(dims), m, ClusterShape::weight_cross(1)),
      bch_(BchColumns::build(4, 4 * dims_.rank())) {
    r_ = field_.degree() + bch_.width() + 2;
    build_table();
}

void CodeE::build_table() {
    if (dims_.volume() > kTableVolumeLimit) return;
    for (auto& e : enumerate_patterns(dims_, shape_)) {
        BitVec s = syndrome_of(e);
        auto [it, fresh] = table_.emplace(std::move(s), std::move(e));
        (void)it;
        if (!fresh) throw std::logic_error("syndrome collision inside the declared class");
    }
}

std::string CodeE::name() const {
    return "E[" + dims_.str() + " m=" + std::to_string(field_.degree()) + "]";
}

std::vector<SegmentInfo> CodeE::segments() const {
    return {{"indicator", 0, 1},
            {"bch", 1, bch_.width()},
            {"halfsum", 1 + bch_.width(), 1},
            {"field", 2 + bch_.width(), field_.degree()}};
}

nlohmann::json CodeE::config_json() const {
    return {{"construction", "E"},
            {"dims", dims_.edges},
            {"m", field_.degree()},
            {"t", bch_.degree()}};
}

BitVec CodeE::column_at(long long cell) const {
    Position p = dims_.position_of(cell);
    BitVec col(r_);
    col.set(0);
    uint64_t mid = 0;
    long long csum = 0;
    for (int j = 0; j < dims_.rank(); ++j) {
        mid ^= bch_.column(j * 4 + p[j] % 4);
        csum += p[j];
    }
    col.set_bits(1, bch_.width(), mid);
    col.set(1 + bch_.width(), (csum / 2) & 1);
    col.set_bits(2 + bch_.width(), field_.degree(), field_.pow_alpha(cell));
    return col;
}

std::optional<DecodeResult> CodeE::decode_algebraic(const BitVec& s) const {
    if (s.none()) return DecodeResult::no_error();
    uint32_t sigma = field_bits(s);
    std::vector<ErrorPattern> found;
    if (s.get(0)) {
        for (long long x : anchor_candidates(sigma, 1))
            consider(s, {dims_.position_of(x)}, found);
        if (found.size() == 1) return DecodeResult::corrected(found[0]);
        return std::nullopt;
    }
    auto subset = bch_.identify(s.get_bits(1, bch_.width()), 4);
    if (!subset) return std::nullopt;
    bool halfsum = s.get(1 + bch_.width());
    long long order = field_.order();
    if (subset->size() == 2) {
        int j0 = (*subset)[0] / 4, j1 = (*subset)[1] / 4;
        if (j0 != j1) return std::nullopt;
        int a = (*subset)[0] % 4, b = (*subset)[1] % 4;
        int diff = (b - a + 4) % 4;
        int delta = (diff == 2) ? 2 : 1;  // residues 1 or 3 apart: adjacent pair
        uint32_t gamma = field_.add(1, field_.pow_alpha((long long)delta * dims_.step(j0)));
        for (long long x : anchor_candidates(sigma, gamma)) {
            Position p = dims_.position_of(x), p2 = p;
            p2[j0] += delta;
            consider(s, {p, p2}, found);
        }
    } else if (subset->size() == 4) {
        int k = (*subset)[0] / 4, j = (*subset)[3] / 4;
        if ((*subset)[1] / 4 != k || (*subset)[2] / 4 != j || k == j) return std::nullopt;
        int kres[2] = {(*subset)[0] % 4, (*subset)[1] % 4};
        int jres[2] = {(*subset)[2] % 4, (*subset)[3] % 4};
        // base residue of the anchor along an axis for a given arm sign
        auto base_of = [](const int res[2], int sign) -> std::optional<int> {
            for (int t = 0; t < 2; ++t)
                if ((res[t] + sign + 4) % 4 == res[1 - t]) return res[t];
            return std::nullopt;
        };
        for (int sk : {+1, -1})
            for (int sj : {+1, -1}) {
                // the extra bit is 1 exactly for opposite-sign arm pairs
                if (halfsum != (sk != sj)) continue;
                auto bk = base_of(kres, sk), bj = base_of(jres, sj);
                if (!bk || !bj) continue;
                long long ek = (((long long)sk * dims_.step(k)) % order + order) % order;
                long long ej = (((long long)sj * dims_.step(j)) % order + order) % order;
                uint32_t gamma = field_.add(field_.pow_alpha(ek), field_.pow_alpha(ej));
                for (long long x : anchor_candidates(sigma, gamma)) {
                    Position q = dims_.position_of(x);
                    if (q[k] % 4 != *bk || q[j] % 4 != *bj) continue;
                    Position pk = q, pj = q;
                    pk[k] += sk;
                    pj[j] += sj;
                    consider(s, {pk, pj}, found);
                }
            }
    } else {
        return std::nullopt;
    }
    if (found.size() == 1) return DecodeResult::corrected(found[0]);
    return std::nullopt;
}

DecodeResult CodeE::decode(const BitVec& s) const {
    auto alg = decode_algebraic(s);
    if (alg) return *alg;
    auto it = table_.find(s);
    if (it != table_.end()) return DecodeResult::corrected(it->second);
    return DecodeResult::uncorrectable();
}

}  // namespace mdecc
