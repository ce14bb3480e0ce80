#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <set>

#include "mdecc/constructions.hpp"
#include "mdecc/pipeline.hpp"
#include "mdecc/util.hpp"
#include "mdecc/verify.hpp"

using namespace mdecc;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::pair<std::string, bool>> subs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void check(const std::string& what, bool ok) { subs.emplace_back(what, ok); }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    void finish(double budget_seconds) {
        double secs = seconds();
        check("runtime " + std::to_string(secs).substr(0, 5) + "s < " +
                  std::to_string((int)budget_seconds) + "s",
              secs < budget_seconds);
        bool all = true;
        for (auto& [what, ok] : subs) all &= ok;
        std::printf("[criterion %d] %s  %s (%.2fs)\n", number, all ? "PASS" : "FAIL",
                    title.c_str(), secs);
        for (auto& [what, ok] : subs) {
            if (!all) std::printf("  - %s: %s\n", ok ? "pass" : "FAIL", what.c_str());
            CHECK_MESSAGE(ok, "criterion " << number << ": " << what);
        }
        std::fflush(stdout);
    }
};

// anchors x nonempty window subsets injected into `codeword`, decoded back
struct ClusterSweep {
    long long decodes = 0;
    long long correct = 0;
    long long ambiguous = 0;
};

ClusterSweep sweep_clusters(const ColoringCode& code, const std::vector<uint8_t>& codeword) {
    const Dims& dims = code.dims();
    int d = dims.rank();
    auto offs = shape_offsets(code.scheme().cluster(), d);
    bool crossed = code.scheme().cluster().kind == ShapeKind::Cross;
    int r = code.scheme().cluster().arm;
    ClusterSweep sweep;
    Position lo(d), hi(d), q;
    for (int k = 0; k < d; ++k) {
        lo[k] = crossed ? r : 0;
        hi[k] = dims.edges[k] - 1 - r;
    }
    q = lo;
    while (true) {
        for (uint32_t mask = 1; mask < (uint32_t(1) << offs.size()); ++mask) {
            std::vector<Position> cells;
            for (size_t i = 0; i < offs.size(); ++i)
                if ((mask >> i) & 1) {
                    Position c = q;
                    for (int k = 0; k < d; ++k) c[k] += offs[i][k];
                    cells.push_back(c);
                }
            ErrorPattern e(std::move(cells));
            std::vector<uint8_t> received = codeword;
            for (const auto& c : e.cells) received[dims.index_of(c)] ^= 1;
            DecodeResult res = code.decode_array(received);
            ++sweep.decodes;
            if (res.status == DecodeStatus::Ambiguous) ++sweep.ambiguous;
            if (res.status == DecodeStatus::Corrected && res.pattern == e) ++sweep.correct;
        }
        int k = d - 1;
        while (k >= 0) {
            if (++q[k] <= hi[k]) break;
            q[k] = lo[k];
            --k;
        }
        if (k < 0) break;
    }
    return sweep;
}

}  // namespace

TEST_CASE("criterion 1: two-burst code, 4x4x4, exhaustive") {
    Criterion c(1, "two-burst correction on 4,4,4 (m=6)");
    CodeA code(Dims({4, 4, 4}), 6);
    VerifyReport rep = verify_code(code);
    c.check("class has 208 patterns (64 singletons + 3*48 pairs)", rep.class_size == 208);
    c.check("syndrome map injective", rep.injective);
    c.check("100% decode round-trip", rep.failures.empty());
    c.check("redundancy r = 9", code.redundancy() == 9);
    long long bound = ceil_log2(5LL * 64);
    c.check("r - ceil(log2((D+2)N)) <= 2", code.redundancy() - bound <= 2);
    c.finish(5);
}

TEST_CASE("criterion 2: three-burst-on-a-line code, 4x4x4, exhaustive") {
    Criterion c(2, "three-burst-on-a-line correction on 4,4,4 (m=7)");
    CodeB code(Dims({4, 4, 4}), 7);
    VerifyReport rep = verify_code(code);
    c.check("syndrome map injective", rep.injective);
    c.check("100% decode round-trip over " + std::to_string(rep.class_size) + " patterns",
            rep.failures.empty());
    RedundancyReport red = redundancy_report(code);
    c.check("excess over the field degree equals 2*ceil(log2(D+1))+2 = 6",
            red.excess_over_field == 6);
    c.check("excess at most twice the trivial excess bound 2*ceil(log2(3D+2)) = 8",
            red.excess_over_field <= 2 * ceil_log2(3 * 3 + 2));
    c.finish(10);
}

TEST_CASE("criterion 3: weight-2 semi-cross(1) code, 3x3x3x3, exhaustive") {
    Criterion c(3, "weight<=2 in a semi-cross with unit arms on 3,3,3,3");
    CodeC code(Dims({3, 3, 3, 3}), 7);
    VerifyReport rep = verify_code(code);
    c.check("syndrome map injective", rep.injective);
    c.check("100% decode round-trip over " + std::to_string(rep.class_size) + " patterns",
            rep.failures.empty());
    c.finish(10);
}

TEST_CASE("criterion 4: weight-2 semi-cross(2) code, 8x8, exhaustive") {
    Criterion c(4, "weight<=2 in a semi-cross with arms 2 on 8,8");
    CodeD code(Dims({8, 8}), 7, 2);
    c.check("t = 4", code.t() == 4);
    VerifyReport rep = verify_code(code);
    c.check("syndrome map injective", rep.injective);
    c.check("100% decode round-trip over " + std::to_string(rep.class_size) + " patterns",
            rep.failures.empty());
    c.check("redundancy is m + 4t + 1 = 24", code.redundancy() == 24);
    bool both_numbers = false;
    for (const auto& chk : rep.redundancy.checks)
        if (chk.flagged && chk.lhs == 17 && chk.rhs == 13) both_numbers = true;
    c.check("report prints 4t+1 = 17 against the published formula 13 with a flag", both_numbers);
    c.finish(10);
}

TEST_CASE("criterion 5: weight-2 cross(1) code, 5x5, exhaustive") {
    Criterion c(5, "weight<=2 in a cross with unit arms on 5,5");
    CodeE code(Dims({5, 5}), 5);
    VerifyReport rep = verify_code(code);
    c.check("syndrome map injective", rep.injective);
    c.check("100% decode round-trip over " + std::to_string(rep.class_size) + " patterns",
            rep.failures.empty());
    c.finish(10);
}

TEST_CASE("criterion 6: coloring properties across the parameter grid") {
    Criterion c(6, "p.1/p.2 across semicross and cross schemes");
    for (int d : {2, 4, 6, 8, 10, 12})
        for (int n : {3, 4}) {
            ColoringScheme sch(ColoringMatrix::semicross(d), ClusterShape::semi_cross(1),
                               Dims::cube(d, n));
            std::string tag = "semicross D=" + std::to_string(d) + " n=" + std::to_string(n);
            bool p1 = check_p1(sch).pass;
            bool p2 = check_p2(sch).pass;
            c.check(tag + " p.1", p1);
            c.check(tag + " p.2", p2);
            c.check(tag + " determinant agrees with the exhaustive scan",
                    check_p2_determinant(sch) == p2);
        }
    for (int d : {2, 3, 4})
        for (int n : {3, 5}) {
            ColoringScheme sch(ColoringMatrix::cross(d, n), ClusterShape::cross(1),
                               Dims::cube(d, n));
            std::string tag = "cross D=" + std::to_string(d) + " n=" + std::to_string(n);
            c.check(tag + " p.1", check_p1(sch).pass);
            c.check(tag + " p.2", check_p2(sch).pass);
        }
    c.finish(60);
}

TEST_CASE("criterion 7: end-to-end semicross coloring decode, D=4, n=3") {
    Criterion c(7, "semicross coloring code on the 3^4 cube");
    ColoringScheme sch(ColoringMatrix::semicross(4), ClusterShape::semi_cross(1), Dims::cube(4, 3));
    ColoringCode code = ColoringCode::assemble(std::move(sch), "semicross");
    Encoder enc(code);
    std::vector<uint8_t> info(enc.info_bits(), 0);
    for (size_t i = 0; i < info.size(); i += 3) info[i] = 1;
    std::vector<uint8_t> cw = enc.encode(info);
    c.check("encoded array has zero syndrome", code.syndrome_of_array(cw).none());
    ClusterSweep sweep = sweep_clusters(code, cw);
    c.check("all 16 anchors x 31 subsets = 496 injections decoded", sweep.decodes == 496);
    c.check("100% recovery", sweep.correct == sweep.decodes);
    c.check("zero ambiguity events", sweep.ambiguous == 0);
    long long bound = ceil_log2(code.dims().volume()) + 2LL * 4 * 4 + 4LL * ceil_log2(5) + 4;
    c.check("assembled redundancy " + std::to_string(code.redundancy()) +
                " within the fire-component bound " + std::to_string(bound),
            code.redundancy() <= bound);
    c.finish(120);
}

TEST_CASE("criterion 8: end-to-end cross coloring decode, D=2, n=5") {
    Criterion c(8, "cross coloring code on the 5^2 array");
    ColoringScheme sch(ColoringMatrix::cross(2, 5), ClusterShape::cross(1), Dims::cube(2, 5));
    ColoringCode code = ColoringCode::assemble(std::move(sch), "cross");
    ClusterSweep sweep = sweep_clusters(code, std::vector<uint8_t>(code.dims().volume(), 0));
    c.check("all 9 anchors x 31 subsets = 279 injections decoded", sweep.decodes == 279);
    c.check("100% recovery", sweep.correct == sweep.decodes);
    c.check("zero ambiguity events", sweep.ambiguous == 0);
    long long bound = ceil_log2(code.dims().volume()) + 2LL * 2 * 2 + 2LL * 2 * ceil_log2(2);
    c.check("assembled redundancy " + std::to_string(code.redundancy()) +
                " within the fire-component bound " + std::to_string(bound),
            code.redundancy() <= bound);
    c.finish(60);
}

TEST_CASE("criterion 9: fire code property suite") {
    Criterion c(9, "fire codes (b,p) in {(2,3),(3,4),(4,5)}");
    for (auto [b, p] : {std::pair{2, 3}, {3, 4}, {4, 5}}) {
        FireCode probe = FireCode::make(b, p, 1);
        FireCode f = FireCode::make(b, p, (int)probe.n_full());
        std::string tag = "(b=" + std::to_string(b) + ", p=" + std::to_string(p) + ")";
        std::set<uint64_t> seen;
        bool distinct = true, decoded = true;
        for (int len = 1; len <= b; ++len)
            for (uint64_t pat = 1; pat < (uint64_t(1) << len); ++pat) {
                if (!(pat & 1) || gf::poly_degree(pat) != len - 1) continue;
                for (int pos = 0; pos + len <= f.n(); ++pos) {
                    uint64_t s = f.burst_syndrome(pos, pat);
                    if (s == 0 || !seen.insert(s).second) distinct = false;
                    auto t = f.trap(s);
                    if (!t || t->position != pos || t->pattern != pat) decoded = false;
                }
            }
        c.check(tag + " all burst syndromes distinct", distinct);
        c.check(tag + " error trapping decodes every burst", decoded);
        c.check(tag + " redundancy within ceil(log2 n) + 2b - 1",
                f.redundancy() <= ceil_log2(f.n_full()) + 2 * b - 1);
    }
    c.finish(30);
}

TEST_CASE("criterion 10: field and BCH oracles") {
    Criterion c(10, "GF(2^m) axioms (m<=8) and BCH subset-sum distinctness");
    bool axioms = true;
    for (int m = 2; m <= 8 && axioms; ++m) {
        gf::Field f(m);
        uint32_t size = 1u << m;
        for (uint32_t a = 0; a < size && axioms; ++a)
            for (uint32_t b = 0; b < size && axioms; ++b)
                for (uint32_t x = 0; x < size; ++x)
                    if (f.mul(a, f.add(b, x)) != f.add(f.mul(a, b), f.mul(a, x))) {
                        axioms = false;
                        break;
                    }
        for (uint32_t a = 1; a < size; ++a)
            if (f.mul(a, f.pow(a, f.order() - 1)) != 1) axioms = false;
    }
    c.check("distributivity and inverses for every m <= 8", axioms);

    auto distinct_sums = [](const BchColumns& cols, int t_cap, long long expect) {
        std::set<uint64_t> sums;
        long long count = 0;
        std::vector<int> idx;
        auto rec = [&](auto&& self, int start, int want, uint64_t acc) -> void {
            if (want == 0) {
                sums.insert(acc);
                ++count;
                return;
            }
            for (int i = start; i <= cols.count() - want; ++i) {
                idx.push_back(i);
                self(self, i + 1, want - 1, acc ^ cols.column(i));
                idx.pop_back();
            }
        };
        for (int w = 1; w <= t_cap; ++w) rec(rec, 0, w, 0);
        return count == expect && (long long)sums.size() == expect && !sums.count(0);
    };
    c.check("2-error set, 7 columns: 28 subset sums distinct",
            distinct_sums(BchColumns::build(2, 7), 2, 28));
    c.check("4-error set, 15 columns: 1940 subset sums distinct",
            distinct_sums(BchColumns::build(4, 15), 4, 1940));
    c.finish(30);
}
