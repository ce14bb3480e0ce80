#include "mdecc/report.hpp"

#include "mdecc/constructions.hpp"
#include "mdecc/pipeline.hpp"
#include "mdecc/util.hpp"

namespace mdecc {

bool RedundancyReport::all_bounds_pass() const {
    for (const auto& c : checks)
        if (!c.pass && !c.flagged) return false;
    return true;
}

nlohmann::json RedundancyReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"label", c.label},
                               {"lhs", c.lhs},
                               {"relation", c.relation},
                               {"rhs", c.rhs},
                               {"pass", c.pass},
                               {"flagged", c.flagged},
                               {"note", c.note}});
    nlohmann::json j{{"code", code_name},
                     {"shape", shape},
                     {"volume", volume},
                     {"redundancy", redundancy},
                     {"ceil_log_volume", ceil_log_volume},
                     {"excess", excess},
                     {"checks", checks_json}};
    if (field_degree >= 0) {
        j["field_degree"] = field_degree;
        j["excess_over_field"] = excess_over_field;
    }
    if (class_size >= 0) {
        j["class_size"] = class_size;
        j["event_lower_bound"] = event_lower_bound;
    }
    return j;
}

namespace {

void add_construction_checks(const BlockCode& code, RedundancyReport& rep) {
    int d = code.dims().rank();
    long long n = code.dims().volume();
    int r = code.redundancy();
    if (auto* a = dynamic_cast<const CodeA*>(&code)) {
        (void)a;
        // D+1 nonempty window patterns per cell plus the no-error event
        long long bound = ceil_log2((long long)(d + 2) * n);
        rep.checks.push_back({"2-burst: r minus trivial lower bound", r - bound, "<=", 2,
                              r - bound <= 2, false, "lower bound ceil(log2((D+2)N))"});
    } else if (auto* b = dynamic_cast<const CodeB*>(&code)) {
        (void)b;
        long long formula = 2LL * ceil_log2(d + 1) + 2;
        rep.checks.push_back({"3-burst: excess over field equals formula", rep.excess_over_field,
                              "==", formula, rep.excess_over_field == formula, false,
                              "2*ceil(log2(D+1))+2"});
        long long twice = 2LL * ceil_log2(3LL * d + 2);
        rep.checks.push_back({"3-burst: excess at most twice the trivial excess",
                              rep.excess_over_field, "<=", twice, rep.excess_over_field <= twice,
                              false, "2*ceil(log2(3D+2))"});
    } else if (auto* c = dynamic_cast<const CodeC*>(&code)) {
        long long per_anchor = (long long)(d + 1) + (long long)d * (d + 1) / 2 + 1;
        long long bound = ceil_log2(per_anchor * n);
        bool widened = c->realized_dim_bits() != c->nominal_dim_bits();
        rep.checks.push_back({"weight2-semicross(1): r minus trivial lower bound", r - bound, "<=",
                              2, r - bound <= 2, widened,
                              widened ? "component degree raised to " +
                                            std::to_string(c->realized_dim_bits()) + " (nominal " +
                                            std::to_string(c->nominal_dim_bits()) + ")"
                                      : ""});
    } else if (auto* dd = dynamic_cast<const CodeD*>(&code)) {
        long long actual = 4LL * dd->t() + 1;
        long long formula = 4LL * ceil_log2((long long)d * dd->arm()) + 5;
        rep.checks.push_back({"weight2-semicross(R): excess over field", rep.excess_over_field,
                              "==", actual, rep.excess_over_field == actual, false, "4t+1"});
        rep.checks.push_back(
            {"weight2-semicross(R): published excess formula", actual, "==", formula,
             actual == formula, actual != formula,
             "4*ceil(log2(D*R))+5 disagrees with the construction's 4t+1 accounting"});
    } else if (auto* cc = dynamic_cast<const ColoringCode*>(&code)) {
        int dim = d;
        if (cc->scheme().cluster().kind == ShapeKind::SemiCross) {
            long long bound = ceil_log2(n) + 2LL * dim * dim + (long long)dim * ceil_log2(dim + 1) + dim;
            rep.checks.push_back({"semicross coloring: fire-component redundancy bound", r, "<=",
                                  bound, r <= bound, false,
                                  "ceil(log2 n^D) + 2D^2 + D*ceil(log2(D+1)) + D"});
        } else {
            long long bound = ceil_log2(n) + 2LL * dim * dim + 2LL * dim * ceil_log2(dim);
            rep.checks.push_back({"cross coloring: fire-component redundancy bound", r, "<=", bound,
                                  r <= bound, false, "ceil(log2 n^D) + 2D^2 + 2D*ceil(log2 D)"});
        }
    }
}

}  // namespace

RedundancyReport redundancy_report(const BlockCode& code, bool with_class) {
    RedundancyReport rep;
    rep.code_name = code.name();
    rep.shape = code.shape().label();
    rep.volume = code.dims().volume();
    rep.redundancy = code.redundancy();
    rep.ceil_log_volume = ceil_log2(rep.volume);
    rep.excess = rep.redundancy - rep.ceil_log_volume;
    if (auto* c = dynamic_cast<const ConstructionCode*>(&code)) {
        rep.field_degree = c->field().degree();
        rep.excess_over_field = rep.redundancy - rep.field_degree;
    }
    if (with_class && rep.volume <= kClassEnumerationLimit) {
        rep.class_size = (long long)enumerate_patterns(code.dims(), code.shape()).size() + 1;
        rep.event_lower_bound = ceil_log2(rep.class_size);
    }
    add_construction_checks(code, rep);
    return rep;
}

}  // namespace mdecc
