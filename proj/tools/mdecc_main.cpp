#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdecc/constructions.hpp"
#include "mdecc/io.hpp"
#include "mdecc/pipeline.hpp"
#include "mdecc/verify.hpp"

using namespace mdecc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUncorrectable = 2;
constexpr int kExitVerifyFailed = 3;

struct ConfigOpts {
    std::string construction;
    std::string dims_spec;
    int m = 0;
    bool auto_m = false;
    int arm = 1;
    int coloring_d = 0;
    int coloring_n = 0;
    bool modular = false;
    bool strict = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--construction", construction,
                        "A|B|C|D|E|coloring-semicross|coloring-cross")
            ->required();
        cmd->add_option("--dims", dims_spec, "edge lengths, e.g. 4,4,4");
        cmd->add_option("--m", m, "field degree (default: smallest feasible)");
        cmd->add_flag("--auto-m", auto_m, "pick the smallest feasible field degree");
        cmd->add_option("--R", arm, "arm length for construction D");
        cmd->add_option("--D", coloring_d, "dimension for coloring codes");
        cmd->add_option("--n", coloring_n, "cube edge for coloring codes");
        cmd->add_flag("--modular", modular, "semicross nonlinear (modular) variant");
        cmd->add_flag("--strict", strict, "reject parameters outside the guaranteed range");
    }

    CodeConfig to_config() const {
        CodeConfig c;
        c.construction = construction;
        if (construction.rfind("coloring-", 0) == 0) {
            c.coloring_d = coloring_d;
            c.coloring_n = coloring_n;
            c.modular = modular;
            c.strict = strict;
        } else {
            if (dims_spec.empty()) throw std::invalid_argument("--dims is required");
            c.dims = Dims::parse(dims_spec);
            c.m = m;
            c.arm = arm;
            c.strict = strict;
        }
        return c;
    }
};

int default_jobs() {
    if (const char* env = std::getenv("MDECC_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

std::pair<std::unique_ptr<BlockCode>, CodeConfig> load_or_build(const std::string& code_path,
                                                                const ConfigOpts& opts) {
    if (!code_path.empty()) return read_descriptor_file(code_path);
    CodeConfig config = opts.to_config();
    return {build_code(config), config};
}

void warn_odd_semicross(const CodeConfig& config) {
    if (config.construction == "coloring-semicross" && config.coloring_d % 2 != 0)
        std::cerr << "warning: the semicross coloring guarantee covers even D; odd D is "
                     "experimental\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multidimensional cluster-error-correcting codes"};
    app.require_subcommand(1);
    int rc = kExitOk;

    // build ---------------------------------------------------------------
    auto* build = app.add_subcommand("build", "build a code and write its descriptor");
    auto build_opts = std::make_shared<ConfigOpts>();
    auto build_out = std::make_shared<std::string>();
    auto build_export = std::make_shared<std::string>();
    build_opts->attach(build);
    build->add_option("--out", *build_out, "descriptor file (default: stdout)");
    build->add_option("--export-h", *build_export, "also write the parity-check matrix");
    build->callback([&rc, build_opts, build_out, build_export] {
        CodeConfig config = build_opts->to_config();
        warn_odd_semicross(config);
        auto code = build_code(config);
        nlohmann::json desc = make_descriptor(*code, config);
        if (build_out->empty()) {
            std::cout << desc.dump(2) << "\n";
        } else {
            std::ofstream os(*build_out);
            if (!os) throw std::runtime_error("cannot write " + *build_out);
            os << desc.dump(2) << "\n";
        }
        if (!build_export->empty()) {
            std::ofstream os(*build_export);
            if (!os) throw std::runtime_error("cannot write " + *build_export);
            export_parity_columns(os, *code);
        }
        rc = kExitOk;
    });

    // export-h -------------------------------------------------------------
    auto* exporth = app.add_subcommand("export-h", "write the parity-check matrix");
    auto exp_opts = std::make_shared<ConfigOpts>();
    auto exp_code = std::make_shared<std::string>();
    auto exp_out = std::make_shared<std::string>();
    exporth->add_option("--code", *exp_code, "code descriptor file");
    exp_opts->attach(exporth);
    exporth->get_option("--construction")->required(false);
    exporth->add_option("--out", *exp_out, "output file (default: stdout)");
    exporth->callback([&rc, exp_opts, exp_code, exp_out] {
        auto [code, config] = load_or_build(*exp_code, *exp_opts);
        (void)config;
        if (exp_out->empty()) {
            export_parity_columns(std::cout, *code);
        } else {
            std::ofstream os(*exp_out);
            if (!os) throw std::runtime_error("cannot write " + *exp_out);
            export_parity_columns(os, *code);
        }
        rc = kExitOk;
    });

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify",
                                      "exhaustive syndrome-injectivity and decode round-trip");
    auto ver_opts = std::make_shared<ConfigOpts>();
    auto ver_code = std::make_shared<std::string>();
    auto ver_out = std::make_shared<std::string>();
    auto ver_jobs = std::make_shared<int>(default_jobs());
    auto ver_exhaustive = std::make_shared<bool>(false);
    verify->add_option("--code", *ver_code, "code descriptor file");
    ver_opts->attach(verify);
    verify->get_option("--construction")->required(false);
    verify->add_flag("--exhaustive", *ver_exhaustive, "run the full pattern class (default)");
    verify->add_option("--jobs", *ver_jobs, "worker threads (default: MDECC_JOBS or 1)");
    verify->add_option("--out", *ver_out, "also write the report to a file");
    verify->callback([&rc, ver_opts, ver_code, ver_out, ver_jobs] {
        auto [code, config] = load_or_build(*ver_code, *ver_opts);
        (void)config;
        VerifyReport rep = verify_code(*code, *ver_jobs);
        std::cout << rep.to_json().dump(2) << "\n";
        if (!ver_out->empty()) {
            std::ofstream os(*ver_out);
            if (!os) throw std::runtime_error("cannot write " + *ver_out);
            os << rep.to_json().dump(2) << "\n";
        }
        rc = rep.ok() ? kExitOk : kExitVerifyFailed;
    });

    // redundancy-table -------------------------------------------------------
    auto* table = app.add_subcommand("redundancy-table", "TSV of redundancy accounting");
    auto tbl_construction = std::make_shared<std::string>();
    auto tbl_dims = std::make_shared<std::vector<std::string>>();
    auto tbl_arm = std::make_shared<int>(1);
    auto tbl_dlist = std::make_shared<std::string>();
    auto tbl_nlist = std::make_shared<std::string>();
    auto tbl_modular = std::make_shared<bool>(false);
    table->add_option("--construction", *tbl_construction, "construction tag")->required();
    table->add_option("--dims", *tbl_dims, "edge lengths; repeatable")->take_all();
    table->add_option("--R", *tbl_arm, "arm length for construction D");
    table->add_option("--D-list", *tbl_dlist, "comma list of D for coloring codes");
    table->add_option("--n-list", *tbl_nlist, "comma list of cube edges for coloring codes");
    table->add_flag("--modular", *tbl_modular, "semicross nonlinear variant");
    table->callback([&rc, tbl_construction, tbl_dims, tbl_arm, tbl_dlist, tbl_nlist, tbl_modular] {
        std::vector<CodeConfig> configs;
        if (tbl_construction->rfind("coloring-", 0) == 0) {
            auto parse_list = [](const std::string& s) {
                std::vector<int> out;
                std::stringstream ss(s);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) out.push_back(std::stoi(tok));
                return out;
            };
            for (int d : parse_list(*tbl_dlist))
                for (int n : parse_list(*tbl_nlist)) {
                    CodeConfig c;
                    c.construction = *tbl_construction;
                    c.coloring_d = d;
                    c.coloring_n = n;
                    c.modular = *tbl_modular;
                    configs.push_back(c);
                }
        } else {
            for (const auto& spec : *tbl_dims) {
                CodeConfig c;
                c.construction = *tbl_construction;
                c.dims = Dims::parse(spec);
                c.arm = *tbl_arm;
                configs.push_back(c);
            }
        }
        if (configs.empty()) throw std::invalid_argument("no parameter rows requested");
        std::cout << "code\tshape\tN\tr\tceil_log_N\texcess\texcess_over_field\tclass_size\t"
                     "event_lower_bound\tchecks\n";
        for (const auto& config : configs) {
            auto code = build_code(config);
            RedundancyReport rep = redundancy_report(*code);
            std::cout << rep.code_name << "\t" << rep.shape << "\t" << rep.volume << "\t"
                      << rep.redundancy << "\t" << rep.ceil_log_volume << "\t" << rep.excess
                      << "\t" << rep.excess_over_field << "\t" << rep.class_size << "\t"
                      << rep.event_lower_bound << "\t";
            for (size_t i = 0; i < rep.checks.size(); ++i) {
                const auto& c = rep.checks[i];
                if (i) std::cout << "; ";
                std::cout << c.label << ": " << c.lhs << " " << c.relation << " " << c.rhs << " ["
                          << (c.pass ? "pass" : "FAIL") << (c.flagged ? ", flagged" : "") << "]";
            }
            std::cout << "\n";
        }
        rc = kExitOk;
    });

    // inject ------------------------------------------------------------------
    auto* inject = app.add_subcommand("inject", "flip an error pattern into an array");
    auto inj_code = std::make_shared<std::string>();
    auto inj_array = std::make_shared<std::string>();
    auto inj_zero = std::make_shared<bool>(false);
    auto inj_pattern = std::make_shared<std::string>();
    auto inj_seed = std::make_shared<uint64_t>(0);
    auto inj_has_seed = std::make_shared<bool>(false);
    auto inj_out = std::make_shared<std::string>();
    inject->add_option("--code", *inj_code, "code descriptor file")->required();
    inject->add_option("--array", *inj_array, "input array file");
    inject->add_flag("--zero", *inj_zero, "start from the all-zero codeword");
    inject->add_option("--pattern", *inj_pattern, "cells to flip, e.g. 0,1;1,1");
    inject->add_option("--seed", *inj_seed, "sample a class pattern with this seed")
        ->trigger_on_parse()
        ->each([inj_has_seed](const std::string&) { *inj_has_seed = true; });
    inject->add_option("--out", *inj_out, "output array file")->required();
    inject->callback([&rc, inj_code, inj_array, inj_zero, inj_pattern, inj_seed, inj_has_seed,
                      inj_out] {
        auto [code, config] = read_descriptor_file(*inj_code);
        (void)config;
        std::vector<uint8_t> cells;
        if (*inj_zero) {
            cells.assign(code->dims().volume(), 0);
        } else {
            if (inj_array->empty())
                throw std::invalid_argument("need --array or --zero");
            auto [dims, data] = read_array_file(*inj_array);
            if (!(dims == code->dims())) throw std::invalid_argument("array dims do not match the code");
            cells = std::move(data);
        }
        ErrorPattern pattern;
        if (!inj_pattern->empty())
            pattern = parse_pattern_spec(*inj_pattern, code->dims().rank());
        else if (*inj_has_seed)
            pattern = sample_pattern(*code, *inj_seed);
        else
            throw std::invalid_argument("need --pattern or --seed");
        for (const auto& c : pattern.cells)
            if (!code->dims().in_bounds(c)) throw std::invalid_argument("pattern cell out of bounds");
        if (!confinable(code->dims(), code->shape(), pattern))
            std::cerr << "note: pattern lies outside the declared correctable class\n";
        for (const auto& c : pattern.cells) cells[code->dims().index_of(c)] ^= 1;
        write_array_file(*inj_out, code->dims(), cells);
        std::cout << pattern_to_json(pattern).dump() << "\n";
        rc = kExitOk;
    });

    // decode ---------------------------------------------------------------------
    auto* decode = app.add_subcommand("decode", "decode a received array");
    auto dec_code = std::make_shared<std::string>();
    auto dec_array = std::make_shared<std::string>();
    auto dec_out = std::make_shared<std::string>();
    decode->add_option("--code", *dec_code, "code descriptor file")->required();
    decode->add_option("--array", *dec_array, "received array file")->required();
    decode->add_option("--out", *dec_out, "write the corrected array here");
    decode->callback([&rc, dec_code, dec_array, dec_out] {
        auto [code, config] = read_descriptor_file(*dec_code);
        (void)config;
        auto [dims, cells] = read_array_file(*dec_array);
        if (!(dims == code->dims())) throw std::invalid_argument("array dims do not match the code");
        DecodeResult res = code->decode(code->syndrome_of_array(cells));
        nlohmann::json out{{"status", to_string(res.status)}};
        if (res.status == DecodeStatus::Corrected) out["pattern"] = pattern_to_json(res.pattern);
        std::cout << out.dump() << "\n";
        if (res.status == DecodeStatus::Corrected)
            for (const auto& c : res.pattern.cells) cells[code->dims().index_of(c)] ^= 1;
        if (!dec_out->empty() &&
            (res.status == DecodeStatus::Corrected || res.status == DecodeStatus::NoError))
            write_array_file(*dec_out, code->dims(), cells);
        rc = (res.status == DecodeStatus::Corrected || res.status == DecodeStatus::NoError)
                 ? kExitOk
                 : kExitUncorrectable;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
