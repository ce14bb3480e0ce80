#include "mdecc/io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mdecc/constructions.hpp"
#include "mdecc/pipeline.hpp"

namespace mdecc {

nlohmann::json CodeConfig::to_json() const {
    nlohmann::json j{{"construction", construction}};
    if (coloring_d > 0) {
        j["D"] = coloring_d;
        j["n"] = coloring_n;
        j["modular"] = modular;
    } else {
        j["dims"] = dims.edges;
        if (m > 0) j["m"] = m;
        if (construction == "D") j["R"] = arm;
    }
    return j;
}

CodeConfig CodeConfig::from_json(const nlohmann::json& j) {
    CodeConfig c;
    c.construction = j.at("construction").get<std::string>();
    if (j.contains("D")) {
        c.coloring_d = j.at("D").get<int>();
        c.coloring_n = j.at("n").get<int>();
        c.modular = j.value("modular", false);
    } else {
        c.dims = Dims(j.at("dims").get<std::vector<int>>());
        c.m = j.value("m", 0);
        c.arm = j.value("R", 1);
    }
    return c;
}

std::unique_ptr<BlockCode> build_code(const CodeConfig& config) {
    const std::string& tag = config.construction;
    if (tag == "coloring-semicross" || tag == "coloring-cross") {
        if (config.coloring_d < 1 || config.coloring_n < 2)
            throw std::invalid_argument("coloring codes need D >= 1 and cube edge n >= 2");
        Dims dims = Dims::cube(config.coloring_d, config.coloring_n);
        if (tag == "coloring-semicross") {
            if (config.strict && config.coloring_d % 2 != 0)
                throw std::invalid_argument(
                    "the semicross coloring guarantee covers even D only (strict mode)");
            ColoringMatrix m = config.modular
                                   ? ColoringMatrix::semicross_modular(config.coloring_d, config.coloring_n)
                                   : ColoringMatrix::semicross(config.coloring_d);
            ColoringScheme scheme(std::move(m), ClusterShape::semi_cross(1), dims);
            return std::make_unique<ColoringCode>(ColoringCode::assemble(
                std::move(scheme), config.modular ? "semicross-modular" : "semicross"));
        }
        ColoringMatrix m = ColoringMatrix::cross(config.coloring_d, config.coloring_n);
        ColoringScheme scheme(std::move(m), ClusterShape::cross(1), dims);
        return std::make_unique<ColoringCode>(ColoringCode::assemble(std::move(scheme), "cross"));
    }
    int m = config.m > 0 ? config.m : auto_field_degree(config.dims);
    if (tag == "A") return std::make_unique<CodeA>(config.dims, m);
    if (tag == "B") return std::make_unique<CodeB>(config.dims, m);
    if (tag == "C") return std::make_unique<CodeC>(config.dims, m);
    if (tag == "D") return std::make_unique<CodeD>(config.dims, m, config.arm);
    if (tag == "E") return std::make_unique<CodeE>(config.dims, m);
    throw std::invalid_argument("unknown construction tag: " + tag);
}

void write_array(std::ostream& os, const Dims& dims, const std::vector<uint8_t>& cells) {
    if ((long long)cells.size() != dims.volume())
        throw std::invalid_argument("array size does not match dims");
    os << "dims " << dims.str() << "\n";
    int wrap = dims.edges.back();
    for (long long i = 0; i < (long long)cells.size(); ++i) {
        os << (cells[i] ? '1' : '0');
        if ((i + 1) % wrap == 0) os << "\n";
    }
}

std::pair<Dims, std::vector<uint8_t>> read_array(std::istream& is) {
    std::string keyword;
    is >> keyword;
    if (keyword != "dims") throw std::invalid_argument("array file must start with a dims header");
    std::string spec;
    is >> spec;
    Dims dims = Dims::parse(spec);
    std::vector<uint8_t> cells;
    cells.reserve(dims.volume());
    char c;
    while (is.get(c) && (long long)cells.size() < dims.volume()) {
        if (c == '0')
            cells.push_back(0);
        else if (c == '1')
            cells.push_back(1);
        else if (!isspace((unsigned char)c))
            throw std::invalid_argument("array file: unexpected character");
    }
    if ((long long)cells.size() != dims.volume())
        throw std::invalid_argument("array file: cell count does not match dims");
    return {dims, cells};
}

void write_array_file(const std::string& path, const Dims& dims, const std::vector<uint8_t>& cells) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_array(os, dims, cells);
}

std::pair<Dims, std::vector<uint8_t>> read_array_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    return read_array(is);
}

nlohmann::json pattern_to_json(const ErrorPattern& p) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : p.cells) cells.push_back(c);
    return {{"cells", cells}};
}

ErrorPattern pattern_from_json(const nlohmann::json& j) {
    std::vector<Position> cells;
    for (const auto& c : j.at("cells")) cells.push_back(c.get<Position>());
    return ErrorPattern(std::move(cells));
}

ErrorPattern parse_pattern_spec(const std::string& spec, int rank) {
    std::vector<Position> cells;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        Position p;
        std::stringstream cs(tok);
        std::string coord;
        while (std::getline(cs, coord, ',')) p.push_back(std::stoi(coord));
        if ((int)p.size() != rank)
            throw std::invalid_argument("pattern cell has wrong dimensionality");
        cells.push_back(std::move(p));
    }
    if (cells.empty()) throw std::invalid_argument("empty pattern spec");
    return ErrorPattern(std::move(cells));
}

nlohmann::json make_descriptor(const BlockCode& code, const CodeConfig& config) {
    nlohmann::json seg = nlohmann::json::array();
    for (const auto& s : code.segments())
        seg.push_back({{"name", s.name}, {"offset", s.offset}, {"width", s.width}});
    nlohmann::json j{{"format", "mdecc-code-v1"},
                     {"name", code.name()},
                     {"config", config.to_json()},
                     {"built", code.config_json()},
                     {"dims", code.dims().edges},
                     {"redundancy", code.redundancy()},
                     {"shape", code.shape().label()},
                     {"segments", seg}};
    return j;
}

std::pair<std::unique_ptr<BlockCode>, CodeConfig> read_descriptor_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    nlohmann::json j = nlohmann::json::parse(is);
    if (j.value("format", "") != "mdecc-code-v1")
        throw std::invalid_argument("not an mdecc code descriptor");
    CodeConfig config = CodeConfig::from_json(j.at("config"));
    auto code = build_code(config);
    if (code->redundancy() != j.at("redundancy").get<int>())
        throw std::runtime_error("descriptor redundancy does not match the rebuilt code");
    return {std::move(code), config};
}

void export_parity_columns(std::ostream& os, const BlockCode& code) {
    os << "# mdecc parity-check export v1\n";
    os << "# code " << code.name() << "\n";
    os << "# dims " << code.dims().str() << "\n";
    os << "# redundancy " << code.redundancy() << "\n";
    nlohmann::json built = code.config_json();
    if (built.contains("m")) {
        gf::Field f(built["m"].get<int>());
        char buf[16];
        snprintf(buf, sizeof buf, "0x%x", f.poly());
        os << "# field m=" << f.degree() << " poly=" << buf << "\n";
    }
    os << "# segments";
    for (const auto& s : code.segments()) os << " " << s.name << ":" << s.offset << ":" << s.width;
    os << "\n";
    long long n = code.dims().volume();
    for (long long i = 0; i < n; ++i) os << i << " " << code.column_at(i).to_hex() << "\n";
}

ParityExport parse_parity_export(std::istream& is) {
    ParityExport px;
    std::string line;
    std::vector<std::pair<long long, std::string>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::stringstream ss(line.substr(1));
            std::string key;
            ss >> key;
            std::string rest;
            std::getline(ss, rest);
            if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
            px.header[key] = rest;
            continue;
        }
        std::stringstream ss(line);
        long long idx;
        std::string hex;
        ss >> idx >> hex;
        rows.emplace_back(idx, hex);
    }
    px.redundancy = std::stoi(px.header.at("redundancy"));
    px.columns.resize(rows.size());
    for (auto& [idx, hex] : rows) {
        if (idx < 0 || idx >= (long long)rows.size())
            throw std::invalid_argument("parity export: index out of range");
        px.columns[idx] = BitVec::from_hex(hex, px.redundancy);
    }
    return px;
}

ErrorPattern sample_pattern(const BlockCode& code, uint64_t seed) {
    auto klass = enumerate_patterns(code.dims(), code.shape());
    if (klass.empty()) throw std::runtime_error("empty pattern class");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, klass.size() - 1);
    return klass[pick(rng)];
}

}  // namespace mdecc
