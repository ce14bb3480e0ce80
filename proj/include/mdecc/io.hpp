#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdecc/code.hpp"

namespace mdecc {

/// CLI-facing description of a code to build. `construction` is one of
/// A, B, C, D, E, coloring-semicross, coloring-cross.
struct CodeConfig {
    std::string construction;
    Dims dims;          // constructions only; coloring codes use cube(D, n)
    int m = 0;          // 0 = smallest feasible field degree
    int arm = 1;        // R for construction D
    int coloring_d = 0; // D for coloring codes
    int coloring_n = 0; // cube edge for coloring codes
    bool modular = false;  // semicross nonlinear variant
    bool strict = false;   // reject parameters outside the guaranteed range

    nlohmann::json to_json() const;
    static CodeConfig from_json(const nlohmann::json& j);
};

std::unique_ptr<BlockCode> build_code(const CodeConfig& config);

// --- array files: "dims n1,...,nD" header, then row-major ASCII bits --------
void write_array(std::ostream& os, const Dims& dims, const std::vector<uint8_t>& cells);
std::pair<Dims, std::vector<uint8_t>> read_array(std::istream& is);
void write_array_file(const std::string& path, const Dims& dims, const std::vector<uint8_t>& cells);
std::pair<Dims, std::vector<uint8_t>> read_array_file(const std::string& path);

// --- error patterns ----------------------------------------------------------
nlohmann::json pattern_to_json(const ErrorPattern& p);
ErrorPattern pattern_from_json(const nlohmann::json& j);
/// "i1,i2,...;j1,j2,..." -> pattern of the listed cells.
ErrorPattern parse_pattern_spec(const std::string& spec, int rank);

// --- code descriptors ---------------------------------------------------------
nlohmann::json make_descriptor(const BlockCode& code, const CodeConfig& config);
/// Rebuilds the code from a descriptor and cross-checks the recorded redundancy.
std::pair<std::unique_ptr<BlockCode>, CodeConfig> read_descriptor_file(const std::string& path);

// --- parity-check export -------------------------------------------------------
/// One line per linear index: "<index> <hex of the r-bit column, first nibble
/// = bits 0..3>". Header lines carry the construction, dims, redundancy,
/// segment boundaries and field polynomial.
void export_parity_columns(std::ostream& os, const BlockCode& code);
struct ParityExport {
    std::map<std::string, std::string> header;
    int redundancy = 0;
    std::vector<BitVec> columns;
};
ParityExport parse_parity_export(std::istream& is);

/// Uniform draw from the enumerated pattern class, reproducible by seed.
ErrorPattern sample_pattern(const BlockCode& code, uint64_t seed);

}  // namespace mdecc
