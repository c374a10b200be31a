#pragma once
// JSON formats: matrix files {"dims": [...], "entries": [[re, im], ...]}
// (row-major over the full matrix) and the reports the CLI emits.
//
// Doubles are written so that parsing the output gives back the same bits.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sepball/ballbounds.hpp"
#include "sepball/certify.hpp"
#include "sepball/matcore.hpp"
#include "sepball/nmr.hpp"

namespace sepball::io {

struct MatrixFile {
  Dims dims;
  ComplexMatrix matrix;
};

/// Throws ParseError on malformed JSON, missing fields, or an entry count
/// that does not match prod(dims)^2.
MatrixFile parse_matrix_json(const std::string& text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Entries are printed with %.17g.
std::string matrix_json(const Dims& dims, const CMat& m);
void write_matrix_file(const std::filesystem::path& path, const Dims& dims, const CMat& m);

nlohmann::json to_json(const certify::Certificate& c);
certify::Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const bounds::RadiusReport& r);
bounds::RadiusReport radius_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const nmr::ThresholdReport& r);
nmr::ThresholdReport threshold_report_from_json(const nlohmann::json& j);

}  // namespace sepball::io
