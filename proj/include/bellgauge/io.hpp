#pragma once

// File formats shared by the CLI and the tests: the JSON state and settings
// formats, and the CSV layout produced by scan/sample/family runs.

#include <iosfwd>
#include <string>
#include <vector>

#include "bellgauge/bell.hpp"
#include "bellgauge/explorer.hpp"
#include "bellgauge/matrix.hpp"

namespace bellgauge {

/// Floats are printed with 9 significant digits everywhere ("%.9g").
std::string fmt9(double x);

/// State JSON: {"matrix": [[[re, im] x4] x4], "label": optional string},
/// row major, basis order |00>, |01>, |10>, |11>.
std::string state_to_json_text(const ComplexMatrix4& m, const std::string& label);

/// Parse the state JSON format. @throws ParseError on malformed input.
ComplexMatrix4 state_from_json_text(const std::string& text, std::string* label_out = nullptr);

/// Read and parse a state file. @throws IoError, ParseError.
ComplexMatrix4 load_state_file(const std::string& path, std::string* label_out = nullptr);

/// Settings JSON: {"a": [x,y,z], "a_prime": [...], "b": [...], "b_prime": [...]}.
std::string settings_to_json_text(const ChshSettings& s);
ChshSettings settings_from_json_text(const std::string& text);
ChshSettings load_settings_file(const std::string& path);

/// Exact CSV header for record output.
extern const char* const kCsvHeader;

/// One CSV row; parameter columns are left empty for records without
/// X-state parameters. Booleans print as true/false, LF line endings.
std::string record_csv_row(const StateRecord& record);

void write_records_csv(std::ostream& out, const std::vector<StateRecord>& records);

/// Entire file contents. @throws IoError.
std::string read_file(const std::string& path);

}  // namespace bellgauge
