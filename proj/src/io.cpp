#include "bellgauge/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bellgauge/errors.hpp"

namespace bellgauge {

using nlohmann::json;

std::string fmt9(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string state_to_json_text(const ComplexMatrix4& m, const std::string& label) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  json doc;
  doc["matrix"] = rows;
  if (!label.empty()) doc["label"] = label;
  return doc.dump(2) + "\n";
}

ComplexMatrix4 state_from_json_text(const std::string& text, std::string* label_out) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix"))
    throw ParseError("state JSON must be an object with a \"matrix\" key");
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4) throw ParseError("\"matrix\" must hold 4 rows");

  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) throw ParseError("each matrix row must hold 4 entries");
    for (int j = 0; j < 4; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
        throw ParseError("each entry must be a [re, im] pair of numbers");
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  if (label_out) {
    if (doc.contains("label") && doc["label"].is_string())
      *label_out = doc["label"].get<std::string>();
    else
      label_out->clear();
  }
  return m;
}

ComplexMatrix4 load_state_file(const std::string& path, std::string* label_out) {
  return state_from_json_text(read_file(path), label_out);
}

std::string settings_to_json_text(const ChshSettings& s) {
  json doc;
  const auto vec = [](const Vec3& v) { return json::array({v[0], v[1], v[2]}); };
  doc["a"] = vec(s.a);
  doc["a_prime"] = vec(s.a_prime);
  doc["b"] = vec(s.b);
  doc["b_prime"] = vec(s.b_prime);
  return doc.dump(2) + "\n";
}

ChshSettings settings_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  const auto vec = [&doc](const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("settings JSON missing \"") + key + "\"");
    const json& arr = doc[key];
    if (!arr.is_array() || arr.size() != 3 || !arr[0].is_number() || !arr[1].is_number() ||
        !arr[2].is_number())
      throw ParseError(std::string("\"") + key + "\" must be a [x, y, z] triple");
    return Vec3{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
  };
  return ChshSettings{vec("a"), vec("a_prime"), vec("b"), vec("b_prime")};
}

ChshSettings load_settings_file(const std::string& path) {
  return settings_from_json_text(read_file(path));
}

const char* const kCsvHeader =
    "label,p11,p22,p33,p44,c,s12,s_norm,concurrence,chsh_max,satisfies_santos,violates_chsh";

std::string record_csv_row(const StateRecord& r) {
  std::ostringstream row;
  row << r.label << ',';
  if (r.params) {
    row << fmt9(r.params->p11) << ',' << fmt9(r.params->p22) << ',' << fmt9(r.params->p33) << ','
        << fmt9(r.params->p44) << ',' << fmt9(r.params->c) << ',';
  } else {
    row << ",,,,,";
  }
  row << fmt9(r.s12) << ',' << fmt9(r.s_norm) << ',' << fmt9(r.concurrence) << ','
      << fmt9(r.chsh_max) << ',' << (r.satisfies_santos ? "true" : "false") << ','
      << (r.violates_chsh ? "true" : "false");
  return row.str();
}

void write_records_csv(std::ostream& out, const std::vector<StateRecord>& records) {
  out << kCsvHeader << '\n';
  for (const StateRecord& r : records) out << record_csv_row(r) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path);
  return buf.str();
}

}  // namespace bellgauge
