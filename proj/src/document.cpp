#include "ginv/document.hpp"

#include <json.hpp>
#include <sstream>

#include "ginv/error.hpp"

namespace ginv {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object", 0);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", 0);
  return *it;
}

std::size_t count_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a count", 0);
  return v.get<std::size_t>();
}

Matrix matrix_from_json(const json& obj) {
  const std::size_t rows = count_field(obj, "rows");
  const std::size_t cols = count_field(obj, "cols");
  if (rows == 0 || cols == 0) throw DimensionError("matrix document: rows and cols must be positive");
  const json& grid = field(obj, "entries");
  if (!grid.is_array()) throw ParseError("field 'entries' must be an array of rows", 0);
  if (grid.size() != rows) {
    throw DimensionError("matrix document: declared " + std::to_string(rows) + " rows, found " +
                         std::to_string(grid.size()));
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = grid[r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array", 0);
    if (row.size() != cols) {
      throw DimensionError("matrix document: row " + std::to_string(r + 1) + " has " +
                           std::to_string(row.size()) + " entries, declared " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string where = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (!row[c].is_string()) throw ParseError(where + " must be a string token", 0);
      try {
        entries.push_back(parse_scalar(row[c].get<std::string>()));
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.offset());
      }
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

std::string quoted(const std::string& s) { return json(s).dump(); }

template <typename T, typename F>
std::string or_null(const std::optional<T>& v, F&& render) {
  return v ? render(*v) : std::string("null");
}

std::optional<std::string> opt_string(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw ParseError("expected string or null", 0);
  return v.get<std::string>();
}

}  // namespace

Matrix parse_document(std::string_view text) { return matrix_from_json(parse_json(text)); }

std::string emit_matrix(const Matrix& m) {
  std::ostringstream os;
  os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"entries\": [";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ", ";
      os << '"' << format_scalar(m(r, c)) << '"';
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

std::string emit_document(const ReportDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"command\": " << quoted(doc.command) << ",\n";
  os << "  \"kind\": " << or_null(doc.kind, quoted) << ",\n";
  os << "  \"ok\": " << (doc.ok ? "true" : "false") << ",\n";
  os << "  \"result\": " << or_null(doc.result, emit_matrix) << ",\n";
  os << "  \"unique\": "
     << or_null(doc.unique, [](bool b) { return std::string(b ? "true" : "false"); }) << ",\n";
  os << "  \"index\": " << or_null(doc.index, [](std::size_t k) { return std::to_string(k); }) << ",\n";
  os << "  \"parts\": "
     << or_null(doc.parts,
                [](const DecompositionParts& p) {
                  return "{\"core\": " + emit_matrix(p.core) + ", \"nil\": " + emit_matrix(p.nil) +
                         ", \"projector\": " + emit_matrix(p.projector) + "}";
                })
     << ",\n";
  os << "  \"checks\": [";
  for (std::size_t i = 0; i < doc.checks.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n");
    os << "    {\"name\": " << quoted(doc.checks[i].name)
       << ", \"holds\": " << (doc.checks[i].holds ? "true" : "false") << "}";
  }
  os << (doc.checks.empty() ? "],\n" : "\n  ],\n");
  os << "  \"reason\": " << or_null(doc.reason, quoted) << "\n";
  os << "}\n";
  return os.str();
}

ReportDocument parse_report(std::string_view text) {
  const json j = parse_json(text);
  ReportDocument doc;
  const json& command = field(j, "command");
  if (!command.is_string()) throw ParseError("field 'command' must be a string", 0);
  doc.command = command.get<std::string>();
  doc.kind = opt_string(field(j, "kind"));
  const json& ok = field(j, "ok");
  if (!ok.is_boolean()) throw ParseError("field 'ok' must be a boolean", 0);
  doc.ok = ok.get<bool>();
  if (const json& r = field(j, "result"); !r.is_null()) doc.result = matrix_from_json(r);
  if (const json& u = field(j, "unique"); !u.is_null()) {
    if (!u.is_boolean()) throw ParseError("field 'unique' must be a boolean or null", 0);
    doc.unique = u.get<bool>();
  }
  if (const json& k = field(j, "index"); !k.is_null()) {
    if (!k.is_number_unsigned()) throw ParseError("field 'index' must be a count or null", 0);
    doc.index = k.get<std::size_t>();
  }
  if (const json& p = field(j, "parts"); !p.is_null()) {
    doc.parts = DecompositionParts{matrix_from_json(field(p, "core")), matrix_from_json(field(p, "nil")),
                                   matrix_from_json(field(p, "projector"))};
  }
  const json& checks = field(j, "checks");
  if (!checks.is_array()) throw ParseError("field 'checks' must be an array", 0);
  for (const json& c : checks) {
    const json& name = field(c, "name");
    const json& holds = field(c, "holds");
    if (!name.is_string() || !holds.is_boolean()) throw ParseError("malformed check entry", 0);
    doc.checks.push_back({name.get<std::string>(), holds.get<bool>()});
  }
  doc.reason = opt_string(field(j, "reason"));
  return doc;
}

}  // namespace ginv
