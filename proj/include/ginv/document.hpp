#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

// Matrix document: {"rows": n, "cols": m, "entries": [[token, ...], ...]}
// with every token in the scalar grammar. Malformed JSON, missing fields and
// bad tokens raise ParseError (tokens report their row and column); ragged
// grids and shape mismatches raise DimensionError.
Matrix parse_document(std::string_view text);

// Canonical single-line payload, e.g.
//   {"rows": 1, "cols": 2, "entries": [["1/9", "1+1i"]]}
std::string emit_matrix(const Matrix& m);

struct NamedCheck {
  std::string name;
  bool holds = false;

  friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct DecompositionParts {
  Matrix core;
  Matrix nil;
  Matrix projector;

  friend bool operator==(const DecompositionParts&, const DecompositionParts&) = default;
};

struct ReportDocument {
  std::string command;
  std::optional<std::string> kind;
  bool ok = false;
  std::optional<Matrix> result;
  std::optional<bool> unique;
  std::optional<std::size_t> index;
  std::optional<DecompositionParts> parts;
  std::vector<NamedCheck> checks;
  std::optional<std::string> reason;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// Keys in the fixed order command, kind, ok, result, unique, index, parts,
// checks, reason; absent values are null. One key per line, one check per
// line, trailing newline.
std::string emit_document(const ReportDocument& doc);

// Inverse of emit_document; emit_document(parse_report(emit_document(d)))
// reproduces the same bytes.
ReportDocument parse_report(std::string_view text);

}  // namespace ginv
