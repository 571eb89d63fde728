#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "idca/pattern.hpp"

namespace idca {

/// `zd:<d>` for Z^d or `cayley:<path>` for a JSON Cayley table file.
Group parse_group(std::string_view spec);

/// A finite group from {"order": n, "identity": i, "table": [[...], ...]}.
Group cayley_group_from_json(std::string_view json_text);

/// A pattern together with an optional write symbol.
struct PatternRecord {
  Pattern pattern;
  std::optional<Symbol> write;
};

/// Parses {"group": spec, "domain": [...], "values": [...] or "0101",
/// "alphabet": k, "write": a}. The group defaults to zd:1 and the alphabet
/// to 2. Domain elements are integers, or integer arrays for Z^d with d > 1.
PatternRecord parse_pattern_record(std::string_view json_text);

/// Reads a whole file; throws DomainError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace idca
