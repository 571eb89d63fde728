#pragma once

#include <optional>
#include <string>

#include "idca/io.hpp"
#include "idca/rule.hpp"

namespace idca::cli {

// Pattern input as given on the command line: either the flag shorthand
// (--group/--domain/--pattern/--alphabet/--write) or a JSON record.
struct PatternArgs {
  std::string group = "zd:1";
  std::string domain;
  std::string pattern;
  int alphabet = 2;
  std::optional<int> write;
  std::string record;
};

PatternRecord resolve_pattern(const PatternArgs& args);

// A pattern CA from the record; the write symbol defaults to p(e)+1 mod k.
PatternCA resolve_ca(const PatternRecord& record);

// `--p`/`--q` operand: inline JSON, a path to a JSON record, or the
// shorthand VALUES@DOMAIN over `group` (e.g. `00@0,1`, write defaulted).
PatternRecord resolve_operand(const std::string& text, const std::string& group, int alphabet);

// A local rule given as --wolfram N, as a table string over --domain, or
// derived from a pattern.
struct RuleArgs {
  std::optional<int> wolfram;
  std::string table;
  PatternArgs pattern;
};

LocalRule resolve_rule(const RuleArgs& args);

}  // namespace idca::cli
