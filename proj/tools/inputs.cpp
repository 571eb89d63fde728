#include "inputs.hpp"

#include <filesystem>

namespace idca::cli {

PatternRecord resolve_pattern(const PatternArgs& args) {
  if (!args.record.empty()) return resolve_operand(args.record, args.group, args.alphabet);
  if (args.domain.empty() || args.pattern.empty()) {
    throw DomainError("a pattern needs --domain and --pattern, or --record");
  }
  const Group group = parse_group(args.group);
  const Alphabet alphabet(args.alphabet);
  PatternRecord record{Pattern::parse(parse_subset(group, args.domain), args.pattern, alphabet), std::nullopt};
  if (args.write) {
    if (!alphabet.contains(*args.write)) throw DomainError("--write is outside the alphabet");
    record.write = static_cast<Symbol>(*args.write);
  }
  return record;
}

PatternCA resolve_ca(const PatternRecord& record) {
  if (record.write) return PatternCA(record.pattern, *record.write);
  return PatternCA::with_default_write(record.pattern);
}

PatternRecord resolve_operand(const std::string& text, const std::string& group, int alphabet) {
  if (text.starts_with("{")) return parse_pattern_record(text);
  const auto at = text.find('@');
  if (at != std::string::npos) {
    PatternArgs args;
    args.group = group;
    args.alphabet = alphabet;
    args.pattern = text.substr(0, at);
    args.domain = text.substr(at + 1);
    return resolve_pattern(args);
  }
  if (std::filesystem::exists(text)) return parse_pattern_record(read_text_file(text));
  throw ParseError("cannot read pattern operand '" + text + "' (JSON, file path, or VALUES@DOMAIN)");
}

LocalRule resolve_rule(const RuleArgs& args) {
  if (args.wolfram) {
    if (*args.wolfram < 0 || *args.wolfram > 255) throw DomainError("Wolfram numbers run from 0 to 255");
    return LocalRule::elementary(*args.wolfram);
  }
  if (!args.table.empty()) {
    const Group group = parse_group(args.pattern.group);
    const std::string domain = args.pattern.domain.empty() ? "-1,0,1" : args.pattern.domain;
    return LocalRule::from_table_string(parse_subset(group, domain), Alphabet(args.pattern.alphabet),
                                        args.table);
  }
  return resolve_ca(resolve_pattern(args.pattern)).rule();
}

}  // namespace idca::cli
