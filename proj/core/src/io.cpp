#include "idca/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace idca {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string(what) + ": " + ex.what());
  }
}

Element element_from_json(const Group& group, const json& value) {
  if (value.is_number_integer()) {
    if (group.rank() > 1) throw ParseError("element of Z^d must be an integer array");
    return Element::scalar(value.get<std::int64_t>());
  }
  if (value.is_array()) {
    std::vector<std::int64_t> coords;
    for (const auto& c : value) {
      if (!c.is_number_integer()) throw ParseError("element coordinates must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    return Element(std::move(coords));
  }
  if (value.is_string()) return parse_element(group, value.get<std::string>());
  throw ParseError("unsupported element literal " + value.dump());
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Group parse_group(std::string_view spec) {
  if (spec.starts_with("zd:")) {
    const std::string rank(spec.substr(3));
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(rank, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != rank.size() || d < 1) throw ParseError("bad group spec '" + std::string(spec) + "'");
    return Group::free_abelian(d);
  }
  if (spec.starts_with("cayley:")) {
    return cayley_group_from_json(read_text_file(std::string(spec.substr(7))));
  }
  throw ParseError("unknown group spec '" + std::string(spec) + "' (expected zd:<d> or cayley:<path>)");
}

Group cayley_group_from_json(std::string_view json_text) {
  const json doc = parse_json(json_text, "cayley table");
  try {
    const auto table = doc.at("table").get<std::vector<std::vector<int>>>();
    const int identity = doc.value("identity", 0);
    if (doc.contains("order") && doc.at("order").get<std::size_t>() != table.size()) {
      throw ParseError("cayley table: 'order' does not match the table size");
    }
    return Group::from_cayley_table(table, identity);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("cayley table: ") + ex.what());
  }
}

PatternRecord parse_pattern_record(std::string_view json_text) {
  const json doc = parse_json(json_text, "pattern record");
  try {
    const Group group = parse_group(doc.value("group", std::string("zd:1")));
    const Alphabet alphabet(doc.value("alphabet", 2));

    std::vector<Element> members;
    for (const auto& item : doc.at("domain")) members.push_back(element_from_json(group, item));
    GroupSubset domain(group, std::move(members));

    const json& values = doc.at("values");
    std::optional<Pattern> pattern;
    if (values.is_string()) {
      pattern = Pattern::parse(domain, values.get<std::string>(), alphabet);
    } else {
      std::vector<Symbol> symbols;
      for (const auto& v : values) {
        const int s = v.get<int>();
        if (!alphabet.contains(s)) throw ParseError("pattern value out of alphabet range");
        symbols.push_back(static_cast<Symbol>(s));
      }
      pattern.emplace(domain, std::move(symbols), alphabet);
    }

    std::optional<Symbol> write;
    if (doc.contains("write") && !doc.at("write").is_null()) {
      const int a = doc.at("write").get<int>();
      if (!alphabet.contains(a)) throw ParseError("write symbol out of alphabet range");
      write = static_cast<Symbol>(a);
    }
    return PatternRecord{std::move(*pattern), write};
  } catch (const json::exception& ex) {
    throw ParseError(std::string("pattern record: ") + ex.what());
  }
}

}  // namespace idca
