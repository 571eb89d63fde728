#include "idca/pattern.hpp"

#include <algorithm>
#include <charconv>

namespace idca {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2) throw DomainError("alphabet size must be >= 2");
  if (size > 255) throw DomainError("alphabet size must be <= 255");
}

Pattern::Pattern(GroupSubset domain, std::vector<Symbol> values, Alphabet alphabet)
    : domain_(std::move(domain)), values_(std::move(values)), alphabet_(alphabet) {
  if (values_.size() != domain_.size()) {
    throw DomainError("pattern has " + std::to_string(values_.size()) + " values for a domain of size " +
                      std::to_string(domain_.size()));
  }
  auto e = domain_.index_of(domain_.group().identity());
  if (!e) throw DomainError("pattern domain {" + domain_.str() + "} does not contain the identity");
  identity_index_ = *e;
  for (Symbol v : values_) {
    if (!alphabet_.contains(v)) {
      throw DomainError("pattern value " + std::to_string(v) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
    }
  }
}

Pattern Pattern::parse(GroupSubset domain, std::string_view text, Alphabet alphabet) {
  std::vector<Symbol> values;
  if (text.find(',') != std::string_view::npos || alphabet.size() > 10) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto pos = text.find(',', start);
      auto part = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v < 0 || v > 255) {
        throw ParseError("bad pattern symbol '" + std::string(part) + "'");
      }
      values.push_back(static_cast<Symbol>(v));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(std::string("bad pattern digit '") + c + "'");
      values.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  try {
    return Pattern(std::move(domain), std::move(values), alphabet);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Pattern Pattern::constant(GroupSubset domain, Symbol b, Alphabet alphabet) {
  std::vector<Symbol> values(domain.size(), b);
  return Pattern(std::move(domain), std::move(values), alphabet);
}

std::string Pattern::str() const {
  return Fragment{domain_, values_}.str();
}

bool is_constant(const Pattern& p) {
  const Symbol c = p.at_identity();
  return std::all_of(p.values().begin(), p.values().end(), [c](Symbol v) { return v == c; });
}

bool is_symmetrical(const Pattern& p) {
  const auto& s = p.domain();
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto j = s.index_of(p.group().inverse(s[i]));
    if (!j || p.values()[*j] != p.values()[i]) return false;
  }
  return true;
}

std::vector<Element> quasi_constant_candidates(const Pattern& p) {
  std::vector<Element> out;
  if (is_constant(p)) return out;
  const auto values = p.values();
  for (std::size_t r = 0; r < values.size(); ++r) {
    std::optional<Symbol> common;
    bool constant_off_r = true;
    for (std::size_t i = 0; i < values.size() && constant_off_r; ++i) {
      if (i == r) continue;
      if (!common) common = values[i];
      constant_off_r = values[i] == *common;
    }
    if (constant_off_r) out.push_back(p.domain()[r]);
  }
  return out;
}

std::optional<Element> quasi_constant_term(const Pattern& p) {
  auto candidates = quasi_constant_candidates(p);
  if (candidates.empty()) return std::nullopt;
  const Element e = p.group().identity();
  for (const auto& r : candidates)
    if (r != e) return r;
  return candidates.front();
}

bool pattern_leq(const Pattern& p, const Pattern& q) {
  if (!(p.group() == q.group()) || !(p.alphabet() == q.alphabet())) {
    throw DomainError("pattern_leq: patterns over different groups or alphabets");
  }
  const auto& s1 = p.domain();
  for (std::size_t i = 0; i < s1.size(); ++i) {
    auto j = q.domain().index_of(s1[i]);
    if (!j || q.values()[*j] != p.values()[i]) return false;
  }
  return true;
}

std::uint64_t pattern_count(const GroupSubset& domain, Alphabet alphabet, const SizeLimits& limits) {
  return checked_power(static_cast<std::uint64_t>(alphabet.size()), domain.size(),
                       limits.max_table_entries, "pattern enumeration");
}

void for_each_pattern(const GroupSubset& domain, Alphabet alphabet,
                      const std::function<void(const Pattern&)>& visit, const SizeLimits& limits) {
  const std::uint64_t total = pattern_count(domain, alphabet, limits);
  std::vector<Symbol> digits(domain.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    visit(Pattern(domain, digits, alphabet));
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < alphabet.size()) break;
      digits[i] = 0;
    }
  }
}

std::vector<Pattern> enumerate_patterns(const GroupSubset& domain, Alphabet alphabet,
                                        const SizeLimits& limits) {
  std::vector<Pattern> out;
  out.reserve(pattern_count(domain, alphabet, limits));
  for_each_pattern(domain, alphabet, [&](const Pattern& p) { out.push_back(p); }, limits);
  return out;
}

}  // namespace idca
