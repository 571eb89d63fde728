#include "idca/rule.hpp"

#include <algorithm>

namespace idca {

namespace {

std::vector<std::uint64_t> place_weights(std::size_t n, int k) {
  std::vector<std::uint64_t> w(n);
  std::uint64_t acc = 1;
  for (std::size_t j = n; j-- > 0;) {
    w[j] = acc;
    acc *= static_cast<std::uint64_t>(k);
  }
  return w;
}

// Advances a most-significant-first odometer by one.
void increment(std::vector<Symbol>& digits, int k) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < k) return;
    digits[i] = 0;
  }
}

void require_compatible(const LocalRule& a, const LocalRule& b, const char* op) {
  if (!(a.group() == b.group())) throw DomainError(std::string(op) + ": rules over different groups");
  if (!(a.alphabet() == b.alphabet())) {
    throw DomainError(std::string(op) + ": rules over different alphabets");
  }
}

}  // namespace

std::uint64_t encode(std::span<const Symbol> digits, int k) {
  std::uint64_t index = 0;
  for (Symbol d : digits) index = index * static_cast<std::uint64_t>(k) + d;
  return index;
}

void decode(std::uint64_t index, int k, std::span<Symbol> digits) {
  for (std::size_t j = digits.size(); j-- > 0;) {
    digits[j] = static_cast<Symbol>(index % static_cast<std::uint64_t>(k));
    index /= static_cast<std::uint64_t>(k);
  }
}

// ---------------------------------------------------------------------------
// LocalRule

LocalRule::LocalRule(GroupSubset memory, Alphabet alphabet, std::vector<Symbol> table)
    : memory_(std::move(memory)), alphabet_(alphabet), table_(std::move(table)) {
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < memory_.size(); ++i) {
    if (expected > (std::uint64_t{1} << 40) / alphabet_.size()) {
      throw SizeCapError("local rule table is too large");
    }
    expected *= static_cast<std::uint64_t>(alphabet_.size());
  }
  if (table_.size() != expected) {
    throw DomainError("local rule table has " + std::to_string(table_.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  for (Symbol v : table_) {
    if (!alphabet_.contains(v)) throw DomainError("local rule output outside the alphabet");
  }
}

LocalRule LocalRule::identity(const Group& group, Alphabet alphabet) {
  std::vector<Symbol> table(alphabet.size());
  for (int v = 0; v < alphabet.size(); ++v) table[v] = static_cast<Symbol>(v);
  return LocalRule(GroupSubset(group, {group.identity()}), alphabet, std::move(table));
}

LocalRule LocalRule::constant(const Group& group, Alphabet alphabet, Symbol value) {
  return LocalRule(GroupSubset(group, {}), alphabet, {value});
}

LocalRule LocalRule::elementary(int wolfram_number) {
  if (wolfram_number < 0 || wolfram_number > 255) {
    throw DomainError("Wolfram number must be in 0..255");
  }
  std::vector<Symbol> table(8);
  for (int idx = 0; idx < 8; ++idx) table[idx] = static_cast<Symbol>((wolfram_number >> idx) & 1);
  return LocalRule(GroupSubset::integers({-1, 0, 1}), Alphabet(2), std::move(table));
}

LocalRule LocalRule::from_function(GroupSubset memory, Alphabet alphabet,
                                   const std::function<Symbol(std::span<const Symbol>)>& fn,
                                   const SizeLimits& limits) {
  const std::uint64_t total = checked_power(alphabet.size(), memory.size(),
                                            limits.max_table_entries, "local rule table");
  std::vector<Symbol> table(total);
  std::vector<Symbol> digits(memory.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    table[idx] = fn(digits);
    increment(digits, alphabet.size());
  }
  return LocalRule(std::move(memory), alphabet, std::move(table));
}

LocalRule LocalRule::from_table_string(GroupSubset memory, Alphabet alphabet, std::string_view text) {
  if (alphabet.size() > 10) throw ParseError("table strings require an alphabet of size <= 10");
  std::vector<Symbol> table(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError(std::string("bad table digit '") + c + "'");
    table[text.size() - 1 - i] = static_cast<Symbol>(c - '0');
  }
  try {
    return LocalRule(std::move(memory), alphabet, std::move(table));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string LocalRule::table_string() const {
  std::string out;
  const bool digits = alphabet_.size() <= 10;
  for (std::size_t i = table_.size(); i-- > 0;) {
    if (!digits && i + 1 != table_.size()) out += ',';
    out += std::to_string(table_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

LocalRule rule_from_pattern(const Pattern& p, Symbol write, IdentityPolicy policy) {
  if (!p.alphabet().contains(write)) throw DomainError("write symbol outside the alphabet");
  if (write == p.at_identity() && policy == IdentityPolicy::Reject) {
    throw DomainError("write symbol equals p(e): the rule would be the identity CA");
  }
  const int k = p.alphabet().size();
  const std::size_t e = p.identity_index();
  const std::uint64_t total = checked_power(k, p.size(), std::uint64_t{1} << 40, "pattern rule");
  std::vector<Symbol> table(total);
  std::vector<Symbol> digits(p.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    table[idx] = digits[e];
    increment(digits, k);
  }
  table[encode(p.values(), k)] = write;
  return LocalRule(p.domain(), p.alphabet(), std::move(table));
}

Symbol evaluate(const LocalRule& rule, std::span<const Symbol> values) {
  if (values.size() != rule.memory().size()) {
    throw DomainError("evaluate: fragment size does not match the memory set");
  }
  for (Symbol v : values) {
    if (!rule.alphabet().contains(v)) throw DomainError("evaluate: symbol outside the alphabet");
  }
  return rule.at(encode(values, rule.alphabet().size()));
}

Symbol evaluate(const LocalRule& rule, const Fragment& z) {
  std::vector<Symbol> values;
  values.reserve(rule.memory().size());
  for (const auto& s : rule.memory()) values.push_back(z.at(s));
  return evaluate(rule, values);
}

LocalRule star(const LocalRule& mu, const LocalRule& nu, const SizeLimits& limits) {
  require_compatible(mu, nu, "star");
  const GroupSubset& t = mu.memory();
  const GroupSubset& s = nu.memory();
  GroupSubset ts = set_product(t, s);
  const int k = mu.alphabet().size();
  const std::uint64_t total = checked_power(k, ts.size(), limits.max_table_entries, "star composition");

  // pos[i * |S| + j] = index of t_i s_j in TS
  std::vector<std::size_t> pos(t.size() * s.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      pos[i * s.size() + j] = ts.position(mu.group().multiply(t[i], s[j]));
  const auto nu_weights = place_weights(s.size(), k);

  std::vector<Symbol> table(total);
  std::vector<Symbol> digits(ts.size(), 0);
  const auto nu_table = nu.table();
  const auto mu_table = mu.table();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t mu_index = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::uint64_t nu_index = 0;
      const std::size_t* row = &pos[i * s.size()];
      for (std::size_t j = 0; j < s.size(); ++j) nu_index += digits[row[j]] * nu_weights[j];
      mu_index = mu_index * static_cast<std::uint64_t>(k) + nu_table[nu_index];
    }
    table[idx] = mu_table[mu_index];
    increment(digits, k);
  }
  return LocalRule(std::move(ts), mu.alphabet(), std::move(table));
}

LocalRule extend(const LocalRule& rule, const GroupSubset& window, const SizeLimits& limits) {
  if (!(rule.group() == window.group())) throw DomainError("extend: window in a different group");
  if (!rule.memory().is_subset_of(window)) {
    throw DomainError("extend: memory set {" + rule.memory().str() + "} is not contained in {" +
                      window.str() + "}");
  }
  const int k = rule.alphabet().size();
  const std::uint64_t total = checked_power(k, window.size(), limits.max_table_entries, "extend");
  std::vector<std::size_t> pos(rule.memory().size());
  for (std::size_t j = 0; j < pos.size(); ++j) pos[j] = window.position(rule.memory()[j]);
  const auto weights = place_weights(pos.size(), k);

  std::vector<Symbol> table(total);
  std::vector<Symbol> digits(window.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t inner = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) inner += digits[pos[j]] * weights[j];
    table[idx] = rule.at(inner);
    increment(digits, k);
  }
  return LocalRule(window, rule.alphabet(), std::move(table));
}

bool rules_equal(const LocalRule& a, const LocalRule& b, const SizeLimits& limits) {
  require_compatible(a, b, "rules_equal");
  if (a.memory() == b.memory()) return std::ranges::equal(a.table(), b.table());
  GroupSubset window = set_union(a.memory(), b.memory());
  const LocalRule ea = extend(a, window, limits);
  const LocalRule eb = extend(b, window, limits);
  return std::ranges::equal(ea.table(), eb.table());
}

ReducedRule minimal_memory_set(const LocalRule& rule) {
  const int k = rule.alphabet().size();
  const std::size_t n = rule.memory().size();
  const auto weights = place_weights(n, k);
  std::vector<Symbol> digits(n, 0);
  std::vector<bool> essential(n, false);
  for (std::uint64_t idx = 0; idx < rule.size(); ++idx) {
    for (std::size_t j = 0; j < n; ++j) {
      if (essential[j] || digits[j] != 0) continue;
      for (int v = 1; v < k; ++v) {
        if (rule.at(idx + v * weights[j]) != rule.at(idx)) {
          essential[j] = true;
          break;
        }
      }
    }
    increment(digits, k);
  }

  std::vector<Element> kept;
  std::vector<std::uint64_t> kept_weights;
  for (std::size_t j = 0; j < n; ++j) {
    if (essential[j]) {
      kept.push_back(rule.memory()[j]);
      kept_weights.push_back(weights[j]);
    }
  }
  GroupSubset memory(rule.group(), std::move(kept));
  const std::uint64_t total = checked_power(k, memory.size(), std::uint64_t{1} << 40, "reduced rule");
  std::vector<Symbol> table(total);
  std::vector<Symbol> reduced(memory.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t full = 0;
    for (std::size_t j = 0; j < reduced.size(); ++j) full += reduced[j] * kept_weights[j];
    table[idx] = rule.at(full);
    increment(reduced, k);
  }
  LocalRule reduced_rule(memory, rule.alphabet(), std::move(table));
  return ReducedRule{std::move(memory), std::move(reduced_rule)};
}

int wolfram_number(const LocalRule& rule) {
  if (!(rule.group() == Group::integers()) || !(rule.memory() == GroupSubset::integers({-1, 0, 1})) ||
      rule.alphabet().size() != 2) {
    throw DomainError("Wolfram numbers need a binary rule on Z with memory -1,0,1");
  }
  int number = 0;
  for (int idx = 0; idx < 8; ++idx) number |= rule.at(idx) << idx;
  return number;
}

std::optional<std::pair<Pattern, Symbol>> as_pattern_rule(const LocalRule& rule) {
  auto e = rule.memory().index_of(rule.group().identity());
  if (!e) throw DomainError("as_pattern_rule: the identity is not in the memory set");
  const int k = rule.alphabet().size();
  std::vector<Symbol> digits(rule.memory().size(), 0);
  std::optional<std::uint64_t> found;
  for (std::uint64_t idx = 0; idx < rule.size(); ++idx) {
    if (rule.at(idx) != digits[*e]) {
      if (found) return std::nullopt;
      found = idx;
    }
    increment(digits, k);
  }
  if (!found) return std::nullopt;
  decode(*found, k, digits);
  return std::make_pair(Pattern(rule.memory(), digits, rule.alphabet()), rule.at(*found));
}

// ---------------------------------------------------------------------------
// PatternCA

PatternCA::PatternCA(Pattern pattern, Symbol write)
    : pattern_(std::move(pattern)), write_(write), rule_(rule_from_pattern(pattern_, write_)) {}

PatternCA PatternCA::with_default_write(Pattern pattern) {
  const auto k = pattern.alphabet().size();
  const auto a = static_cast<Symbol>((pattern.at_identity() + 1) % k);
  return PatternCA(std::move(pattern), a);
}

std::string PatternCA::label() const {
  return pattern_.str() + ">" + std::to_string(write_);
}

}  // namespace idca
