#include "idca/oracle.hpp"

namespace idca {

namespace {

void require_finite_carrier(const Group& carrier, const Group& rule_group) {
  if (!carrier.is_finite()) throw DomainError("oracle: carrier must be a finite group");
  if (!(carrier == rule_group)) throw DomainError("oracle: rule is over a different group than the carrier");
}

// For every g and s: index of g·s. Row-major |G| x |S|.
std::vector<std::size_t> neighbourhoods(const Group& carrier, const GroupSubset& s) {
  const std::size_t n = carrier.order();
  std::vector<std::size_t> out(n * s.size());
  const auto elems = carrier.elements();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < s.size(); ++j)
      out[g * s.size() + j] = carrier.index(carrier.multiply(elems[g], s[j]));
  return out;
}

std::vector<Symbol> apply_raw(const LocalRule& rule, const std::vector<std::size_t>& nbhd,
                              std::span<const Symbol> x) {
  const std::size_t m = rule.memory().size();
  const auto k = static_cast<std::uint64_t>(rule.alphabet().size());
  std::vector<Symbol> y(x.size());
  for (std::size_t g = 0; g < x.size(); ++g) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) idx = idx * k + x[nbhd[g * m + j]];
    y[g] = rule.at(idx);
  }
  return y;
}

}  // namespace

GlobalConfiguration::GlobalConfiguration(Group carrier, std::vector<Symbol> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (!carrier_.is_finite()) throw DomainError("global configurations need a finite carrier");
  if (values_.size() != carrier_.order()) {
    throw DomainError("configuration size does not match the carrier order");
  }
}

GlobalConfiguration GlobalConfiguration::constant(const Group& carrier, Symbol value) {
  return GlobalConfiguration(carrier, std::vector<Symbol>(carrier.order(), value));
}

GlobalConfiguration GlobalConfiguration::from_index(const Group& carrier, Alphabet alphabet,
                                                    std::uint64_t index) {
  std::vector<Symbol> values(carrier.order());
  decode(index, alphabet.size(), values);
  return GlobalConfiguration(carrier, std::move(values));
}

std::string GlobalConfiguration::str() const { return Fragment{GroupSubset(carrier_, carrier_.elements()), values_}.str(); }

GlobalConfiguration translate(const Element& g, const GlobalConfiguration& x) {
  const Group& G = x.carrier();
  const Element g_inv = G.inverse(g);
  std::vector<Symbol> values(G.order());
  for (const auto& h : G.elements()) values[G.index(h)] = x.at(G.multiply(g_inv, h));
  return GlobalConfiguration(G, std::move(values));
}

GlobalConfiguration global_apply(const LocalRule& rule, const GlobalConfiguration& x) {
  require_finite_carrier(x.carrier(), rule.group());
  return GlobalConfiguration(x.carrier(),
                             apply_raw(rule, neighbourhoods(x.carrier(), rule.memory()), x.values()));
}

bool avoids(const Pattern& p, const GlobalConfiguration& x) {
  require_finite_carrier(x.carrier(), p.group());
  const auto nbhd = neighbourhoods(x.carrier(), p.domain());
  const std::size_t m = p.size();
  for (std::size_t g = 0; g < x.carrier().order(); ++g) {
    bool match = true;
    for (std::size_t j = 0; j < m && match; ++j) match = x.values()[nbhd[g * m + j]] == p.values()[j];
    if (match) return false;
  }
  return true;
}

bool global_idempotent(const LocalRule& rule, const Group& carrier, const SizeLimits& limits) {
  require_finite_carrier(carrier, rule.group());
  const int k = rule.alphabet().size();
  const std::uint64_t total =
      checked_power(k, carrier.order(), limits.max_configurations, "global idempotency oracle");
  const auto nbhd = neighbourhoods(carrier, rule.memory());
  std::vector<Symbol> x(carrier.order());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, k, x);
    const auto once = apply_raw(rule, nbhd, x);
    if (apply_raw(rule, nbhd, once) != once) return false;
  }
  return true;
}

std::vector<GlobalConfiguration> fix_set(const LocalRule& rule, const Group& carrier,
                                         const SizeLimits& limits) {
  require_finite_carrier(carrier, rule.group());
  const int k = rule.alphabet().size();
  const std::uint64_t total = checked_power(k, carrier.order(), limits.max_configurations, "fix_set");
  const auto nbhd = neighbourhoods(carrier, rule.memory());
  std::vector<GlobalConfiguration> out;
  std::vector<Symbol> x(carrier.order());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, k, x);
    if (apply_raw(rule, nbhd, x) == x) out.emplace_back(carrier, x);
  }
  return out;
}

std::vector<GlobalConfiguration> avoiding_set(const Pattern& p, const Group& carrier,
                                              const SizeLimits& limits) {
  require_finite_carrier(carrier, p.group());
  const int k = p.alphabet().size();
  const std::uint64_t total = checked_power(k, carrier.order(), limits.max_configurations, "avoiding_set");
  std::vector<GlobalConfiguration> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto x = GlobalConfiguration::from_index(carrier, p.alphabet(), idx);
    if (avoids(p, x)) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace idca
