#include "idca/idempotency.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "idca/oracle.hpp"
#include "idca/shiftspace.hpp"

namespace idca {

namespace {

constexpr std::array<std::pair<VerdictReason, std::string_view>, 8> kReasonNames{{
    {VerdictReason::CompositionCheck, "CompositionCheck"},
    {VerdictReason::ConstantPattern, "ConstantPattern"},
    {VerdictReason::SymmetricalPattern, "SymmetricalPattern"},
    {VerdictReason::AvoidingWrite, "AvoidingWrite"},
    {VerdictReason::QuasiConstantCond1, "QuasiConstantCond1"},
    {VerdictReason::QuasiConstantCond2, "QuasiConstantCond2"},
    {VerdictReason::QuasiConstantCond3, "QuasiConstantCond3"},
    {VerdictReason::SingletonDomain, "SingletonDomain"},
}};

// rows[i][j] = position in SS of s_i t_j, for s_i, t_j in S (display order).
std::vector<std::vector<std::size_t>> shifted_windows(const GroupSubset& s, const GroupSubset& ss) {
  std::vector<std::vector<std::size_t>> rows(s.size(), std::vector<std::size_t>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) rows[i][j] = ss.position(s.group().multiply(s[i], s[j]));
  return rows;
}

std::uint64_t window_index(const std::vector<std::size_t>& row, std::span<const Symbol> x, int k) {
  std::uint64_t idx = 0;
  for (auto pos : row) idx = idx * static_cast<std::uint64_t>(k) + x[pos];
  return idx;
}

}  // namespace

std::string_view to_string(VerdictReason reason) {
  for (const auto& [r, name] : kReasonNames)
    if (r == reason) return name;
  return "Unknown";
}

VerdictReason parse_reason(std::string_view text) {
  for (const auto& [r, name] : kReasonNames)
    if (name == text) return r;
  throw ParseError("unknown verdict reason '" + std::string(text) + "'");
}

bool is_idempotent_by_composition(const LocalRule& rule, const SizeLimits& limits) {
  return rules_equal(star(rule, rule, limits), rule, limits);
}

std::optional<Witness> witness_search(const PatternCA& ca, const SizeLimits& limits) {
  const Pattern& p = ca.pattern();
  const GroupSubset& s = p.domain();
  GroupSubset ss = set_product(s, s);
  const int k = p.alphabet().size();
  checked_power(k, ss.size(), limits.max_table_entries, "witness search");

  const auto rows = shifted_windows(s, ss);
  // Each constraint becomes checkable once its last cell is assigned.
  std::vector<std::vector<std::size_t>> ready(ss.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ready[*std::max_element(rows[i].begin(), rows[i].end())].push_back(i);
  }

  const LocalRule& rule = ca.rule();
  const std::size_t n = ss.size();
  std::vector<Symbol> x(n, 0);
  std::vector<int> trial(n, -1);
  std::size_t depth = 0;
  while (true) {
    if (++trial[depth] >= k) {
      trial[depth] = -1;
      if (depth == 0) return std::nullopt;
      --depth;
      continue;
    }
    x[depth] = static_cast<Symbol>(trial[depth]);
    bool ok = true;
    for (auto i : ready[depth]) {
      if (rule.at(window_index(rows[i], x, k)) != p.values()[i]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == n) return Witness{Fragment{std::move(ss), std::move(x)}};
    ++depth;
  }
}

WitnessCheck check_witness(const PatternCA& ca, const Witness& witness) {
  const Pattern& p = ca.pattern();
  const GroupSubset& s = p.domain();
  const Fragment& x = witness.fragment;
  WitnessCheck check;
  if (!x.domain.same_set(set_product(s, s)) || x.values.size() != x.domain.size()) return check;

  check.equation = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Fragment centered = centered_restriction(x, s[i], s);
    if (evaluate(ca.rule(), centered) != p.values()[i]) check.equation = false;
  }
  const Element e = p.group().identity();
  const Fragment at_e = centered_restriction(x, e, s);
  check.restriction_differs = at_e.values != std::vector<Symbol>(p.values().begin(), p.values().end());
  check.identity_agrees = x.at(e) == p.at_identity();
  for (const auto& t : s) {
    if (t == e) continue;
    const Fragment centered = centered_restriction(x, t, s);
    if (std::ranges::equal(centered.values, p.values())) check.shifted_occurrence = true;
  }
  return check;
}

std::optional<IdempotenceVerdict> quasi_constant_trichotomy(const PatternCA& ca) {
  const Pattern& p = ca.pattern();
  const auto candidates = quasi_constant_candidates(p);
  if (candidates.empty()) return std::nullopt;
  const auto values = p.values();
  if (std::find(values.begin(), values.end(), ca.write()) == values.end()) {
    return IdempotenceVerdict{true, VerdictReason::QuasiConstantCond1, std::nullopt};
  }
  const Group& g = p.group();
  const Element e = g.identity();
  auto verdict_for = [&](const Element& r) {
    if (r != e) {
      return IdempotenceVerdict{p.domain().contains(g.multiply(r, r)), VerdictReason::QuasiConstantCond2,
                                std::nullopt};
    }
    return IdempotenceVerdict{p.domain().is_inverse_closed(), VerdictReason::QuasiConstantCond3, std::nullopt};
  };
  const IdempotenceVerdict chosen = verdict_for(*quasi_constant_term(p));
  for (const auto& r : candidates) {
    if (verdict_for(r).idempotent != chosen.idempotent) {
      throw std::logic_error("quasi-constant candidates disagree for " + ca.label());
    }
  }
  return chosen;
}

std::optional<IdempotenceVerdict> theorem_verdict(const PatternCA& ca) {
  const Pattern& p = ca.pattern();
  if (p.size() == 1) return IdempotenceVerdict{true, VerdictReason::SingletonDomain, std::nullopt};
  if (is_constant(p)) return IdempotenceVerdict{true, VerdictReason::ConstantPattern, std::nullopt};
  if (is_symmetrical(p)) return IdempotenceVerdict{true, VerdictReason::SymmetricalPattern, std::nullopt};
  const auto values = p.values();
  if (std::find(values.begin(), values.end(), ca.write()) == values.end()) {
    return IdempotenceVerdict{true, VerdictReason::AvoidingWrite, std::nullopt};
  }
  return quasi_constant_trichotomy(ca);
}

IdempotenceVerdict classify(const PatternCA& ca, const ClassifyOptions& options) {
  auto verdict = theorem_verdict(ca);
  if (verdict) {
    if (options.crosscheck &&
        is_idempotent_by_composition(ca.rule(), options.limits) != verdict->idempotent) {
      throw std::logic_error("classifier disagrees with the composition check for " + ca.label() +
                             " (" + std::string(to_string(verdict->reason)) + ")");
    }
  } else {
    verdict = IdempotenceVerdict{is_idempotent_by_composition(ca.rule(), options.limits),
                                 VerdictReason::CompositionCheck, std::nullopt};
  }
  if (!verdict->idempotent && options.attach_witness) {
    verdict->witness = witness_search(ca, options.limits);
    if (!verdict->witness) {
      throw std::logic_error("no witness found for non-idempotent " + ca.label());
    }
  }
  return *verdict;
}

bool fix_equals_subshift_check(const PatternCA& ca, const Group& carrier, const SizeLimits& limits) {
  return fix_set(ca.rule(), carrier, limits) == avoiding_set(ca.pattern(), carrier, limits);
}

bool fix_equals_subshift_check(const PatternCA& ca, std::span<const Symbol> cyclic_word) {
  const bool fixed = std::ranges::equal(apply_periodic(ca.rule(), cyclic_word), cyclic_word);
  return fixed == !occurs_cyclically(ca.pattern(), cyclic_word);
}

bool fix_equals_subshift_check(const PatternCA& ca, std::size_t period, const SizeLimits& limits) {
  const int k = ca.pattern().alphabet().size();
  const std::uint64_t total = checked_power(k, period, limits.max_configurations, "periodic fix check");
  std::vector<Symbol> word(period);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, k, word);
    if (!fix_equals_subshift_check(ca, word)) return false;
  }
  return true;
}

DomainTable classify_domain(const GroupSubset& domain, Alphabet alphabet, const ClassifyOptions& options,
                            unsigned threads) {
  struct Entry {
    std::string label;
    PatternCA ca;
  };
  std::vector<Entry> entries;
  for_each_pattern(domain, alphabet, [&](const Pattern& p) {
    if (alphabet.size() == 2) {
      auto ca = PatternCA::with_default_write(p);
      entries.push_back({p.str(), std::move(ca)});
      return;
    }
    for (int a = 0; a < alphabet.size(); ++a) {
      if (a == p.at_identity()) continue;
      PatternCA ca(p, static_cast<Symbol>(a));
      entries.push_back({ca.label(), std::move(ca)});
    }
  }, options.limits);

  ClassifyOptions local = options;
  local.attach_witness = false;
  std::vector<char> idempotent(entries.size(), 0);
  parallel_for(entries.size(), threads,
               [&](std::size_t i) { idempotent[i] = classify(entries[i].ca, local).idempotent ? 1 : 0; });

  DomainTable table{domain, alphabet.size(), {}, {}};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    (idempotent[i] ? table.idempotent : table.non_idempotent).push_back(entries[i].label);
  }
  return table;
}

std::string to_tsv(const DomainTable& table) {
  std::string out = "idempotent\tnon_idempotent\n";
  const std::size_t rows = std::max(table.idempotent.size(), table.non_idempotent.size());
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < table.idempotent.size()) out += table.idempotent[i];
    out += '\t';
    if (i < table.non_idempotent.size()) out += table.non_idempotent[i];
    out += '\n';
  }
  out += "count=" + std::to_string(table.idempotent.size()) + "\tcount=" +
         std::to_string(table.non_idempotent.size()) + "\n";
  return out;
}

}  // namespace idca
