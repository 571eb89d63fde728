#include "idca/order.hpp"

#include <set>
#include <stdexcept>

#include "idca/idempotency.hpp"
#include "idca/shiftspace.hpp"

namespace idca {

namespace {

bool leq_unchecked(const LocalRule& tau, const LocalRule& sigma, const SizeLimits& limits) {
  return rules_equal(star(tau, sigma, limits), tau, limits) &&
         rules_equal(star(sigma, tau, limits), tau, limits);
}

void require_idempotent(const LocalRule& rule, const SizeLimits& limits, const char* op) {
  if (!is_idempotent_by_composition(rule, limits)) {
    throw DomainError(std::string(op) + ": the natural order is defined on idempotents only");
  }
}

}  // namespace

OrderVerdict natural_leq(const LocalRule& tau, const LocalRule& sigma, const SizeLimits& limits) {
  require_idempotent(tau, limits, "natural_leq");
  require_idempotent(sigma, limits, "natural_leq");
  return OrderVerdict{leq_unchecked(tau, sigma, limits), OrderMethod::CompositionBothWays, std::nullopt};
}

OrderVerdict natural_leq(const PatternCA& tau, const PatternCA& sigma, const SizeLimits& limits) {
  return natural_leq(tau.rule(), sigma.rule(), limits);
}

bool constant_below(Symbol b, const PatternCA& tau, const SizeLimits& limits) {
  const Pattern& p = tau.pattern();
  if (!p.alphabet().contains(b)) throw DomainError("constant_below: symbol outside the alphabet");
  const bool by_pattern = !(p == Pattern::constant(p.domain(), b, p.alphabet()));
  const std::vector<Symbol> constant_input(p.size(), b);
  const bool fixes_constant = evaluate(tau.rule(), constant_input) == b;
  const bool by_order =
      natural_leq(LocalRule::constant(p.group(), p.alphabet(), b), tau.rule(), limits).leq;
  if (by_pattern != fixes_constant || by_pattern != by_order) {
    throw std::logic_error("constant_below: routes disagree for " + tau.label());
  }
  return by_pattern;
}

bool kernel_leq(const PatternCA& tau, const PatternCA& sigma, const SizeLimits& limits) {
  require_idempotent(tau.rule(), limits, "kernel_leq");
  require_idempotent(sigma.rule(), limits, "kernel_leq");
  return rules_equal(star(tau.rule(), sigma.rule(), limits), tau.rule(), limits);
}

OrderVerdict order_char_crosscheck(const PatternCA& tau, const PatternCA& sigma, const SizeLimits& limits) {
  if (!(tau.group() == Group::integers()) || !(sigma.group() == Group::integers())) {
    throw DomainError("order_char_crosscheck: unsupported carrier, only Z is handled");
  }
  OrderVerdict verdict = natural_leq(tau, sigma, limits);
  KernelImageCheck check;
  check.image_inclusion = sft_subset(tau.pattern(), sigma.pattern(), limits);
  check.kernel_inclusion = kernel_leq(tau, sigma, limits);
  if (verdict.leq != (check.image_inclusion && check.kernel_inclusion)) {
    throw std::logic_error("image/kernel characterization contradicts the composition verdict for " +
                           tau.label() + " vs " + sigma.label());
  }
  verdict.crosscheck = check;
  return verdict;
}

bool comparability_necessary_conditions(const PatternCA& tau, const PatternCA& sigma,
                                        const SizeLimits& limits) {
  if (sigma.pattern().at_identity() == tau.write()) {
    throw DomainError("comparability_necessary_conditions: requires q(e) != a");
  }
  if (!natural_leq(tau, sigma, limits).leq) return true;
  return tau.write() == sigma.write() && pattern_leq(tau.pattern(), sigma.pattern());
}

bool strictness_check(const PatternCA& tau, const PatternCA& sigma, std::size_t max_length,
                      const SizeLimits& limits) {
  if (!natural_leq(tau, sigma, limits).leq || rules_equal(tau.rule(), sigma.rule(), limits)) {
    throw DomainError("strictness_check: requires tau < sigma");
  }
  bool strict = false;
  const DeBruijnGraph gp = build_graph(tau.pattern(), limits);
  const DeBruijnGraph gq = build_graph(sigma.pattern(), limits);
  for (std::size_t n = 1; n <= max_length; ++n) {
    const auto cp = count_words(gp, n);
    const auto cq = count_words(gq, n);
    if (cp > cq) return false;
    strict = strict || cp < cq;
  }
  return strict;
}

std::vector<PatternCA> chain_family(const Group& group, const Element& s, std::size_t n,
                                    const SizeLimits& limits) {
  if (group.is_finite()) throw DomainError("chain_family: needs an element of infinite order (Z^d)");
  if (!group.contains(s) || s == group.identity()) {
    throw DomainError("chain_family: s must be a nontrivial element of the group");
  }
  const Alphabet binary(2);
  std::vector<PatternCA> chain;
  std::vector<Element> members{group.identity()};
  for (std::size_t i = 1; i <= n; ++i) {
    members.push_back(group.power(s, static_cast<std::int64_t>(i)));
    PatternCA ca(Pattern::constant(GroupSubset(group, members), 0, binary), 1);
    if (!is_idempotent_by_composition(ca.rule(), limits)) {
      throw std::logic_error("chain_family: member " + ca.label() + " is not idempotent");
    }
    if (!chain.empty() && !leq_unchecked(chain.back().rule(), ca.rule(), limits)) {
      throw std::logic_error("chain_family: consecutive members are not ordered");
    }
    chain.push_back(std::move(ca));
  }
  return chain;
}

std::vector<PatternCA> antichain_family(const Group& group, const std::vector<Element>& gs, std::size_t n,
                                        const SizeLimits& limits) {
  if (n > gs.size()) throw DomainError("antichain_family: fewer elements than requested members");
  std::set<Element> used;
  for (std::size_t i = 0; i < n; ++i) {
    if (!group.contains(gs[i]) || gs[i] == group.identity()) {
      throw DomainError("antichain_family: elements must be nontrivial group elements");
    }
    if (used.contains(gs[i])) {
      throw DomainError("antichain_family: g_i repeats an earlier g_j or its inverse");
    }
    used.insert(gs[i]);
    used.insert(group.inverse(gs[i]));
  }

  const Alphabet binary(2);
  std::vector<PatternCA> family;
  std::vector<Element> members{group.identity()};
  for (std::size_t i = 0; i < n; ++i) {
    members.push_back(gs[i]);
    members.push_back(group.inverse(gs[i]));
    GroupSubset domain = GroupSubset::canonical(group, members);
    std::vector<Symbol> values(domain.size(), 0);
    values[domain.position(gs[i])] = 1;
    values[domain.position(group.inverse(gs[i]))] = 1;
    PatternCA ca(Pattern(std::move(domain), std::move(values), binary), 1);
    if (!is_idempotent_by_composition(ca.rule(), limits)) {
      throw std::logic_error("antichain_family: member " + ca.label() + " is not idempotent");
    }
    for (const auto& earlier : family) {
      if (leq_unchecked(earlier.rule(), ca.rule(), limits) || leq_unchecked(ca.rule(), earlier.rule(), limits)) {
        throw std::logic_error("antichain_family: " + earlier.label() + " and " + ca.label() +
                               " are comparable");
      }
    }
    family.push_back(std::move(ca));
  }
  return family;
}

Poset hasse(std::vector<PosetNode> nodes, const SizeLimits& limits, unsigned threads) {
  for (const auto& node : nodes) require_idempotent(node.rule, limits, "hasse");
  const std::size_t n = nodes.size();
  Poset poset;
  poset.leq.assign(n, std::vector<int>(n, 0));
  parallel_for(n * n, threads, [&](std::size_t pair) {
    const std::size_t i = pair / n;
    const std::size_t j = pair % n;
    if (i == j) {
      poset.leq[i][j] = 1;
      return;
    }
    try {
      poset.leq[i][j] = leq_unchecked(nodes[i].rule, nodes[j].rule, limits) ? 1 : 0;
    } catch (const SizeCapError&) {
      poset.leq[i][j] = -1;
    }
  });

  auto strictly_below = [&](std::size_t i, std::size_t j) {
    return i != j && poset.leq[i][j] == 1 && poset.leq[j][i] == 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.leq[i][j] == -1) poset.failures.emplace_back(i, j);
      if (i < j && poset.leq[i][j] == 1 && poset.leq[j][i] == 1) poset.equivalent.emplace_back(i, j);
      if (!strictly_below(i, j)) continue;
      bool covered = true;
      for (std::size_t w = 0; w < n && covered; ++w) {
        if (strictly_below(i, w) && strictly_below(w, j)) covered = false;
      }
      if (covered) poset.covers.emplace_back(i, j);
    }
  }
  poset.nodes = std::move(nodes);
  return poset;
}

Poset hasse(const std::vector<PatternCA>& cas, const SizeLimits& limits, unsigned threads) {
  std::vector<PosetNode> nodes;
  nodes.reserve(cas.size());
  for (const auto& ca : cas) nodes.push_back({ca.label(), ca.rule()});
  return hasse(std::move(nodes), limits, threads);
}

std::string Poset::to_dot() const {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + nodes[i].label + "\"];\n";
  }
  for (auto [lo, hi] : covers) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  for (auto [a, b] : equivalent) {
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [dir=none, style=dashed];\n";
  }
  for (auto [a, b] : failures) {
    out += "  // size cap: n" + std::to_string(a) + " <= n" + std::to_string(b) + " undecided\n";
  }
  out += "}\n";
  return out;
}

}  // namespace idca
