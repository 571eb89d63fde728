#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idca/rule.hpp"

namespace idca {

struct KernelImageCheck {
  bool image_inclusion = false;   // X_p ⊆ X_q
  bool kernel_inclusion = false;  // ker(tau_q) ⊆ ker(tau_p)
};

enum class OrderMethod { CompositionBothWays };

/// tau <= sigma iff tau sigma = sigma tau = tau.
struct OrderVerdict {
  bool leq = false;
  OrderMethod via = OrderMethod::CompositionBothWays;
  std::optional<KernelImageCheck> crosscheck;
};

/// Natural order on idempotent CA. Throws DomainError when either rule is
/// not idempotent.
OrderVerdict natural_leq(const LocalRule& tau, const LocalRule& sigma, const SizeLimits& limits = {});
OrderVerdict natural_leq(const PatternCA& tau, const PatternCA& sigma, const SizeLimits& limits = {});

/// sigma_b <= tau, read off the pattern as p != b^S. Also evaluates
/// tau(b^G) = b^G directly and compares against the constant CA through the
/// natural order; throws std::logic_error if the three routes disagree.
bool constant_below(Symbol b, const PatternCA& tau, const SizeLimits& limits = {});

/// tau = tau sigma, equivalently ker(sigma) ⊆ ker(tau).
bool kernel_leq(const PatternCA& tau, const PatternCA& sigma, const SizeLimits& limits = {});

/// natural_leq together with image inclusion (sft_subset) and kernel
/// inclusion, Z only. Throws std::logic_error when leq differs from
/// image ∧ kernel.
OrderVerdict order_char_crosscheck(const PatternCA& tau, const PatternCA& sigma,
                                   const SizeLimits& limits = {});

/// For q(e) != a: tau_p^a <= tau_q^b must imply a = b and p <= q. Returns
/// whether the implication held. Throws DomainError when q(e) == a.
bool comparability_necessary_conditions(const PatternCA& tau, const PatternCA& sigma,
                                        const SizeLimits& limits = {});

/// For tau < sigma over Z: word counts of X_p never exceed those of X_q for
/// n = 1..max_length, with strict inequality somewhere. Throws DomainError
/// unless tau <= sigma and tau != sigma.
bool strictness_check(const PatternCA& tau, const PatternCA& sigma, std::size_t max_length,
                      const SizeLimits& limits = {});

/// Constant-0 patterns on S_i = {e, s, ..., s^i}, write 1, i = 1..n; checked
/// idempotent and increasing. s must have infinite order.
std::vector<PatternCA> chain_family(const Group& group, const Element& s, std::size_t n,
                                    const SizeLimits& limits = {});

/// Symmetric patterns on S_i = {e} ∪ {g_j, g_j^{-1} : j <= i}, valued 1
/// exactly at g_i and g_i^{-1}, write 1; checked idempotent and pairwise
/// incomparable. Uses the first n elements of gs.
std::vector<PatternCA> antichain_family(const Group& group, const std::vector<Element>& gs,
                                        std::size_t n, const SizeLimits& limits = {});

struct PosetNode {
  std::string label;
  LocalRule rule;
};

/// Hasse diagram of the natural order. leq[i][j] is 1 when node i <= node j,
/// 0 when not, -1 when the comparison hit the size cap (listed in
/// `failures`). Nodes defining the same CA are listed in `equivalent` and
/// joined by no cover edge.
struct Poset {
  std::vector<PosetNode> nodes;
  std::vector<std::vector<int>> leq;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // lower -> upper
  std::vector<std::pair<std::size_t, std::size_t>> equivalent;
  std::vector<std::pair<std::size_t, std::size_t>> failures;

  std::string to_dot() const;
};

Poset hasse(std::vector<PosetNode> nodes, const SizeLimits& limits = {}, unsigned threads = 1);
Poset hasse(const std::vector<PatternCA>& cas, const SizeLimits& limits = {}, unsigned threads = 1);

}  // namespace idca
