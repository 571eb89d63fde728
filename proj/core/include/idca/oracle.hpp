#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "idca/rule.hpp"

namespace idca {

/// A configuration x : G -> A over a finite carrier, one symbol per element
/// in the carrier's index order.
class GlobalConfiguration {
 public:
  GlobalConfiguration(Group carrier, std::vector<Symbol> values);

  static GlobalConfiguration constant(const Group& carrier, Symbol value);
  /// The index-th configuration in mixed-radix order (element 0 most significant).
  static GlobalConfiguration from_index(const Group& carrier, Alphabet alphabet,
                                        std::uint64_t index);

  const Group& carrier() const { return carrier_; }
  std::span<const Symbol> values() const { return values_; }
  Symbol at(const Element& g) const { return values_[carrier_.index(g)]; }
  std::string str() const;

  friend bool operator==(const GlobalConfiguration& a, const GlobalConfiguration& b) {
    return a.values_ == b.values_ && a.carrier_ == b.carrier_;
  }
  friend auto operator<=>(const GlobalConfiguration& a, const GlobalConfiguration& b) {
    return a.values_ <=> b.values_;
  }

 private:
  Group carrier_;
  std::vector<Symbol> values_;
};

/// The shift g·x, (g·x)(h) = x(g^{-1}h).
GlobalConfiguration translate(const Element& g, const GlobalConfiguration& x);

/// tau(x)(g) = mu((g^{-1}·x)|_S), read as x(gs) for s in S.
GlobalConfiguration global_apply(const LocalRule& rule, const GlobalConfiguration& x);

/// True when p occurs at no translate of x.
bool avoids(const Pattern& p, const GlobalConfiguration& x);

/// tau∘tau == tau checked on all k^|G| configurations.
bool global_idempotent(const LocalRule& rule, const Group& carrier,
                       const SizeLimits& limits = {});

/// All fixed points of tau, in index order.
std::vector<GlobalConfiguration> fix_set(const LocalRule& rule, const Group& carrier,
                                         const SizeLimits& limits = {});

/// All configurations avoiding p, in index order.
std::vector<GlobalConfiguration> avoiding_set(const Pattern& p, const Group& carrier,
                                              const SizeLimits& limits = {});

}  // namespace idca
