#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idca/pattern.hpp"

namespace idca {

/// Mixed-radix index of a fragment: sum_j z_j * k^(n-1-j). The leftmost
/// (first displayed) coordinate is the most significant, so for k = 2 and
/// S = {-1,0,1} the index of z is the 3-bit number z(-1)z(0)z(1).
std::uint64_t encode(std::span<const Symbol> digits, int k);
void decode(std::uint64_t index, int k, std::span<Symbol> digits);

/// A total local rule mu : A^S -> A stored as a dense table indexed by
/// `encode` over the display order of the memory set.
class LocalRule {
 public:
  LocalRule(GroupSubset memory, Alphabet alphabet, std::vector<Symbol> table);

  /// Projection onto the identity, memory {e}.
  static LocalRule identity(const Group& group, Alphabet alphabet);
  /// The constant rule, with empty memory set.
  static LocalRule constant(const Group& group, Alphabet alphabet, Symbol value);
  /// Elementary rule (Z, {-1,0,1}, k = 2) with the given Wolfram number.
  static LocalRule elementary(int wolfram_number);
  static LocalRule from_function(GroupSubset memory, Alphabet alphabet,
                                 const std::function<Symbol(std::span<const Symbol>)>& fn,
                                 const SizeLimits& limits = {});
  /// Table listed from the highest input index down to 0 (`01101110` is
  /// rule 110 on {-1,0,1}).
  static LocalRule from_table_string(GroupSubset memory, Alphabet alphabet,
                                     std::string_view text);

  const GroupSubset& memory() const { return memory_; }
  const Group& group() const { return memory_.group(); }
  Alphabet alphabet() const { return alphabet_; }
  std::span<const Symbol> table() const { return table_; }
  std::uint64_t size() const { return table_.size(); }
  Symbol at(std::uint64_t index) const { return table_[index]; }

  /// Inverse of from_table_string.
  std::string table_string() const;

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  GroupSubset memory_;
  Alphabet alphabet_;
  std::vector<Symbol> table_;
};

enum class IdentityPolicy { Reject, Allow };

/// mu_p^a: writes `write` where it reads p, copies z(e) elsewhere. With
/// write == p(e) the rule is the identity; that is rejected unless allowed.
LocalRule rule_from_pattern(const Pattern& p, Symbol write,
                            IdentityPolicy policy = IdentityPolicy::Reject);

/// Evaluates the rule on a fragment whose domain contains the memory set.
Symbol evaluate(const LocalRule& rule, const Fragment& z);
/// Evaluates on values given in the memory's display order.
Symbol evaluate(const LocalRule& rule, std::span<const Symbol> values);

/// mu ⋆ nu on TS: the local rule of the composite CA (mu after nu).
LocalRule star(const LocalRule& mu, const LocalRule& nu, const SizeLimits& limits = {});

/// The same CA presented on a larger memory set W ⊇ S.
LocalRule extend(const LocalRule& rule, const GroupSubset& window,
                 const SizeLimits& limits = {});

/// Equality of the induced CA, compared on the union of the memory sets.
bool rules_equal(const LocalRule& a, const LocalRule& b, const SizeLimits& limits = {});

struct ReducedRule {
  GroupSubset memory;
  LocalRule rule;
};

/// Restricts the rule to its essential coordinates, keeping display order.
/// Constant rules reduce to the empty memory set.
ReducedRule minimal_memory_set(const LocalRule& rule);

/// Requires group Z, memory {-1,0,1} in that order, k = 2.
int wolfram_number(const LocalRule& rule);

/// (p, a) when exactly one input z has rule(z) != z(e); none otherwise.
/// Requires e in the memory set.
std::optional<std::pair<Pattern, Symbol>> as_pattern_rule(const LocalRule& rule);

/// The CA tau_p^a for a != p(e).
class PatternCA {
 public:
  PatternCA(Pattern pattern, Symbol write);

  /// Write symbol p(e)+1 mod k, the complement of p(e) when k = 2.
  static PatternCA with_default_write(Pattern pattern);

  const Pattern& pattern() const { return pattern_; }
  Symbol write() const { return write_; }
  const LocalRule& rule() const { return rule_; }
  const GroupSubset& domain() const { return pattern_.domain(); }
  const Group& group() const { return pattern_.group(); }

  /// `00010>1`: pattern string and write symbol.
  std::string label() const;

  friend bool operator==(const PatternCA& a, const PatternCA& b) {
    return a.pattern_ == b.pattern_ && a.write_ == b.write_;
  }

 private:
  Pattern pattern_;
  Symbol write_;
  LocalRule rule_;
};

}  // namespace idca
