#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idca/group.hpp"

namespace idca {

/// The alphabet {0, ..., k-1}, k >= 2.
class Alphabet {
 public:
  explicit Alphabet(int size);
  int size() const { return size_; }
  bool contains(int symbol) const { return symbol >= 0 && symbol < size_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

/// A pattern p : S -> A on a finite subset S containing the identity.
/// Values follow the display order of S. Equality is structural.
class Pattern {
 public:
  Pattern(GroupSubset domain, std::vector<Symbol> values, Alphabet alphabet);

  /// Digits for k <= 10 (`00010`), comma-separated symbols otherwise.
  static Pattern parse(GroupSubset domain, std::string_view text, Alphabet alphabet);
  /// b^S.
  static Pattern constant(GroupSubset domain, Symbol b, Alphabet alphabet);

  const GroupSubset& domain() const { return domain_; }
  const Group& group() const { return domain_.group(); }
  std::span<const Symbol> values() const { return values_; }
  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return values_.size(); }

  Symbol at(const Element& s) const { return values_[domain_.position(s)]; }
  Symbol at_identity() const { return values_[identity_index_]; }
  std::size_t identity_index() const { return identity_index_; }

  std::string str() const;
  Fragment as_fragment() const { return Fragment{domain_, values_}; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  GroupSubset domain_;
  std::vector<Symbol> values_;
  Alphabet alphabet_;
  std::size_t identity_index_ = 0;
};

bool is_constant(const Pattern& p);
bool is_symmetrical(const Pattern& p);

/// Every r such that p is nonconstant and p restricted to S \ {r} is constant.
/// Empty when p is constant or not quasi-constant. Has two entries only when
/// |S| = 2.
std::vector<Element> quasi_constant_candidates(const Pattern& p);

/// The nonconstant term of a quasi-constant pattern. For |S| = 2 both members
/// qualify; the non-identity one is returned.
std::optional<Element> quasi_constant_term(const Pattern& p);

/// p <= q iff dom(p) ⊆ dom(q) and p = q|dom(p).
bool pattern_leq(const Pattern& p, const Pattern& q);

/// Number of patterns on S, k^|S| (throws SizeCapError above the cap).
std::uint64_t pattern_count(const GroupSubset& domain, Alphabet alphabet,
                            const SizeLimits& limits = {});

/// Calls visit(p) for every pattern on S, in lexicographic order of the
/// display strings.
void for_each_pattern(const GroupSubset& domain, Alphabet alphabet,
                      const std::function<void(const Pattern&)>& visit,
                      const SizeLimits& limits = {});

std::vector<Pattern> enumerate_patterns(const GroupSubset& domain, Alphabet alphabet,
                                        const SizeLimits& limits = {});

}  // namespace idca
