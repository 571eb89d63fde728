#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idca/rule.hpp"

namespace idca {

/// Which result decided a verdict. The classifier tries them in the listed
/// order (singleton first) and reports the first that applies; the
/// composition check is the fallback when no theorem covers the pattern.
enum class VerdictReason {
  CompositionCheck,
  ConstantPattern,
  SymmetricalPattern,
  AvoidingWrite,
  QuasiConstantCond1,
  QuasiConstantCond2,
  QuasiConstantCond3,
  SingletonDomain,
};

std::string_view to_string(VerdictReason reason);
VerdictReason parse_reason(std::string_view text);

/// A fragment x on SS with mu((s^{-1}·x)|_S) = p(s) for every s in S. Its
/// existence is equivalent to non-idempotency: it forces p into the image.
struct Witness {
  Fragment fragment;
};

struct IdempotenceVerdict {
  bool idempotent = false;
  VerdictReason reason = VerdictReason::CompositionCheck;
  std::optional<Witness> witness;  // present iff not idempotent
};

struct ClassifyOptions {
  /// Re-run the composition check whenever a theorem fires and throw
  /// std::logic_error on disagreement.
  bool crosscheck = kDebugBuild;
  /// Attach the lexicographically first witness to negative verdicts.
  bool attach_witness = true;
  SizeLimits limits{};
};

/// tau∘tau == tau, via rules_equal(star(r, r), r).
bool is_idempotent_by_composition(const LocalRule& rule, const SizeLimits& limits = {});

/// First witness on SS in lexicographic order of its display string, or
/// none. Depth-first over SS with pruning, so "first" is exact.
std::optional<Witness> witness_search(const PatternCA& ca, const SizeLimits& limits = {});

/// The three consequences every witness must satisfy, plus the defining
/// equation itself.
struct WitnessCheck {
  bool equation = false;             // mu((s^{-1}·x)|_S) = p(s) for all s
  bool restriction_differs = false;  // x|_S != p
  bool identity_agrees = false;      // x(e) = p(e)
  bool shifted_occurrence = false;   // (t^{-1}·x)|_S = p for some t != e
  bool all() const {
    return equation && restriction_differs && identity_agrees && shifted_occurrence;
  }
};

WitnessCheck check_witness(const PatternCA& ca, const Witness& witness);

/// Quasi-constant characterization with nonconstant term r: idempotent iff
/// a is not in p(S) (Cond1), or r != e and r^2 in S (Cond2), or r = e and
/// S = S^{-1} (Cond3). Negative verdicts carry the condition that was
/// checked for r. nullopt when p is not quasi-constant. Every candidate r is
/// evaluated and all must agree.
std::optional<IdempotenceVerdict> quasi_constant_trichotomy(const PatternCA& ca);

/// The shortcut verdict when a structural result covers the pattern, else
/// nullopt. Never attaches a witness.
std::optional<IdempotenceVerdict> theorem_verdict(const PatternCA& ca);

IdempotenceVerdict classify(const PatternCA& ca, const ClassifyOptions& options = {});

/// Fixed points of the induced map equal the p-avoiding configurations, on
/// every configuration of a finite carrier.
bool fix_equals_subshift_check(const PatternCA& ca, const Group& carrier,
                               const SizeLimits& limits = {});
/// Same check on every periodic point of Z with the given period.
bool fix_equals_subshift_check(const PatternCA& ca, std::size_t period,
                               const SizeLimits& limits = {});
/// Single periodic point: fixed iff p does not occur in it.
bool fix_equals_subshift_check(const PatternCA& ca, std::span<const Symbol> cyclic_word);

/// The idempotent / non-idempotent partition of every pattern CA on a
/// domain. Binary entries are pattern strings (write = complement of p(e));
/// for k > 2 every write a != p(e) is listed as `pattern>a`.
struct DomainTable {
  GroupSubset domain;
  int alphabet_size = 2;
  std::vector<std::string> idempotent;
  std::vector<std::string> non_idempotent;
};

DomainTable classify_domain(const GroupSubset& domain, Alphabet alphabet,
                            const ClassifyOptions& options = {}, unsigned threads = 1);

/// Two columns, header `idempotent\tnon_idempotent`, rows in lexicographic
/// order, footer `count=<n>\tcount=<m>`.
std::string to_tsv(const DomainTable& table);

}  // namespace idca
