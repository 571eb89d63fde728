// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are wall-clock seconds on a single thread.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bridge.hpp"
#include "idca/idempotency.hpp"
#include "idca/oracle.hpp"
#include "idca/order.hpp"
#include "idca/shiftspace.hpp"

using namespace idca;
using testing_support::z_ca;
using testing_support::z_domain;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0 means no runtime limit
  std::function<Outcome()> body;
};

const std::vector<std::pair<std::vector<int>, std::string>> kReferenceRows{
    {{-1, 0, 1}, "z_m1_0_1.tsv"},
    {{0, 1, 2}, "z_0_1_2.tsv"},
    {{-1, 0, 1, 2}, "z_m1_0_1_2.tsv"},
    {{0, 1, 2, 3}, "z_0_1_2_3.tsv"},
    {{-2, -1, 0, 1, 2}, "z_m2_m1_0_1_2.tsv"},
    {{-1, 0, 1, 2, 3}, "z_m1_0_1_2_3.tsv"}};

std::vector<PatternCA> reference_patterns() {
  std::vector<PatternCA> out;
  for (const auto& [d, file] : kReferenceRows)
    for (const auto& p : enumerate_patterns(z_domain(d), Alphabet(2))) out.push_back(PatternCA::with_default_write(p));
  return out;
}

std::vector<std::vector<int>> property_domains() { return testing_support::domains_around_zero(-3, 3, 5); }

ClassifyOptions no_crosscheck() {
  ClassifyOptions o;
  o.crosscheck = false;
  o.attach_witness = false;
  return o;
}

Outcome reference_tables() {
  Outcome out;
  for (const auto& [d, file] : kReferenceRows) {
    const DomainTable t = classify_domain(z_domain(d), Alphabet(2), no_crosscheck());
    out.require(to_tsv(t) == read_text_file(testing_support::golden(file)), "mismatch for " + file);
  }
  return out;
}

Outcome seven_cells() {
  Outcome out;
  const DomainTable t = classify_domain(GroupSubset::integer_range(-3, 3), Alphabet(2), no_crosscheck());
  out.detail = std::to_string(t.idempotent.size()) + "/" + std::to_string(t.non_idempotent.size());
  out.require(t.idempotent.size() == 100 && t.non_idempotent.size() == 28, "counts " + out.detail);
  return out;
}

Outcome wolfram_checks() {
  Outcome out;
  const auto mu = [](const char* v, int a) { return rule_from_pattern(testing_support::z_pattern({-1, 0, 1}, v), a); };
  out.require(wolfram_number(mu("010", 0)) == 200, "mu_010");
  out.require(wolfram_number(mu("100", 1)) == 220, "mu_100");
  out.require(wolfram_number(LocalRule::from_table_string(z_domain({-1, 0, 1}), Alphabet(2), "01101110")) == 110,
              "example table");
  out.require(minimal_memory_set(LocalRule::elementary(102)).memory.str() == "0,1", "rule 102 memory");
  return out;
}

Outcome pattern_detector() {
  Outcome out;
  for (int w : {4, 223}) {
    const LocalRule r = LocalRule::elementary(w);
    out.require(is_idempotent_by_composition(r), "rule " + std::to_string(w) + " not idempotent");
    out.require(!as_pattern_rule(r).has_value(), "rule " + std::to_string(w) + " detected as pattern CA");
  }
  for (int w : {200, 220}) {
    const LocalRule r = LocalRule::elementary(w);
    const auto back = as_pattern_rule(r);
    out.require(back.has_value() && wolfram_number(rule_from_pattern(back->first, back->second)) == w,
                "rule " + std::to_string(w) + " round trip");
  }
  return out;
}

Outcome structural_results() {
  Outcome out;
  std::size_t counterexamples = 0, constant = 0, symmetrical = 0, quasi = 0, ternary = 0;
  for (const auto& d : property_domains()) {
    for (const auto& p : enumerate_patterns(z_domain(d), Alphabet(2))) {
      const PatternCA ca = PatternCA::with_default_write(p);
      const bool truth = is_idempotent_by_composition(ca.rule());
      if (is_constant(p)) {
        ++constant;
        if (!truth) ++counterexamples;
      }
      if (is_symmetrical(p)) {
        ++symmetrical;
        if (!truth) ++counterexamples;
      }
      if (const auto v = quasi_constant_trichotomy(ca)) {
        ++quasi;
        if (v->idempotent != truth) ++counterexamples;
      }
    }
    // Three letters with a write symbol missing from the pattern.
    for (const auto& p : enumerate_patterns(z_domain(d), Alphabet(3))) {
      for (Symbol a = 0; a < 3; ++a) {
        const auto values = p.values();
        if (std::find(values.begin(), values.end(), a) != values.end()) continue;
        ++ternary;
        if (!is_idempotent_by_composition(PatternCA(p, a).rule())) ++counterexamples;
      }
    }
  }
  out.detail = std::to_string(counterexamples) + " counterexamples over " + std::to_string(constant) + " constant, " +
               std::to_string(symmetrical) + " symmetrical, " + std::to_string(quasi) + " quasi-constant, " +
               std::to_string(ternary) + " three-letter avoiding";
  out.require(counterexamples == 0 && constant > 0 && symmetrical > 0 && quasi > 0 && ternary > 0, out.detail);
  return out;
}

Outcome decider_agreement() {
  Outcome out;
  std::size_t total = 0, witnesses = 0;
  ClassifyOptions opts;
  opts.crosscheck = true;
  for (const auto& d : property_domains()) {
    for (const auto& p : enumerate_patterns(z_domain(d), Alphabet(2))) {
      const PatternCA ca = PatternCA::with_default_write(p);
      const bool by_composition = is_idempotent_by_composition(ca.rule());
      const auto witness = witness_search(ca);
      const auto verdict = classify(ca, opts);
      const std::string who = ca.domain().str() + ":" + ca.label();
      out.require(verdict.idempotent == by_composition, "classifier disagrees on " + who);
      out.require(witness.has_value() != by_composition, "witness search disagrees on " + who);
      if (witness) {
        ++witnesses;
        out.require(check_witness(ca, *witness).all(), "witness fails re-validation on " + who);
      }
      if (verdict.witness) out.require(check_witness(ca, *verdict.witness).all(), "classifier witness on " + who);
      ++total;
    }
  }
  if (out.ok) out.detail = std::to_string(total) + " patterns, " + std::to_string(witnesses) + " witnesses";
  return out;
}

Outcome finite_groups() {
  Outcome out;
  std::size_t total = 0;
  const std::vector<std::pair<std::string, oracle::Table>> carriers{
      {"z2", oracle::cyclic(2)}, {"z3", oracle::cyclic(3)},  {"z4", oracle::cyclic(4)},
      {"z5", oracle::cyclic(5)}, {"z2xz2", oracle::klein()}, {"s3", oracle::symmetric3()}};
  for (const auto& [name, table] : carriers) {
    const Group g = parse_group("cayley:" + testing_support::fixture("groups/" + name + ".json"));
    const int n = table.order();
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> s{0};
      std::vector<Element> members{g.elements()[0]};
      for (int i = 1; i < n; ++i) {
        if (!(mask & (1 << (i - 1)))) continue;
        s.push_back(i);
        members.push_back(g.elements()[static_cast<std::size_t>(i)]);
      }
      for (const auto& p : enumerate_patterns(GroupSubset(g, members), Alphabet(2))) {
        const PatternCA ca = PatternCA::with_default_write(p);
        const bool global = global_idempotent(ca.rule(), g);
        const std::vector<int> values(p.values().begin(), p.values().end());
        const std::string who = name + " " + ca.domain().str() + ":" + ca.label();
        out.require(global == is_idempotent_by_composition(ca.rule()), "local criterion differs on " + who);
        out.require(global == oracle::global_idempotent(table, s, values, ca.write(), 2), "table oracle on " + who);
        out.require(fix_set(ca.rule(), g) == avoiding_set(p, g), "fixed points differ on " + who);
        ++total;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(total) + " patterns over 6 carriers";
  return out;
}

Outcome order_suite() {
  Outcome out;
  const auto chain = chain_family(Group::integers(), Element::scalar(1), 5);
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      out.require(natural_leq(chain[i], chain[j]).leq == (i <= j), "chain order at " + std::to_string(i) + "," +
                                                                        std::to_string(j));

  std::vector<Element> gs;
  for (int g = 1; g <= 5; ++g) gs.push_back(Element::scalar(g));
  const auto anti = antichain_family(Group::integers(), gs, 5);
  for (std::size_t i = 0; i < anti.size(); ++i)
    for (std::size_t j = 0; j < anti.size(); ++j)
      if (i != j) out.require(!natural_leq(anti[i], anti[j]).leq, "antichain members comparable");

  const auto example = order_char_crosscheck(z_ca({0, 1}, "00", 2, 1), z_ca({-1, 0, 1}, "000", 2, 1));
  const auto reverse = natural_leq(z_ca({-1, 0, 1}, "000", 2, 1), z_ca({0, 1}, "00", 2, 1));
  out.require(!example.leq && !reverse.leq, "example pair comparable");
  out.require(example.crosscheck && example.crosscheck->image_inclusion && !example.crosscheck->kernel_inclusion,
              "example pair inclusions");

  std::vector<PatternCA> idempotents;
  for (auto& ca : reference_patterns())
    if (is_idempotent_by_composition(ca.rule())) idempotents.push_back(std::move(ca));
  std::size_t pairs = 0, hypotheses = 0;
  for (const auto& t : idempotents) {
    for (const auto& s : idempotents) {
      try {
        const auto v = order_char_crosscheck(t, s);
        out.require(v.crosscheck && v.leq == (v.crosscheck->image_inclusion && v.crosscheck->kernel_inclusion),
                    "characterization contradicts composition");
      } catch (const std::logic_error& e) {
        out.require(false, e.what());
      }
      ++pairs;
      if (s.pattern().at_identity() == t.write()) continue;
      ++hypotheses;
      out.require(comparability_necessary_conditions(t, s), "necessary conditions fail for " + t.label() + " <= " +
                                                                s.label());
    }
  }
  if (out.ok) {
    out.detail = std::to_string(pairs) + " pairs, " + std::to_string(hypotheses) + " meeting the hypothesis";
  }
  return out;
}

Outcome golden_mean() {
  Outcome out;
  const Pattern p = testing_support::z_pattern({0, 1}, "11");
  const oracle::ZPattern plain = oracle::z_pattern({0, 1}, "11");
  std::uint64_t a = 1, b = 2;  // F(2), F(3)
  for (std::size_t n = 1; n <= 20; ++n) {
    out.require(count_words(p, n) == b, "count at n=" + std::to_string(n));
    if (n <= 12) out.require(count_words(p, n) == oracle::count_words(plain, static_cast<int>(n), 4), "oracle count");
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  const double expected = std::log2((1.0 + std::sqrt(5.0)) / 2.0);
  const double bits = entropy(p).bits;
  char buf[96];
  std::snprintf(buf, sizeof buf, "entropy %.15f, error %.2e", bits, std::abs(bits - expected));
  out.detail = buf;
  out.require(std::abs(bits - expected) < 1e-9, out.detail);
  return out;
}

Outcome periodic_points() {
  Outcome out;
  std::size_t idempotent = 0, violated = 0;
  for (const auto& ca : reference_patterns()) {
    const bool truth = is_idempotent_by_composition(ca.rule());
    const std::int64_t ss_span = 2 * span(ca.domain()) - 1;
    const std::size_t n = static_cast<std::size_t>(2 * ss_span);
    std::vector<Symbol> w(n);
    bool found = false;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n) && !found; ++idx) {
      decode(idx, 2, w);
      const auto once = apply_periodic(ca.rule(), w);
      found = apply_periodic(ca.rule(), once) != once;
    }
    if (truth) {
      ++idempotent;
      out.require(!found, "idempotent pattern fails on a cyclic word: " + ca.domain().str() + ":" + ca.label());
    } else {
      violated += found ? 1 : 0;
      out.require(found, "no violating cyclic word for " + ca.domain().str() + ":" + ca.label());
    }
  }
  if (out.ok) {
    out.detail = std::to_string(idempotent) + " idempotent clean, " + std::to_string(violated) + " violations found";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reference tables reproduced byte for byte", 1.0, reference_tables},
      {2, "seven-cell window counts 100/28", 5.0, seven_cells},
      {3, "Wolfram numbers and minimal memory", 0, wolfram_checks},
      {4, "pattern-form detector", 0, pattern_detector},
      {5, "structural results have no counterexample", 30.0, structural_results},
      {6, "three deciders agree, witnesses re-validate", 0, decider_agreement},
      {7, "finite-group brute force", 60.0, finite_groups},
      {8, "natural order suite", 60.0, order_suite},
      {9, "golden mean counts and entropy (tol 1e-9)", 1.0, golden_mean},
      {10, "periodic-point consistency", 120.0, periodic_points},
  };
  std::printf("acceptance seed=%llu\n", static_cast<unsigned long long>(oracle::test_seed()));
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::string timing = std::to_string(seconds).substr(0, 6) + "s";
    if (c.limit_seconds > 0) timing += " < " + std::to_string(static_cast<int>(c.limit_seconds)) + "s";
    if (!in_time) timing += " (too slow)";
    std::printf("%s %2d %s [%s]%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), timing.c_str(),
                out.detail.empty() ? "" : " ", out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
