#include <algorithm>

#include "doctest.h"

#include "bridge.hpp"
#include "idca/pattern.hpp"

using namespace idca;
using testing_support::z_domain;
using testing_support::z_pattern;

TEST_CASE("constant patterns") {
  CHECK(is_constant(z_pattern({-1, 0, 1}, "000")));
  CHECK_FALSE(is_constant(z_pattern({-1, 0, 1}, "010")));
  CHECK(is_constant(z_pattern({0}, "1")));
}

TEST_CASE("symmetrical patterns") {
  CHECK(is_symmetrical(z_pattern({-1, 0, 1}, "101")));
  CHECK_FALSE(is_symmetrical(z_pattern({-1, 0, 1}, "001")));
  for (const char* v : {"000", "010", "101", "111", "001"}) CHECK_FALSE(is_symmetrical(z_pattern({0, 1, 2}, v)));
}

TEST_CASE("quasi-constant nonconstant term") {
  CHECK(quasi_constant_term(z_pattern({-2, -1, 0, 1, 2}, "00010")) == Element::scalar(1));
  CHECK(quasi_constant_term(z_pattern({-2, -1, 0, 1, 2}, "00001")) == Element::scalar(2));
  CHECK_FALSE(quasi_constant_term(z_pattern({-2, -1, 0, 1, 2}, "00000")).has_value());
  CHECK_FALSE(quasi_constant_term(z_pattern({-2, -1, 0, 1, 2}, "00011")).has_value());
  CHECK(quasi_constant_term(z_pattern({-1, 0, 1}, "010")) == Element::scalar(0));

  // |S| = 2: both members qualify, the non-identity one is preferred.
  const Pattern two = z_pattern({0, 1}, "01");
  CHECK(quasi_constant_candidates(two).size() == 2);
  CHECK(quasi_constant_term(two) == Element::scalar(1));
}

TEST_CASE("pattern order") {
  const Pattern p = z_pattern({0, 1}, "00");
  const Pattern q = z_pattern({0, 1, 2}, "000");
  CHECK(pattern_leq(p, q));
  CHECK_FALSE(pattern_leq(q, p));
  CHECK_FALSE(pattern_leq(z_pattern({0, 1}, "01"), q));
  CHECK(pattern_leq(p, p));
  // Display order does not matter for inclusion and restriction.
  CHECK(pattern_leq(z_pattern({1, 0}, "10"), z_pattern({0, 1, 2}, "010")));
  CHECK_THROWS_AS(pattern_leq(p, z_pattern({0, 1}, "00", 3)), DomainError);
}

TEST_CASE("pattern order is a partial order on binary patterns over {-2..2}") {
  std::vector<Pattern> all;
  for (const auto& d : testing_support::domains_around_zero(-2, 2, 5)) {
    for (auto& p : enumerate_patterns(z_domain(d), Alphabet(2))) all.push_back(std::move(p));
  }
  REQUIRE(all.size() == 162);
  std::vector<std::vector<char>> leq(all.size(), std::vector<char>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) leq[i][j] = pattern_leq(all[i], all[j]);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(leq[i][i]);
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i != j && leq[i][j]) CHECK_FALSE(leq[j][i]);
      if (!leq[i][j]) continue;
      for (std::size_t l = 0; l < all.size(); ++l)
        if (leq[j][l]) CHECK(leq[i][l]);
    }
  }
}

TEST_CASE("enumeration order and counts") {
  const auto elementary = enumerate_patterns(z_domain({-1, 0, 1}), Alphabet(2));
  REQUIRE(elementary.size() == 8);
  CHECK(elementary.front().str() == "000");
  CHECK(elementary.back().str() == "111");
  CHECK(std::is_sorted(elementary.begin(), elementary.end(),
                       [](const Pattern& a, const Pattern& b) { return a.str() < b.str(); }));
  CHECK(enumerate_patterns(z_domain({-3, -2, -1, 0, 1, 2, 3}), Alphabet(2)).size() == 128);
  CHECK(enumerate_patterns(z_domain({0}), Alphabet(3)).size() == 3);
  CHECK(pattern_count(z_domain({-1, 0, 1}), Alphabet(5)) == 125);
}

TEST_CASE("symmetry survives alphabet permutations") {
  const std::vector<std::vector<Symbol>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& d : {std::vector<int>{-1, 0, 1}, std::vector<int>{-2, -1, 0, 1, 2}, std::vector<int>{-2, 0, 2}}) {
    for (const auto& p : enumerate_patterns(z_domain(d), Alphabet(3))) {
      for (const auto& perm : perms) {
        std::vector<Symbol> relabelled;
        for (Symbol v : p.values()) relabelled.push_back(perm[v]);
        CHECK(is_symmetrical(Pattern(p.domain(), relabelled, Alphabet(3))) == is_symmetrical(p));
      }
    }
  }
}

TEST_CASE("pattern construction errors") {
  CHECK_THROWS_AS(z_pattern({1, 2}, "00"), DomainError);
  CHECK_THROWS_AS(z_pattern({0, 1}, "02"), DomainError);
  CHECK_THROWS_AS(z_pattern({0, 1}, "000"), DomainError);
  CHECK_THROWS_AS(Alphabet(1), DomainError);
  CHECK(Pattern::parse(z_domain({0, 1}), "10,3", Alphabet(12)).str() == "10,3");
  CHECK(Pattern::constant(z_domain({0, 1, 2}), 1, Alphabet(2)).str() == "111");
}
