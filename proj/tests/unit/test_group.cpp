#include <random>

#include "doctest.h"

#include "bridge.hpp"
#include "idca/group.hpp"
#include "idca/io.hpp"

using namespace idca;
using testing_support::z_domain;

namespace {

Element e1(std::int64_t v) { return Element::scalar(v); }
Element e2(std::int64_t a, std::int64_t b) { return Element({a, b}); }

GroupSubset z2_subset(std::vector<std::pair<int, int>> pts) {
  std::vector<Element> m;
  for (auto [a, b] : pts) m.push_back(e2(a, b));
  return GroupSubset(Group::free_abelian(2), std::move(m));
}

}  // namespace

TEST_CASE("set product of subsets") {
  const GroupSubset s = GroupSubset::integers({-1, 0, 1});
  CHECK(set_product(s, s) == GroupSubset::integer_range(-2, 2));

  const GroupSubset e = GroupSubset::integers({0});
  CHECK(set_product(e, s).same_set(s));

  const GroupSubset t = z2_subset({{0, 0}, {1, 0}, {0, 1}});
  const GroupSubset tt = set_product(t, t);
  CHECK(tt.size() == 6);
  CHECK(tt.same_set(z2_subset({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}})));
  CHECK(tt.size() <= t.size() * t.size());

  CHECK_THROWS_AS(set_product(s, t), DomainError);
}

TEST_CASE("set inverse") {
  CHECK(set_inverse(GroupSubset::integers({0, 1, 2})) == GroupSubset::integers({-2, -1, 0}));
  CHECK(set_inverse(GroupSubset::integers({-1, 0, 1})) == GroupSubset::integers({-1, 0, 1}));

  const Group z4 = Group::cyclic(4);
  const GroupSubset s(z4, {Element({0}), Element({1})});
  CHECK(set_inverse(s) == GroupSubset(z4, {Element({0}), Element({3})}));
  CHECK(set_inverse(set_inverse(s)).same_set(s));
}

TEST_CASE("centered restriction") {
  const GroupSubset s = GroupSubset::integers({-1, 0, 1});
  const Fragment z{GroupSubset::integer_range(-2, 2), {0, 0, 0, 1, 0}};

  CHECK(centered_restriction(z, e1(0), s).values == std::vector<Symbol>{0, 0, 1});
  CHECK(centered_restriction(z, e1(1), s).values == std::vector<Symbol>{0, 1, 0});
  CHECK(centered_restriction(z, e1(-1), s).values == std::vector<Symbol>{0, 0, 0});
  CHECK_THROWS_AS(centered_restriction(z, e1(2), s), DomainError);

  // Evaluated at e it reads z(s).
  for (std::int64_t g = -1; g <= 1; ++g) CHECK(centered_restriction(z, e1(g), s).at(e1(0)) == z.at(e1(g)));
}

TEST_CASE("display order is kept, canonical order is lexicographic") {
  const GroupSubset s = GroupSubset::integers({1, -1, 0});
  CHECK(s.str() == "1,-1,0");
  CHECK(s.canonicalized().str() == "-1,0,1");
  CHECK(GroupSubset::canonical(Group::integers(), {e1(2), e1(-3), e1(2)}).str() == "-3,2");
  CHECK_THROWS_AS(GroupSubset::integers({0, 1, 0}), DomainError);
}

TEST_CASE("parsing elements and subsets") {
  const Group z = Group::integers();
  CHECK(parse_subset(z, "-2,-1,0,1,2") == GroupSubset::integer_range(-2, 2));
  CHECK(parse_subset(Group::free_abelian(2), "(0,0);(1,0)") == z2_subset({{0, 0}, {1, 0}}));
  CHECK(parse_subset(Group::free_abelian(2), "(0,0);(1,0)").str() == "(0,0);(1,0)");
  CHECK_THROWS_AS(parse_subset(z, "0,x"), ParseError);
  CHECK_THROWS_AS(parse_subset(Group::cyclic(3), "0,3"), DomainError);
  CHECK(format_element(z, parse_element(z, "-7")) == "-7");
}

TEST_CASE("Cayley tables are validated") {
  CHECK_NOTHROW(Group::from_cayley_table({{0, 1}, {1, 0}}, 0));
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {0, 1}}, 0), DomainError);
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {1, 0}}, 1), DomainError);
  // A Latin square with identity 0 that is not associative.
  const std::vector<std::vector<int>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(Group::from_cayley_table(loop, 0), DomainError);
}

TEST_CASE("fixture groups satisfy the axioms and match the reference tables") {
  const std::vector<std::pair<std::string, oracle::Table>> cases{
      {"z2.json", oracle::cyclic(2)}, {"z3.json", oracle::cyclic(3)}, {"z4.json", oracle::cyclic(4)},
      {"z5.json", oracle::cyclic(5)}, {"z6.json", oracle::cyclic(6)}, {"z2xz2.json", oracle::klein()},
      {"s3.json", oracle::symmetric3()}};
  for (const auto& [file, table] : cases) {
    CAPTURE(file);
    const Group g = parse_group("cayley:" + testing_support::fixture("groups/" + file));
    REQUIRE(g.order() == static_cast<std::size_t>(table.order()));
    const auto els = g.elements();
    const Element e = g.identity();
    for (const auto& a : els) {
      CHECK(g.multiply(a, e) == a);
      CHECK(g.multiply(e, a) == a);
      CHECK(g.multiply(a, g.inverse(a)) == e);
      CHECK(g.inverse(g.inverse(a)) == a);
      for (const auto& b : els) {
        CHECK(static_cast<int>(g.multiply(a, b)[0]) == table.mul[g.index(a)][g.index(b)]);
        for (const auto& c : els) CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      }
    }
  }
}

TEST_CASE("set product is associative on all small subsets of Z5") {
  const Group z5 = Group::cyclic(5);
  std::vector<GroupSubset> subsets;
  for (unsigned mask = 1; mask < 32; ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<Element> m;
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) m.push_back(Element({i}));
    subsets.emplace_back(z5, m);
  }
  std::size_t checked = 0;
  for (const auto& r : subsets)
    for (const auto& s : subsets)
      for (const auto& t : subsets) {
        CHECK(set_product(set_product(r, s), t).same_set(set_product(r, set_product(s, t))));
        ++checked;
      }
  CHECK(checked == subsets.size() * subsets.size() * subsets.size());
}

TEST_CASE("set product is associative on random subsets of Z^2") {
  std::mt19937_64 rng(oracle::test_seed());
  std::uniform_int_distribution<int> coord(-3, 3), size(1, 4);
  auto random_subset = [&] {
    std::vector<Element> m;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) m.push_back(e2(coord(rng), coord(rng)));
    return GroupSubset::canonical(Group::free_abelian(2), m);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = random_subset(), s = random_subset(), t = random_subset();
    CHECK(set_product(set_product(r, s), t).same_set(set_product(r, set_product(s, t))));
  }
}

TEST_CASE("subset predicates") {
  CHECK(GroupSubset::integers({-1, 0, 1}).is_inverse_closed());
  CHECK_FALSE(GroupSubset::integers({0, 1, 2}).is_inverse_closed());
  CHECK(GroupSubset::integers({0, 1}).is_subset_of(GroupSubset::integers({-1, 0, 1})));
  CHECK_FALSE(GroupSubset::integers({0, 2}).is_subset_of(GroupSubset::integers({-1, 0, 1})));
  CHECK(set_union(GroupSubset::integers({2, 0}), GroupSubset::integers({-1})).str() == "-1,0,2");
  CHECK(z_domain({1, 0}).position(e1(0)) == 1);
}
