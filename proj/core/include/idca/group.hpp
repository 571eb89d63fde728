#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idca/common.hpp"

namespace idca {

/// A group element. Free-abelian elements carry their integer coordinates;
/// elements of a finite group carry their single Cayley-table index. The
/// derived ordering is the canonical one: lexicographic on coordinates.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static Element scalar(std::int64_t value) { return Element({value}); }

  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dimension() const { return coords_.size(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// A group presented operationally: either Z^d or a finite group given by
/// its Cayley table. Immutable and cheap to copy.
class Group {
 public:
  enum class Kind { FreeAbelian, Finite };

  static Group free_abelian(int rank);
  static Group integers() { return free_abelian(1); }
  static Group cyclic(int order);

  /// Validates the table as a group (Latin square, two-sided identity,
  /// associativity, inverses) by exhaustion; throws DomainError otherwise.
  static Group from_cayley_table(const std::vector<std::vector<int>>& table,
                                 int identity);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Rank d of Z^d; 0 for finite groups.
  int rank() const { return rank_; }
  /// Number of elements; 0 when infinite.
  std::size_t order() const;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, std::int64_t n) const;
  bool contains(const Element& a) const;

  /// All elements in index order (finite groups only).
  std::vector<Element> elements() const;
  /// Dense index of a finite-group element.
  std::size_t index(const Element& a) const;

  /// `zd:<d>` for Z^d, `cayley[<n>]` for finite groups.
  std::string name() const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  struct Table {
    int n = 0;
    int identity = 0;
    std::vector<int> mul;  // row-major n*n
    std::vector<int> inv;
  };

  Group(Kind kind, int rank, std::shared_ptr<const Table> table)
      : kind_(kind), rank_(rank), table_(std::move(table)) {}

  void require_member(const Element& a) const;

  Kind kind_ = Kind::FreeAbelian;
  int rank_ = 1;
  std::shared_ptr<const Table> table_;
};

std::string format_element(const Group& group, const Element& g);
Element parse_element(const Group& group, std::string_view text);

/// A finite subset of a group with an explicit display order. Members are
/// distinct; the order is preserved verbatim because pattern strings and
/// table encodings follow it.
class GroupSubset {
 public:
  GroupSubset(Group group, std::vector<Element> members);

  /// Sorted, deduplicated subset.
  static GroupSubset canonical(Group group, std::vector<Element> members);
  /// {lo, ..., hi} in Z.
  static GroupSubset integer_range(std::int64_t lo, std::int64_t hi);
  /// Integers in the given order, in Z.
  static GroupSubset integers(std::initializer_list<std::int64_t> values);

  const Group& group() const { return group_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Element& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Element& g) const { return index_of(g).has_value(); }
  std::optional<std::size_t> index_of(const Element& g) const;
  /// Like index_of but throws DomainError when absent.
  std::size_t position(const Element& g) const;

  GroupSubset canonicalized() const;
  bool same_set(const GroupSubset& other) const;
  bool is_subset_of(const GroupSubset& other) const;
  bool is_inverse_closed() const;

  /// Comma-separated display-order members, e.g. `-1,0,1`.
  std::string str() const;

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  Group group_;
  std::vector<Element> members_;
};

/// TS = {ts : t in T, s in S}, canonically ordered.
GroupSubset set_product(const GroupSubset& t, const GroupSubset& s);
/// S^{-1}, canonically ordered.
GroupSubset set_inverse(const GroupSubset& s);
/// A ∪ B, canonically ordered.
GroupSubset set_union(const GroupSubset& a, const GroupSubset& b);

/// Accepts `-2,-1,0,1,2` for Z, `(0,0);(1,0)` for Z^d, indices for finite
/// groups. The order of the text is kept as the display order.
GroupSubset parse_subset(const Group& group, std::string_view text);

/// A finite map W -> A, i.e. a configuration known on a window W.
struct Fragment {
  GroupSubset domain;
  std::vector<Symbol> values;

  Symbol at(const Element& g) const { return values[domain.position(g)]; }
  std::string str() const;
};

/// t ↦ z(st) for t in S, i.e. (s^{-1}·z)|_S. Throws DomainError when sS is
/// not inside the domain of z.
Fragment centered_restriction(const Fragment& z, const Element& s,
                              const GroupSubset& window);

}  // namespace idca
