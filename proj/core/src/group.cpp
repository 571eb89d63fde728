#include "idca/group.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace idca {

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

// ---------------------------------------------------------------------------
// Group

Group Group::free_abelian(int rank) {
  if (rank < 1) throw DomainError("free-abelian rank must be >= 1");
  return Group(Kind::FreeAbelian, rank, nullptr);
}

Group Group::cyclic(int order) {
  if (order < 1) throw DomainError("cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) table[i][j] = (i + j) % order;
  return from_cayley_table(table, 0);
}

Group Group::from_cayley_table(const std::vector<std::vector<int>>& table, int identity) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw DomainError("Cayley table is empty");
  if (identity < 0 || identity >= n) throw DomainError("identity index out of range");
  auto t = std::make_shared<Table>();
  t->n = n;
  t->identity = identity;
  t->mul.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw DomainError("Cayley table is not square");
    std::vector<char> row_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw DomainError("Cayley table entry out of range");
      if (row_seen[v]++) throw DomainError("Cayley table is not a Latin square (row)");
      t->mul[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> col_seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (col_seen[table[i][j]]++) {
        throw DomainError("Cayley table is not a Latin square (column)");
      }
    }
  }
  auto mul = [&](int a, int b) { return t->mul[static_cast<std::size_t>(a) * n + b]; };
  for (int g = 0; g < n; ++g) {
    if (mul(identity, g) != g || mul(g, identity) != g) {
      throw DomainError("identity row/column does not act trivially");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw DomainError("Cayley table is not associative");
        }
  t->inv.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (mul(g, h) == identity) t->inv[g] = h;
  for (int g = 0; g < n; ++g) {
    if (t->inv[t->inv[g]] != g || mul(t->inv[g], g) != identity) {
      throw DomainError("Cayley table has inconsistent inverses");
    }
  }
  return Group(Kind::Finite, 0, std::move(t));
}

std::size_t Group::order() const { return is_finite() ? static_cast<std::size_t>(table_->n) : 0; }

Element Group::identity() const {
  if (is_finite()) return Element::scalar(table_->identity);
  return Element(std::vector<std::int64_t>(rank_, 0));
}

void Group::require_member(const Element& a) const {
  if (!contains(a)) {
    throw DomainError("element does not belong to group " + name());
  }
}

Element Group::multiply(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  if (is_finite()) {
    return Element::scalar(table_->mul[a[0] * table_->n + b[0]]);
  }
  std::vector<std::int64_t> sum(rank_);
  for (int i = 0; i < rank_; ++i) sum[i] = a[i] + b[i];
  return Element(std::move(sum));
}

Element Group::inverse(const Element& a) const {
  require_member(a);
  if (is_finite()) return Element::scalar(table_->inv[a[0]]);
  std::vector<std::int64_t> neg(rank_);
  for (int i = 0; i < rank_; ++i) neg[i] = -a[i];
  return Element(std::move(neg));
}

Element Group::power(const Element& a, std::int64_t n) const {
  Element base = n < 0 ? inverse(a) : a;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element result = identity();
  while (m > 0) {
    if (m & 1U) result = multiply(result, base);
    base = multiply(base, base);
    m >>= 1U;
  }
  return result;
}

bool Group::contains(const Element& a) const {
  if (is_finite()) return a.dimension() == 1 && a[0] >= 0 && a[0] < table_->n;
  return static_cast<int>(a.dimension()) == rank_;
}

std::vector<Element> Group::elements() const {
  if (!is_finite()) throw DomainError("elements() requires a finite group");
  std::vector<Element> out;
  out.reserve(table_->n);
  for (int i = 0; i < table_->n; ++i) out.push_back(Element::scalar(i));
  return out;
}

std::size_t Group::index(const Element& a) const {
  if (!is_finite()) throw DomainError("index() requires a finite group");
  require_member(a);
  return static_cast<std::size_t>(a[0]);
}

std::string Group::name() const {
  if (is_finite()) return "cayley[" + std::to_string(table_->n) + "]";
  return "zd:" + std::to_string(rank_);
}

bool operator==(const Group& a, const Group& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Group::Kind::FreeAbelian) return a.rank_ == b.rank_;
  if (a.table_ == b.table_) return true;
  return a.table_->identity == b.table_->identity && a.table_->mul == b.table_->mul;
}

std::string format_element(const Group& group, const Element& g) {
  if (group.is_finite() || group.rank() == 1) return std::to_string(g[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (i) out += ',';
    out += std::to_string(g[i]);
  }
  return out + ")";
}

Element parse_element(const Group& group, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  Element g;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    std::vector<std::int64_t> coords;
    for (auto part : split(text.substr(1, text.size() - 2), ',')) coords.push_back(parse_int(part));
    g = Element(std::move(coords));
  } else {
    g = Element::scalar(parse_int(text));
  }
  if (!group.contains(g)) {
    throw ParseError("'" + std::string(text) + "' is not an element of " + group.name());
  }
  return g;
}

// ---------------------------------------------------------------------------
// GroupSubset

GroupSubset::GroupSubset(Group group, std::vector<Element> members)
    : group_(std::move(group)), members_(std::move(members)) {
  std::set<Element> seen;
  for (const auto& g : members_) {
    if (!group_.contains(g)) throw DomainError("subset member outside group " + group_.name());
    if (!seen.insert(g).second) {
      throw DomainError("duplicate subset member " + format_element(group_, g));
    }
  }
}

GroupSubset GroupSubset::canonical(Group group, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return GroupSubset(std::move(group), std::move(members));
}

GroupSubset GroupSubset::integer_range(std::int64_t lo, std::int64_t hi) {
  std::vector<Element> members;
  for (std::int64_t v = lo; v <= hi; ++v) members.push_back(Element::scalar(v));
  return GroupSubset(Group::integers(), std::move(members));
}

GroupSubset GroupSubset::integers(std::initializer_list<std::int64_t> values) {
  std::vector<Element> members;
  for (auto v : values) members.push_back(Element::scalar(v));
  return GroupSubset(Group::integers(), std::move(members));
}

std::optional<std::size_t> GroupSubset::index_of(const Element& g) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == g) return i;
  return std::nullopt;
}

std::size_t GroupSubset::position(const Element& g) const {
  auto idx = index_of(g);
  if (!idx) {
    throw DomainError(format_element(group_, g) + " is not in {" + str() + "}");
  }
  return *idx;
}

GroupSubset GroupSubset::canonicalized() const { return canonical(group_, members_); }

bool GroupSubset::same_set(const GroupSubset& other) const {
  return group_ == other.group_ && size() == other.size() && is_subset_of(other);
}

bool GroupSubset::is_subset_of(const GroupSubset& other) const {
  if (!(group_ == other.group_)) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](const Element& g) { return other.contains(g); });
}

bool GroupSubset::is_inverse_closed() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const Element& g) { return contains(group_.inverse(g)); });
}

std::string GroupSubset::str() const {
  std::string out;
  const bool tuples = !group_.is_finite() && group_.rank() > 1;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += tuples ? ';' : ',';
    out += format_element(group_, members_[i]);
  }
  return out;
}

GroupSubset set_product(const GroupSubset& t, const GroupSubset& s) {
  if (!(t.group() == s.group())) {
    throw DomainError("set_product: subsets belong to different groups");
  }
  std::vector<Element> out;
  out.reserve(t.size() * s.size());
  for (const auto& a : t)
    for (const auto& b : s) out.push_back(t.group().multiply(a, b));
  return GroupSubset::canonical(t.group(), std::move(out));
}

GroupSubset set_inverse(const GroupSubset& s) {
  std::vector<Element> out;
  out.reserve(s.size());
  for (const auto& g : s) out.push_back(s.group().inverse(g));
  return GroupSubset::canonical(s.group(), std::move(out));
}

GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group())) throw DomainError("set_union: subsets belong to different groups");
  std::vector<Element> out(a.members());
  out.insert(out.end(), b.begin(), b.end());
  return GroupSubset::canonical(a.group(), std::move(out));
}

GroupSubset parse_subset(const Group& group, std::string_view text) {
  std::vector<Element> members;
  const bool tuples = text.find('(') != std::string_view::npos;
  for (auto part : split(text, tuples ? ';' : ',')) {
    if (part.find_first_not_of(' ') == std::string_view::npos) {
      throw ParseError("empty element in subset '" + std::string(text) + "'");
    }
    members.push_back(parse_element(group, part));
  }
  try {
    return GroupSubset(group, std::move(members));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Fragment

std::string Fragment::str() const {
  std::string out;
  const bool digits = std::all_of(values.begin(), values.end(), [](Symbol v) { return v < 10; });
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!digits && i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Fragment centered_restriction(const Fragment& z, const Element& s, const GroupSubset& window) {
  const Group& g = z.domain.group();
  if (!(g == window.group())) throw DomainError("centered_restriction: group mismatch");
  Fragment out{window, {}};
  out.values.reserve(window.size());
  for (const auto& t : window) {
    auto idx = z.domain.index_of(g.multiply(s, t));
    if (!idx) {
      throw DomainError("centered_restriction: s·S leaves the window at " +
                        format_element(g, g.multiply(s, t)));
    }
    out.values.push_back(z.values[*idx]);
  }
  return out;
}

}  // namespace idca
