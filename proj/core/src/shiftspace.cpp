#include "idca/shiftspace.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace idca {

namespace {

void require_integers(const Group& g, const char* op) {
  if (!(g == Group::integers())) throw DomainError(std::string(op) + " requires the group Z");
}

std::int64_t min_of(const GroupSubset& s) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  for (const auto& g : s) lo = std::min(lo, g[0]);
  return lo;
}

std::string word_string(std::uint64_t code, int length, int k) {
  std::vector<Symbol> digits(length);
  decode(code, k, digits);
  std::string out;
  for (Symbol d : digits) out += static_cast<char>('0' + d);
  return out;
}

std::uint64_t word_code(std::string_view word, int k) {
  std::uint64_t code = 0;
  for (char c : word) {
    const int d = c - '0';
    if (d < 0 || d >= k) throw ParseError("bad word symbol");
    code = code * k + d;
  }
  return code;
}

// Occurrence of p at the offset where its minimum sits at `start` in `word`.
bool occurs_at(const Pattern& p, std::int64_t pmin, std::span<const Symbol> word, std::size_t start) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (word[start + static_cast<std::size_t>(p.domain()[j][0] - pmin)] != p.values()[j]) return false;
  }
  return true;
}

bool occurs_anywhere(const Pattern& p, std::span<const Symbol> word) {
  const std::int64_t pmin = min_of(p.domain());
  const auto m = static_cast<std::size_t>(span(p.domain()));
  for (std::size_t start = 0; start + m <= word.size(); ++start)
    if (occurs_at(p, pmin, word, start)) return true;
  return false;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw SizeCapError("word count overflows 64 bits");
  return out;
}

}  // namespace

std::int64_t span(const GroupSubset& s) {
  require_integers(s.group(), "span");
  if (s.empty()) return 0;
  std::int64_t lo = s[0][0];
  std::int64_t hi = s[0][0];
  for (const auto& g : s) {
    lo = std::min(lo, g[0]);
    hi = std::max(hi, g[0]);
  }
  return hi - lo + 1;
}

// ---------------------------------------------------------------------------
// DeBruijnGraph

DeBruijnGraph::DeBruijnGraph(int alphabet_size, int vertex_length, std::vector<char> edge_allowed)
    : k_(alphabet_size), vertex_length_(vertex_length), edge_alive_(std::move(edge_allowed)) {
  if (k_ < 2 || vertex_length_ < 1) throw DomainError("De Bruijn graph needs k >= 2 and L >= 1");
  std::uint64_t vertices = 1;
  for (int i = 0; i < vertex_length_; ++i) vertices *= static_cast<std::uint64_t>(k_);
  if (edge_alive_.size() != vertices * k_) throw DomainError("edge table has the wrong size");
  vertex_alive_.assign(vertices, 1);
  trim();
}

DeBruijnGraph DeBruijnGraph::full_shift(int alphabet_size, int vertex_length) {
  std::uint64_t edges = 1;
  for (int i = 0; i <= vertex_length; ++i) edges *= static_cast<std::uint64_t>(alphabet_size);
  return DeBruijnGraph(alphabet_size, vertex_length, std::vector<char>(edges, 1));
}

void DeBruijnGraph::trim() {
  const std::uint64_t nv = vertex_alive_.size();
  const std::uint64_t k = static_cast<std::uint64_t>(k_);
  std::vector<std::uint64_t> in(nv, 0);
  std::vector<std::uint64_t> out(nv, 0);
  for (std::uint64_t e = 0; e < edge_alive_.size(); ++e) {
    if (!edge_alive_[e]) continue;
    ++out[source(e)];
    ++in[target(e)];
  }
  std::deque<std::uint64_t> queue;
  for (std::uint64_t v = 0; v < nv; ++v)
    if (in[v] == 0 || out[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    const std::uint64_t v = queue.front();
    queue.pop_front();
    if (!vertex_alive_[v]) continue;
    vertex_alive_[v] = 0;
    for (std::uint64_t c = 0; c < k; ++c) {
      const std::uint64_t outgoing = v * k + c;
      if (edge_alive_[outgoing]) {
        edge_alive_[outgoing] = 0;
        const auto w = target(outgoing);
        if (--in[w] == 0 && vertex_alive_[w]) queue.push_back(w);
      }
      const std::uint64_t incoming = c * nv + v;
      if (edge_alive_[incoming]) {
        edge_alive_[incoming] = 0;
        const auto u = source(incoming);
        if (--out[u] == 0 && vertex_alive_[u]) queue.push_back(u);
      }
    }
  }
}

std::size_t DeBruijnGraph::vertex_count() const {
  return static_cast<std::size_t>(std::count(vertex_alive_.begin(), vertex_alive_.end(), 1));
}

std::size_t DeBruijnGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(edge_alive_.begin(), edge_alive_.end(), 1));
}

std::vector<std::string> DeBruijnGraph::vertices() const {
  std::vector<std::string> out;
  for (std::uint64_t v = 0; v < vertex_alive_.size(); ++v)
    if (vertex_alive_[v]) out.push_back(word_string(v, vertex_length_, k_));
  return out;
}

std::vector<std::string> DeBruijnGraph::edges() const {
  std::vector<std::string> out;
  for (std::uint64_t e = 0; e < edge_alive_.size(); ++e)
    if (edge_alive_[e]) out.push_back(word_string(e, vertex_length_ + 1, k_));
  return out;
}

bool DeBruijnGraph::has_vertex(std::string_view word) const {
  return static_cast<int>(word.size()) == vertex_length_ && is_vertex(word_code(word, k_));
}

bool DeBruijnGraph::has_edge(std::string_view word) const {
  return static_cast<int>(word.size()) == vertex_length_ + 1 && is_edge(word_code(word, k_));
}

// ---------------------------------------------------------------------------
// Construction

DeBruijnGraph build_graph(std::span<const Pattern> forbidden, int edge_length, const SizeLimits& limits) {
  if (forbidden.empty()) throw DomainError("build_graph: no forbidden patterns");
  const int k = forbidden.front().alphabet().size();
  for (const auto& p : forbidden) {
    require_integers(p.group(), "build_graph");
    if (p.alphabet().size() != k) throw DomainError("build_graph: patterns over different alphabets");
    if (span(p.domain()) > edge_length) throw DomainError("build_graph: edge length shorter than a pattern");
  }
  if (edge_length < 2) throw DomainError("build_graph: edge length must be >= 2");
  const std::uint64_t total = checked_power(k, static_cast<std::size_t>(edge_length),
                                            limits.max_table_entries, "De Bruijn graph");
  std::vector<char> allowed(total, 1);
  std::vector<Symbol> word(edge_length);
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, k, word);
    for (const auto& p : forbidden) {
      if (occurs_anywhere(p, word)) {
        allowed[code] = 0;
        break;
      }
    }
  }
  return DeBruijnGraph(k, edge_length - 1, std::move(allowed));
}

DeBruijnGraph build_graph(const Pattern& p, const SizeLimits& limits) {
  require_integers(p.group(), "build_graph");
  const int m = static_cast<int>(span(p.domain()));
  return build_graph(std::span<const Pattern>(&p, 1), std::max(m, 2), limits);
}

// ---------------------------------------------------------------------------
// Counting and entropy

std::uint64_t count_words(const DeBruijnGraph& graph, std::size_t n) {
  if (n < 1) throw DomainError("count_words: n must be >= 1");
  const auto L = static_cast<std::size_t>(graph.vertex_length());
  const std::uint64_t k = static_cast<std::uint64_t>(graph.alphabet_size());
  if (n < L) {
    std::uint64_t divisor = 1;
    for (std::size_t i = n; i < L; ++i) divisor *= k;
    std::vector<char> seen(graph.vertex_space() / divisor, 0);
    for (std::uint64_t v = 0; v < graph.vertex_space(); ++v)
      if (graph.is_vertex(v)) seen[v / divisor] = 1;
    return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), 1));
  }
  std::vector<std::uint64_t> walks(graph.vertex_space(), 0);
  for (std::uint64_t v = 0; v < graph.vertex_space(); ++v) walks[v] = graph.is_vertex(v) ? 1 : 0;
  for (std::size_t step = L; step < n; ++step) {
    std::vector<std::uint64_t> next(graph.vertex_space(), 0);
    for (std::uint64_t e = 0; e < graph.edge_space(); ++e) {
      if (!graph.is_edge(e)) continue;
      const auto t = graph.target(e);
      next[t] = checked_add(next[t], walks[graph.source(e)]);
    }
    walks = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : walks) total = checked_add(total, w);
  return total;
}

std::uint64_t count_words(const Pattern& p, std::size_t n, const SizeLimits& limits) {
  return count_words(build_graph(p, limits), n);
}

namespace {

// Kosaraju over alive vertices; returns the component id per vertex (-1 dead).
std::vector<std::int64_t> strongly_connected(const DeBruijnGraph& g, std::int64_t& components) {
  const std::uint64_t nv = g.vertex_space();
  const std::uint64_t k = static_cast<std::uint64_t>(g.alphabet_size());
  std::vector<char> visited(nv, 0);
  std::vector<std::uint64_t> order;
  for (std::uint64_t root = 0; root < nv; ++root) {
    if (!g.is_vertex(root) || visited[root]) continue;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{root, 0}};
    visited[root] = 1;
    while (!stack.empty()) {
      auto& [v, c] = stack.back();
      if (c < k) {
        const std::uint64_t e = v * k + c++;
        if (g.is_edge(e) && !visited[g.target(e)]) {
          visited[g.target(e)] = 1;
          stack.emplace_back(g.target(e), 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::int64_t> comp(nv, -1);
  components = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<std::uint64_t> stack{*it};
    comp[*it] = components;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::uint64_t c = 0; c < k; ++c) {
        const std::uint64_t e = c * nv + v;  // edges into v
        if (g.is_edge(e) && comp[g.source(e)] == -1) {
          comp[g.source(e)] = components;
          stack.push_back(g.source(e));
        }
      }
    }
    ++components;
  }
  return comp;
}

}  // namespace

EntropyResult entropy(const DeBruijnGraph& graph, double tol, std::size_t max_iterations) {
  if (graph.empty()) throw DomainError("entropy is undefined for an empty shift");
  std::int64_t count = 0;
  const auto comp = strongly_connected(graph, count);

  EntropyResult result;
  double best = 0;
  bool any = false;
  for (std::int64_t c = 0; c < count; ++c) {
    std::vector<std::uint64_t> members;
    for (std::uint64_t v = 0; v < graph.vertex_space(); ++v)
      if (comp[v] == c) members.push_back(v);
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // local src -> dst
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int s = 0; s < graph.alphabet_size(); ++s) {
        const std::uint64_t e = members[i] * graph.alphabet_size() + s;
        if (!graph.is_edge(e) || comp[graph.target(e)] != c) continue;
        const auto j = static_cast<std::size_t>(
            std::lower_bound(members.begin(), members.end(), graph.target(e)) - members.begin());
        edges.emplace_back(i, j);
      }
    }
    if (edges.empty()) continue;
    any = true;
    // (A + I) is primitive on an irreducible component, so its Perron root
    // dominates strictly and the iteration converges even for periodic A.
    // The componentwise ratios w_i / v_i of a positive vector bracket that
    // root, which gives a stopping rule with a guaranteed error bound.
    const std::size_t n = members.size();
    std::vector<double> v(n, 1.0);
    double estimate = 0;
    bool converged = false;
    for (std::size_t it = 0; it < max_iterations; ++it) {
      std::vector<double> w(v);
      for (auto [i, j] : edges) w[j] += v[i];
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0;
      double top = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const double ratio = w[i] / v[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        top = std::max(top, w[i]);
      }
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / top;
      ++result.iterations;
      estimate = 0.5 * (lo + hi);
      if (hi - lo < tol * hi) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ConvergenceError("entropy: power iteration did not converge");
    best = std::max(best, estimate - 1.0);
  }
  if (!any) throw DomainError("entropy is undefined: the graph has no cycle");
  result.spectral_radius = best;
  result.bits = std::log2(best);
  result.nats = std::log(best);
  return result;
}

EntropyResult entropy(const Pattern& p, double tol, const SizeLimits& limits) {
  return entropy(build_graph(p, limits), tol);
}

// ---------------------------------------------------------------------------
// Inclusion and periodic points

bool sft_subset(const Pattern& p, const Pattern& q, const SizeLimits& limits) {
  require_integers(p.group(), "sft_subset");
  require_integers(q.group(), "sft_subset");
  if (!(p.alphabet() == q.alphabet())) throw DomainError("sft_subset: patterns over different alphabets");
  const int window = static_cast<int>(std::max({span(p.domain()), span(q.domain()), std::int64_t{2}}));
  const DeBruijnGraph graph = build_graph(std::span<const Pattern>(&p, 1), window, limits);
  std::vector<Symbol> word(window);
  for (std::uint64_t e = 0; e < graph.edge_space(); ++e) {
    if (!graph.is_edge(e)) continue;
    decode(e, graph.alphabet_size(), word);
    if (occurs_anywhere(q, word)) return false;
  }
  return true;
}

std::vector<Symbol> apply_periodic(const LocalRule& rule, std::span<const Symbol> word) {
  require_integers(rule.group(), "apply_periodic");
  const auto n = static_cast<std::int64_t>(word.size());
  if (n < 1) throw DomainError("apply_periodic: empty word");
  std::vector<std::int64_t> offsets;
  for (const auto& s : rule.memory()) offsets.push_back(((s[0] % n) + n) % n);
  const auto k = static_cast<std::uint64_t>(rule.alphabet().size());
  std::vector<Symbol> out(word.size());
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint64_t idx = 0;
    for (auto off : offsets) idx = idx * k + word[static_cast<std::size_t>((i + off) % n)];
    out[static_cast<std::size_t>(i)] = rule.at(idx);
  }
  return out;
}

bool occurs_cyclically(const Pattern& p, std::span<const Symbol> word) {
  require_integers(p.group(), "occurs_cyclically");
  const auto n = static_cast<std::int64_t>(word.size());
  if (n < 1) throw DomainError("occurs_cyclically: empty word");
  for (std::int64_t i = 0; i < n; ++i) {
    bool match = true;
    for (std::size_t j = 0; j < p.size() && match; ++j) {
      const std::int64_t pos = (((i + p.domain()[j][0]) % n) + n) % n;
      match = word[static_cast<std::size_t>(pos)] == p.values()[j];
    }
    if (match) return true;
  }
  return false;
}

}  // namespace idca
