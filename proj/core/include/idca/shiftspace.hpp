#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "idca/rule.hpp"

namespace idca {

/// Power iteration did not settle within the iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Span max S - min S + 1 of a subset of Z (0 when empty).
std::int64_t span(const GroupSubset& s);

/// Vertex/edge presentation of a one-dimensional subshift of finite type.
/// Vertices are words of length L, edges are words of length L+1 joining
/// their prefix to their suffix. The graph is stored trimmed: only vertices
/// and edges lying on bi-infinite walks survive.
class DeBruijnGraph {
 public:
  /// Edge words are kept iff `allowed(digits)`; the result is trimmed.
  DeBruijnGraph(int alphabet_size, int vertex_length, std::vector<char> edge_allowed);

  static DeBruijnGraph full_shift(int alphabet_size, int vertex_length);

  int alphabet_size() const { return k_; }
  int vertex_length() const { return vertex_length_; }
  int edge_length() const { return vertex_length_ + 1; }

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  bool empty() const { return vertex_count() == 0; }

  /// Codes are `encode` of the word over the alphabet.
  std::uint64_t vertex_space() const { return vertex_alive_.size(); }
  std::uint64_t edge_space() const { return edge_alive_.size(); }
  bool is_vertex(std::uint64_t code) const { return vertex_alive_[code] != 0; }
  bool is_edge(std::uint64_t code) const { return edge_alive_[code] != 0; }
  std::uint64_t source(std::uint64_t edge) const { return edge / k_; }
  std::uint64_t target(std::uint64_t edge) const { return edge % vertex_alive_.size(); }

  std::vector<std::string> vertices() const;
  std::vector<std::string> edges() const;
  bool has_vertex(std::string_view word) const;
  bool has_edge(std::string_view word) const;

 private:
  void trim();

  int k_;
  int vertex_length_;
  std::vector<char> vertex_alive_;
  std::vector<char> edge_alive_;
};

/// Graph of X_p for p over S ⊂ Z with window m = span(S): vertex length
/// max(m-1, 1). A length-(L+1) word is an edge iff no translate of p inside
/// it matches; gaps in S are unconstrained.
DeBruijnGraph build_graph(const Pattern& p, const SizeLimits& limits = {});

/// Graph of the SFT forbidding every pattern in `forbidden`, with edge words
/// of the given length (at least the span of each pattern, and at least 2).
DeBruijnGraph build_graph(std::span<const Pattern> forbidden, int edge_length,
                          const SizeLimits& limits = {});

/// Number of length-n words occurring in points of the shift.
std::uint64_t count_words(const DeBruijnGraph& graph, std::size_t n);
std::uint64_t count_words(const Pattern& p, std::size_t n, const SizeLimits& limits = {});

struct EntropyResult {
  double bits = 0;             // log2 of the spectral radius
  double nats = 0;             // natural log of the spectral radius
  double spectral_radius = 0;
  std::size_t iterations = 0;  // summed over strongly connected components
};

/// Topological entropy by power iteration on (A_C + I) for every strongly
/// connected component C. The componentwise growth ratios of the iterate
/// bracket the Perron root, and iteration stops once the bracket is narrower
/// than tol relative to its upper end. Throws DomainError on an empty graph and
/// ConvergenceError when max_iterations is exhausted.
EntropyResult entropy(const DeBruijnGraph& graph, double tol = 1e-12,
                      std::size_t max_iterations = 1'000'000);
EntropyResult entropy(const Pattern& p, double tol = 1e-12, const SizeLimits& limits = {});

/// X_p ⊆ X_q, decided by looking for an occurrence of q on an edge of the
/// trimmed graph of X_p drawn over a window that holds both patterns.
bool sft_subset(const Pattern& p, const Pattern& q, const SizeLimits& limits = {});

/// Image of the n-periodic point w under the CA of a rule over Z:
/// out(i) = rule(j ↦ w((i + j) mod n)).
std::vector<Symbol> apply_periodic(const LocalRule& rule, std::span<const Symbol> word);

/// True when p occurs in the periodic point with period word w.
bool occurs_cyclically(const Pattern& p, std::span<const Symbol> word);

}  // namespace idca
