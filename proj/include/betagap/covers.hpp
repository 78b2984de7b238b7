#pragma once

// Labeled graphs, the Fischer covers of both families, partition refinement
// and small-graph isomorphism.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betagap/beta.hpp"
#include "betagap/gaps.hpp"

namespace betagap {

using CountMatrix = std::vector<std::vector<std::size_t>>;

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  Letter label = 0;

  bool operator==(const Edge&) const = default;
};

/// Directed multigraph with edge labels in {0, 1}.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t vertex_count);

  std::size_t add_vertex(std::string name = {});
  void add_edge(std::size_t from, std::size_t to, Letter label);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Vertex name, or its index when unnamed.
  std::string name(std::size_t v) const;
  void set_name(std::size_t v, std::string name);

  /// The vertex F(1) or α_1.
  std::optional<std::size_t> distinguished() const { return distinguished_; }
  void set_distinguished(std::size_t v);

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string text) { warnings_.push_back(std::move(text)); }

  /// A[i][j] = number of edges i -> j.
  CountMatrix underlying() const;
  /// Edges with the given label only.
  CountMatrix label_matrix(Letter label) const;

  std::string to_dot(std::string_view graph_name = "G") const;
  /// {"vertices":[names], "edges":[{"from","to","label"}], ...}
  std::string to_json() const;
  static LabeledGraph from_json(std::string_view text);

  bool operator==(const LabeledGraph&) const = default;

 private:
  void check_vertex(std::size_t v) const;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<std::size_t> distinguished_;
  std::vector<std::string> warnings_;
};

/// F1, F10, F10^2, ...
std::string follower_vertex_name(std::size_t m);

/// Vertices are the follower classes of 1 0^m. Truncated sets need a horizon
/// h and give vertices 0..h.
LabeledGraph fischer_gap(const GapSet& s, std::optional<std::size_t> horizon = std::nullopt);

/// Vertices α_1..α_N named a1..aN. Truncated sequences need a horizon.
LabeledGraph fischer_beta(const ParrySeq& s, std::optional<std::size_t> horizon = std::nullopt);

struct PresentationFlags {
  bool right_resolving = false;
  bool irreducible = false;
  bool follower_separated = false;

  bool all() const { return right_resolving && irreducible && follower_separated; }
};

PresentationFlags check_presentation(const LabeledGraph& g);

struct Partition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t size() const { return blocks.size(); }
  bool is_discrete() const { return blocks.size() == block_of.size(); }
};

struct MinFactor {
  Partition partition;
  /// Edges between blocks, counted from any vertex of the source block.
  CountMatrix quotient;
};

/// Coarsest partition where vertices in a block send equally many edges into
/// every block.
MinFactor min_factor(const LabeledGraph& g);
MinFactor min_factor(const CountMatrix& a);

/// Vertex bijection phi with a[i][j] = b[phi i][phi j] in every layer, or
/// nullopt. Throws TooLarge above 64 vertices.
std::optional<std::vector<std::size_t>> graph_iso(const std::vector<CountMatrix>& a,
                                                  const std::vector<CountMatrix>& b);
std::optional<std::vector<std::size_t>> graph_iso(const CountMatrix& a, const CountMatrix& b);
/// Label-preserving isomorphism.
std::optional<std::vector<std::size_t>> labeled_iso(const LabeledGraph& g, const LabeledGraph& h);

/// Edges into the distinguished vertex get label 1, all others 0.
LabeledGraph relabel_to_gap(const LabeledGraph& g_beta);

/// DOT text for an unlabeled count matrix.
std::string count_matrix_dot(const CountMatrix& a, std::string_view graph_name = "M");

}  // namespace betagap
