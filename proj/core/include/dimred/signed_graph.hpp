#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dimred/arrangement.hpp"
#include "dimred/subset.hpp"

namespace dimred {

enum class Sign : int { plus = 1, minus = -1 };

struct SignedEdge {
  int i = 0;  // i < j, vertices are 0-based
  int j = 0;
  Sign sign = Sign::plus;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Signed multigraph on n vertices. Between two vertices there may be at
/// most one edge of each sign; loops are rejected.
class SignedGraph {
 public:
  explicit SignedGraph(int vertices, std::vector<SignedEdge> edges = {});

  int vertices() const { return n_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<int>> components() const;
  /// Induced subgraph on the given vertices, relabelled 0..k-1 in order.
  SignedGraph induced(const std::vector<int>& vertices) const;

 private:
  int n_;
  std::vector<SignedEdge> edges_;
};

/// Simple unsigned graph, edges as (i, j) with i < j.
struct SimpleGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Every cycle (2-cycles from a +/- pair included) has sign product +1.
/// Decided by the vertex-signing criterion: a signing s with
/// sign(ij) = s_i s_j exists on every component.
bool is_balanced(const SignedGraph& g);

struct ComponentSplit {
  std::vector<int> balanced_vertices;    // original labels, ascending
  std::vector<int> unbalanced_vertices;  // original labels, ascending
  SignedGraph balanced;
  SignedGraph unbalanced;
};

/// Vertex-disjoint split into the union of balanced components (isolated
/// vertices included) and the union of unbalanced components.
ComponentSplit split_components(const SignedGraph& g);

/// Number of balanced signings of a connected simple graph: 2^{n-1}.
/// Throws PreconditionError if g is disconnected or empty.
long long balanced_liftings(const SimpleGraph& g);

/// Rank of the D_n frame matroid on this signed graph: n minus the number
/// of balanced components.
int signed_graph_rank(const SignedGraph& g);

/// Independent in M_{D_n}: every component has at most one cycle, and that
/// cycle (if present) is unbalanced.
bool is_Dn_independent(const SignedGraph& g);

/// Base of M_{D_n}: spans all vertices, every component has exactly one
/// cycle and that cycle is unbalanced.
bool is_Dn_base(const SignedGraph& g);

/// Hyperplane index in Arrangement::coxeter_d(n) for a signed edge under the
/// dictionary (ij,+) <-> x_i - x_j and (ij,-) <-> x_i + x_j.
int coxeter_d_index(int n, const SignedEdge& e);
/// Signed graph of a subset of coxeter_d(n) hyperplanes.
SignedGraph signed_graph_of(int n, GroundSubset subset);
/// Ground subset of coxeter_d(n) corresponding to a signed graph.
GroundSubset coxeter_d_subset(const SignedGraph& g);

}  // namespace dimred
