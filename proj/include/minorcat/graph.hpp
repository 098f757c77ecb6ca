#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorcat {

// Multigraph in arrow form: a finite arrow set with a head map and a
// fixed-point-free involution sigma; tail(a) = head(sigma(a)), so h = t∘sigma
// holds by construction. Edges are the sigma-orbits {a, sigma(a)}. Loops and
// parallel edges are allowed. Vertices are 0..num_vertices()-1 and arrows
// 0..num_arrows()-1; the numbering is part of the object (labeled graph).
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<int> head, std::vector<int> sigma,
        std::string name = "");

  // Builds the arrow pair (2k, 2k+1) for the k-th listed edge; head(2k) is
  // edges[k].first and head(2k+1) is edges[k].second. Loops repeat the vertex.
  static Graph from_edges(int num_vertices,
                          const std::vector<std::pair<int, int>>& edges,
                          std::string name = "");

  int num_vertices() const { return num_vertices_; }
  int num_arrows() const { return static_cast<int>(head_.size()); }
  int num_edges() const { return num_arrows() / 2; }
  bool empty() const { return num_vertices_ == 0; }

  int head(int a) const { return head_[a]; }
  int tail(int a) const { return head_[sigma_[a]]; }
  int sigma(int a) const { return sigma_[a]; }

  // Edges are indexed by increasing representative arrow (the smaller arrow
  // of the orbit).
  int edge_of(int a) const { return edge_of_[a]; }
  int edge_rep(int e) const { return edge_rep_[e]; }
  bool edge_is_loop(int e) const;
  std::pair<int, int> edge_ends(int e) const;  // (head, tail) of the representative

  // A_v = arrows with head v, in arrow order.
  const std::vector<int>& arrows_at(int v) const { return arrows_at_[v]; }
  int degree(int v) const { return static_cast<int>(arrows_at_[v].size()); }
  int loops_at(int v) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool same_labeled(const Graph& o) const {
    return num_vertices_ == o.num_vertices_ && head_ == o.head_ &&
           sigma_ == o.sigma_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<int> head_;
  std::vector<int> sigma_;
  std::vector<int> edge_of_;
  std::vector<int> edge_rep_;
  std::vector<std::vector<int>> arrows_at_;
  std::string name_;
};

// Directed graph with a linear order on arrows; the arrow index is the order.
class ODGraph {
 public:
  ODGraph() = default;
  ODGraph(int num_vertices, std::vector<int> head, std::vector<int> tail,
          std::string name = "");

  int num_vertices() const { return num_vertices_; }
  int num_arrows() const { return static_cast<int>(head_.size()); }
  bool empty() const { return num_vertices_ == 0; }

  int head(int a) const { return head_[a]; }
  int tail(int a) const { return tail_[a]; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool same_labeled(const ODGraph& o) const {
    return num_vertices_ == o.num_vertices_ && head_ == o.head_ &&
           tail_ == o.tail_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<int> head_;
  std::vector<int> tail_;
  std::string name_;
};

// Underlying graph of an ordered directed graph: arrows become pairs
// (a, +1) -> index 2a and (a, -1) -> index 2a+1, with sigma toggling the
// second factor and head(a, +1) = head(a), head(a, -1) = tail(a).
Graph underlying(const ODGraph& d);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const ODGraph& d);

// Number of edges minus number of vertices plus one. Rejects empty or
// disconnected input.
int genus(const Graph& g);

// Relabeling-invariant encoding that separates isomorphism classes of
// multigraphs. Minimal edge-list encoding over vertex orderings, with vertex
// classes pruned by (degree, loop count). Intended for small graphs.
std::string canonical_form(const Graph& g);
std::string canonical_form(const ODGraph& d);

bool is_isomorphic(const Graph& g, const Graph& h);
bool is_isomorphic(const ODGraph& g, const ODGraph& h);

// Copy of g with vertex v renamed vperm[v] and arrow a renamed aperm[a].
Graph relabeled(const Graph& g, const std::vector<int>& vperm,
                const std::vector<int>& aperm);

// One representative per isomorphism class of nonempty connected multigraphs
// with at most max_edges edges, ordered by (edge count, vertex count,
// canonical form).
std::vector<Graph> enumerate_connected_graphs(int max_edges);

// Same for nonempty connected ordered directed graphs with at most max_arrows
// arrows.
std::vector<ODGraph> enumerate_connected_odgraphs(int max_arrows);

// Standard builders, deterministic labeling.
Graph star_graph(int k);                           // K_{1,k}; star_graph(0) is a point
Graph path_graph(int k);                           // P_k, k edges
Graph cycle_graph(int k);                          // C_k, k >= 1; C_1 = R_1
Graph rose_graph(int k);                           // R_k: one vertex, k loops
Graph complete_graph(int k);                       // K_k
Graph complete_bipartite_graph(int p, int q);      // K_{p,q}
Graph lollipop_graph();                            // L: loop plus a pendant edge

// Planarity of the simplification (loops dropped, parallel edges merged),
// decided at desk scale by searching for K_5 and K_{3,3} minors.
bool is_planar(const Graph& g);

// Text format, one item per line, '#' starts a comment:
//   graph <name>
//   vertex <vid>
//   edge <eid> <head_vid> <tail_vid>
// Each edge line creates the arrow pair (eid:+, eid:-) with sigma swapping
// them and head(eid:+) = head_vid. Throws std::runtime_error on bad input.
Graph parse_graph_text(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

// Ordered directed import of the same format: each edge line contributes the
// two orientations, in file line order with + before -.
ODGraph parse_odgraph_text(std::istream& in);
ODGraph parse_odgraph_text(const std::string& text);

// Recognizes small standard graphs ("*", "R1", "P2", "L", "C2", "K4",
// "K3,3", ...) by canonical form; falls back to "<e>e<v>v" plus a hash tag.
std::string standard_name(const Graph& g);

// Resolves a builder spec ("K5", "C3", "R2", "P4", "L", "K3,3", "*", ...).
std::optional<Graph> graph_from_spec(const std::string& spec);

long long binomial(long long n, long long k);

}  // namespace minorcat
