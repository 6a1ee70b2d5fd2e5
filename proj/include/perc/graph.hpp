#ifndef PERC_GRAPH_HPP
#define PERC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perc {

// Hard cap on addressable vertex counts; larger requests are rejected
// instead of thrashing.
inline constexpr std::uint64_t kMaxVertices = 1ull << 26;

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Implicit representation of the Hamming graph K_n^d.
// Vertex v in [0, n^d) encodes its digit tuple little-endian:
// digit k = (v / n^k) % n. Two vertices are adjacent iff their tuples
// differ in exactly one coordinate.
class HammingGraph {
 public:
  HammingGraph(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t edge_count() const { return edge_count_; }
  int degree() const { return (n_ - 1) * d_; }

  std::vector<int> digits(std::uint64_t v) const;
  std::uint64_t from_digits(const std::vector<int>& digits) const;
  // The (n-1)*d neighbors of v, each differing in one digit.
  std::vector<std::uint64_t> neighbors(std::uint64_t v) const;

  // n^k for 0 <= k <= d
  std::uint64_t stride(int k) const { return strides_[k]; }

 private:
  int n_;
  int d_;
  std::uint64_t vertex_count_;
  std::uint64_t edge_count_;
  std::vector<std::uint64_t> strides_;
};

// Explicit simple undirected graph with a canonical edge index:
// edges sorted lexicographically by (min endpoint, max endpoint).
class GenericGraph {
 public:
  GenericGraph() = default;
  // Edges may arrive in any order and orientation; duplicates and loops
  // are rejected.
  GenericGraph(std::uint32_t vertex_count,
               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const {
    return adjacency_[v];
  }
  const std::vector<std::uint32_t>& incident_edges(std::uint32_t v) const {
    return incident_[v];
  }
  std::pair<std::uint32_t, std::uint32_t> edge(std::uint32_t e) const {
    return edges_[e];
  }
  // Canonical index of {u, v}; throws if not an edge.
  std::uint32_t edge_index(std::uint32_t u, std::uint32_t v) const;
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(adjacency_[v].size());
  }

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::vector<std::uint32_t>> incident_;
};

HammingGraph build_hamming(int n, int d);
GenericGraph materialize(const HammingGraph& h);

// Edge-list text format: header "p <vertices> <edges>", then one
// "e <u> <v>" per edge, 0-indexed.
GenericGraph read_edge_list(std::istream& in);
void write_edge_list(const GenericGraph& g, std::ostream& out);

}  // namespace perc

#endif
