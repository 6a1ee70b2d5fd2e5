#ifndef PERC_CONSTRUCTIONS_HPP
#define PERC_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

// Recursive edge seed: per layer of the last coordinate, the sub-seed for
// K_n^{d-1} at the reduced threshold, plus the clique-prefix cross edges.
struct EdgeSeed {
  int n = 0, d = 0, r = 0;
  std::vector<std::uint32_t> edges;  // canonical edge indices in K_n^d
  // provenance: edges contributed per layer, then the cross-edge block
  std::vector<std::uint64_t> layer_sizes;
  std::uint64_t cross_edges = 0;
  long g = 0;
};

struct CoverFamily {
  int d = 0, r = 0;
  std::vector<std::vector<int>> blocks;  // r-subsets of {0..d-1}
  // |F| / ((1/r) C(d, r-1)), the asymptotic quality target
  double greedy_ratio = 0.0;
};

struct VertexSeed {
  int n = 0, d = 0, r = 0;
  std::vector<std::uint64_t> vertices;
  std::vector<std::uint64_t> cover_part;   // U: characteristic vectors of blocks
  std::vector<std::uint64_t> weight_part;  // W: all vertices of weight r-2
};

// Percolating edge seed of size m_e(K_n^d, r); r > (n-1)d yields all edges.
EdgeSeed edge_percolating_set(int n, int d, int r);

// Greedy covering design: r-subsets of {0..d-1} covering every
// (r-1)-subset. Ties break to the lexicographically smallest block.
CoverFamily cover_family(int d, int r);

// U + W seed for the r-neighbor process on K_n^d.  Requires d >= r >= 1 and,
// for r >= 3, (n-1)(d-r+3) >= r so that vertices below weight r-2 can
// activate upward; outside that range the seed provably does not percolate.
VertexSeed vertex_percolating_set(int n, int d, int r);

std::string seed_json(const EdgeSeed& s);
std::string seed_json(const VertexSeed& s);

}  // namespace perc

#endif
