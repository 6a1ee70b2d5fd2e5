#ifndef PERC_PERCOLATION_HPP
#define PERC_PERCOLATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

enum class Mode { Vertex, Edge };

// State of one bootstrap percolation run. `rounds` records the indices
// newly activated per synchronous round; the seed itself is round 0.
struct PercState {
  Mode mode = Mode::Vertex;
  int r = 0;
  std::vector<bool> active;                       // over vertex or edge indices
  std::vector<std::uint32_t> seed;
  std::vector<std::vector<std::uint32_t>> rounds; // rounds[t] = new in round t+1
  bool percolated = false;
  std::uint64_t closure_size = 0;
};

// r-neighbor process: an inactive vertex with >= r active neighbors
// activates. r = 0 activates everything in round 1.
PercState close_vertices(const GenericGraph& g,
                         const std::vector<std::uint32_t>& seed, int r);

// r-edge (S_{r+1}) process: an inactive edge activates when one of its
// endpoints is incident to >= r active edges.
PercState close_edges(const GenericGraph& g,
                      const std::vector<std::uint32_t>& seed, int r);

// Asynchronous closure processing activation candidates in the order given
// by `permutation` (a permutation of all vertex/edge indices). The final
// active set is order-independent; used to test confluence.
std::vector<bool> closure_with_order(const GenericGraph& g,
                                     const std::vector<std::uint32_t>& seed,
                                     int r, Mode mode,
                                     const std::vector<std::uint32_t>& permutation);

// Synchronous round-by-round closure with an OpenMP-parallel scan per
// round. Produces the same state as close_vertices/close_edges; kept as a
// separate kernel so the serial worklist version remains the reference.
PercState close_sync_parallel(const GenericGraph& g,
                              const std::vector<std::uint32_t>& seed, int r,
                              Mode mode);

std::string trace_json(const PercState& s, const std::string& graph_name);

}  // namespace perc

#endif
