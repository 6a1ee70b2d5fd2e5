#ifndef PERC_SEARCH_HPP
#define PERC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perc/graph.hpp"
#include "perc/percolation.hpp"

namespace perc {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 600.0;
};

struct SearchResult {
  Mode mode = Mode::Edge;
  int r = 0;
  // Exact optimum when status == "optimal"; search never guesses.
  std::optional<std::uint64_t> optimum;
  std::vector<std::uint32_t> witness;
  std::uint64_t nodes = 0;
  std::string status;  // "optimal" or "inconclusive"
};

// Minimum percolating seed by iterative deepening on the seed size,
// enumerating k-subsets in colex order. `lower_bound` lets a caller seed
// the search with an externally proved bound (e.g. the algebraic one).
SearchResult min_edge_percolating(const GenericGraph& g, int r,
                                  const SearchBudget& budget = {},
                                  std::uint64_t lower_bound = 0);

SearchResult min_vertex_percolating(const GenericGraph& g, int r,
                                    const SearchBudget& budget = {},
                                    std::uint64_t lower_bound = 0);

std::string search_json(const SearchResult& s);

}  // namespace perc

#endif
