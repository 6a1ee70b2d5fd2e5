#ifndef PERC_COLORING_HPP
#define PERC_COLORING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

// Proper edge coloring with exact rational colors. For Hamming graphs the
// recursive construction keeps every color a positive integer: the base
// palette of K_n uses small integers and each lift level assigns products
// gamma_i * gamma_j of fresh primes to the cross edges.
struct EdgeColoring {
  std::vector<mpq_class> colors;       // indexed by canonical edge index
  std::vector<mpq_class> gamma;        // last level's gamma vector (empty for d=1)
  std::vector<int> level;              // construction level that produced each color

  // FNV-1a over the canonical color strings; identifies the coloring in
  // certificates.
  std::uint64_t fingerprint() const;
};

struct ColoringReport {
  bool proper = true;
  // First vertex with two incident edges of equal color, if any.
  std::optional<std::uint32_t> violating_vertex;
};

EdgeColoring proper_edge_coloring_hamming(int n, int d);

ColoringReport validate_coloring(const GenericGraph& g, const EdgeColoring& c);

// CSV "u,v,numerator,denominator", one row per edge.
void write_coloring_csv(const GenericGraph& g, const EdgeColoring& c,
                        std::ostream& out);

}  // namespace perc

#endif
