#ifndef PERC_CERTIFIER_HPP
#define PERC_CERTIFIER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "perc/coloring.hpp"
#include "perc/formulas.hpp"
#include "perc/graph.hpp"

namespace perc {

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct CertifierLimits {
  std::size_t max_columns = 5000;
  std::size_t max_entry_bits = 8192;
};

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
// Exposed for testing; rows are modified in place.
std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows,
                         std::size_t max_entry_bits = 0);

// dim W_c(g, r): polynomials of degree <= r-1 per vertex whose values agree
// across each edge, measured through the edge-evaluation map.
// dim = rank([constraints; evaluations]) - rank(constraints).
int wc_dimension(const GenericGraph& g, const EdgeColoring& c, int r,
                 const CertifierLimits& limits = {});

struct Certificate {
  int n = 0, d = 0, r = 0;
  std::uint64_t coloring_hash = 0;
  int dim = 0;
  BigCount formula;
  std::string verdict;  // "equal" or "strictly-below"
};

Certificate certify(int n, int d, int r, const CertifierLimits& limits = {});

std::string certificate_json(const Certificate& c);

}  // namespace perc

#endif
