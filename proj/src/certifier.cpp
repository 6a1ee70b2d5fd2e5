#include "perc/certifier.hpp"

#include <algorithm>
#include <json.hpp>

namespace perc {

std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows,
                         std::size_t max_entry_bits) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    // pivot: nonzero entry of minimal bit length, to curb growth
    std::size_t pivot = rows.size();
    std::size_t pivot_bits = 0;
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      std::size_t bits = mpz_sizeinbase(rows[i][col].get_mpz_t(), 2);
      if (pivot == rows.size() || bits < pivot_bits) {
        pivot = i;
        pivot_bits = bits;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpz_class& p = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const mpz_class factor = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        mpz_class t = p * rows[i][j] - factor * rows[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (max_entry_bits &&
            mpz_sizeinbase(t.get_mpz_t(), 2) > max_entry_bits) {
          throw BudgetError("integer_rank: entry exceeded the bit-length cap");
        }
        rows[i][j] = std::move(t);
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

namespace {

// One constraint/evaluation row of the polynomial system. Each vertex
// owns a block of r coefficient columns; the row holds powers of the edge
// color, cleared to integers by scaling with den(c)^(r-1).
void fill_power_block(std::vector<mpz_class>& row, std::size_t block_start,
                      const mpq_class& color, int r, int sign) {
  mpz_class num = color.get_num();
  mpz_class den = color.get_den();
  // den^(r-1-t) * num^t for t = 0..r-1
  std::vector<mpz_class> den_pow(r), num_pow(r);
  den_pow[0] = 1;
  num_pow[0] = 1;
  for (int t = 1; t < r; ++t) {
    den_pow[t] = den_pow[t - 1] * den;
    num_pow[t] = num_pow[t - 1] * num;
  }
  for (int t = 0; t < r; ++t) {
    row[block_start + t] += sign * num_pow[t] * den_pow[r - 1 - t];
  }
}

}  // namespace

int wc_dimension(const GenericGraph& g, const EdgeColoring& c, int r,
                 const CertifierLimits& limits) {
  if (r < 0) throw std::invalid_argument("wc_dimension: r must be >= 0");
  if (r == 0) return 0;  // only the zero polynomial, W_c = {0}
  auto report = validate_coloring(g, c);
  if (!report.proper) throw std::invalid_argument("wc_dimension: coloring is not proper");

  const std::size_t cols = static_cast<std::size_t>(r) * g.vertex_count();
  if (cols > limits.max_columns) {
    throw BudgetError("wc_dimension: column count exceeds the budget");
  }

  std::vector<std::vector<mpz_class>> constraints;
  std::vector<std::vector<mpz_class>> stacked;
  constraints.reserve(g.edge_count());
  stacked.reserve(2 * g.edge_count());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    std::vector<mpz_class> match(cols, 0);
    fill_power_block(match, static_cast<std::size_t>(u) * r, c.colors[e], r, 1);
    fill_power_block(match, static_cast<std::size_t>(v) * r, c.colors[e], r, -1);
    std::vector<mpz_class> eval(cols, 0);
    fill_power_block(eval, static_cast<std::size_t>(u) * r, c.colors[e], r, 1);
    constraints.push_back(match);
    stacked.push_back(std::move(match));
    stacked.push_back(std::move(eval));
  }
  std::size_t rank_m = integer_rank(std::move(constraints), limits.max_entry_bits);
  std::size_t rank_stacked = integer_rank(std::move(stacked), limits.max_entry_bits);
  return static_cast<int>(rank_stacked - rank_m);
}

Certificate certify(int n, int d, int r, const CertifierLimits& limits) {
  if (d < 1) throw std::invalid_argument("certify: requires d >= 1");
  Certificate cert;
  cert.n = n;
  cert.d = d;
  cert.r = r;
  EdgeColoring coloring = proper_edge_coloring_hamming(n, d);
  cert.coloring_hash = coloring.fingerprint();
  GenericGraph g = materialize(HammingGraph(n, d));
  cert.dim = wc_dimension(g, coloring, r, limits);
  cert.formula = me_value(n, d, r).first;
  if (cert.formula < cert.dim) {
    // the dimension can never exceed the proved value; this would be a bug
    throw std::logic_error("certify: dimension exceeds the formula value");
  }
  cert.verdict = (cert.formula == cert.dim) ? "equal" : "strictly-below";
  return cert;
}

std::string certificate_json(const Certificate& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["r"] = c.r;
  j["coloring_hash"] = c.coloring_hash;
  j["dim"] = c.dim;
  j["formula"] = c.formula.get_str();
  j["verdict"] = c.verdict;
  return j.dump();
}

}  // namespace perc
