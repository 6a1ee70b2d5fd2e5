#include "perc/coloring.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace perc {

std::uint64_t EdgeColoring::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= ',';
    h *= 1099511628211ull;
  };
  for (const auto& c : colors) mix(c.get_str());
  return h;
}

namespace {

// Proper edge coloring of K_n by the circle method. Colors are the
// integers 1..n for odd n and 1..n-1 for even n.
mpq_class base_color(int n, int i, int j) {
  if (n % 2 == 1) return mpq_class(((i + j) % n) + 1);
  int m = n - 1;  // odd
  if (j == m) return mpq_class(i + 1);
  if (i == m) return mpq_class(j + 1);
  int inv2 = (m + 1) / 2;
  return mpq_class(((i + j) % m) * inv2 % m + 1);
}

}  // namespace

EdgeColoring proper_edge_coloring_hamming(int n, int d) {
  if (d < 1) throw std::invalid_argument("coloring requires d >= 1");
  HammingGraph h(n, d);

  // Base palette maximum, then one gamma vector of fresh primes per lift
  // level; unique factorization keeps the gamma products distinct from
  // each other and from every inherited color.
  mpz_class max_color = (n % 2 == 1) ? n : n - 1;
  std::vector<std::vector<mpz_class>> gammas;  // gammas[l] lifts dim l+1 -> l+2
  for (int lvl = 2; lvl <= d; ++lvl) {
    std::vector<mpz_class> g(n);
    mpz_class p = max_color;
    for (int i = 0; i < n; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      g[i] = p;
    }
    max_color = g[n - 2] * g[n - 1];
    gammas.push_back(std::move(g));
  }

  GenericGraph graph = materialize(h);
  EdgeColoring out;
  out.colors.resize(graph.edge_count());
  out.level.resize(graph.edge_count());
  for (std::uint32_t e = 0; e < graph.edge_count(); ++e) {
    auto [u, v] = graph.edge(e);
    // Find the single differing coordinate.
    int coord = -1, du = 0, dv = 0;
    std::uint64_t a = u, b = v;
    for (int k = 0; k < d; ++k) {
      int da = static_cast<int>(a % n), db = static_cast<int>(b % n);
      if (da != db) {
        coord = k;
        du = da;
        dv = db;
      }
      a /= n;
      b /= n;
    }
    if (coord == 0) {
      out.colors[e] = base_color(n, du, dv);
      out.level[e] = 1;
    } else {
      const auto& g = gammas[coord - 1];
      out.colors[e] = mpq_class(g[du] * g[dv]);
      out.level[e] = coord + 1;
    }
  }
  if (!gammas.empty()) {
    for (const auto& g : gammas.back()) out.gamma.emplace_back(g);
  }
  return out;
}

ColoringReport validate_coloring(const GenericGraph& g, const EdgeColoring& c) {
  if (c.colors.size() != g.edge_count()) {
    throw std::invalid_argument("coloring does not cover the edge set");
  }
  ColoringReport report;
  std::vector<mpq_class> seen;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    seen.clear();
    for (std::uint32_t e : g.incident_edges(v)) seen.push_back(c.colors[e]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      report.proper = false;
      report.violating_vertex = v;
      return report;
    }
  }
  return report;
}

void write_coloring_csv(const GenericGraph& g, const EdgeColoring& c,
                        std::ostream& out) {
  out << "u,v,numerator,denominator\n";
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    out << u << "," << v << "," << c.colors[e].get_num() << ","
        << c.colors[e].get_den() << "\n";
  }
}

}  // namespace perc
