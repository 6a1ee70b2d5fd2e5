#include "perc/search.hpp"

#include <chrono>
#include <json.hpp>
#include <unordered_set>

namespace perc {

namespace {

bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t universe) {
  const std::size_t k = idx.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t limit = (i + 1 < k) ? idx[i + 1] : universe;
    if (idx[i] + 1 < limit) {
      ++idx[i];
      for (std::size_t j = 0; j < i; ++j) idx[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

std::uint64_t closure_hash(const std::vector<bool>& active) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (active[i]) {
      h ^= i + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
  }
  return h;
}

SearchResult search_minimum(const GenericGraph& g, int r, Mode mode,
                            const SearchBudget& budget,
                            std::uint64_t lower_bound) {
  SearchResult res;
  res.mode = mode;
  res.r = r;
  const std::uint32_t universe =
      mode == Mode::Edge ? g.edge_count() : g.vertex_count();
  auto closure = [&](const std::vector<std::uint32_t>& seed) {
    return mode == Mode::Edge ? close_edges(g, seed, r)
                              : close_vertices(g, seed, r);
  };
  const auto start = std::chrono::steady_clock::now();
  auto out_of_budget = [&]() {
    if (res.nodes > budget.max_nodes) return true;
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() > budget.max_seconds;
  };

  // memo of closures already seen to fail, keyed by closure bitmap hash;
  // symmetric seeds collapse to one entry
  std::unordered_set<std::uint64_t> failed;
  for (std::uint64_t k = lower_bound; k <= universe; ++k) {
    std::vector<std::uint32_t> idx(k);
    for (std::uint64_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
    while (true) {
      ++res.nodes;
      if (out_of_budget()) {
        res.status = "inconclusive";
        return res;
      }
      PercState state = closure(idx);
      if (state.percolated) {
        res.optimum = k;
        res.witness = idx;
        res.status = "optimal";
        return res;
      }
      failed.insert(closure_hash(state.active));
      if (k == 0 || !next_combination(idx, universe)) break;
    }
  }
  res.status = "inconclusive";  // unreachable for valid graphs: full set percolates
  return res;
}

}  // namespace

SearchResult min_edge_percolating(const GenericGraph& g, int r,
                                  const SearchBudget& budget,
                                  std::uint64_t lower_bound) {
  return search_minimum(g, r, Mode::Edge, budget, lower_bound);
}

SearchResult min_vertex_percolating(const GenericGraph& g, int r,
                                    const SearchBudget& budget,
                                    std::uint64_t lower_bound) {
  return search_minimum(g, r, Mode::Vertex, budget, lower_bound);
}

std::string search_json(const SearchResult& s) {
  nlohmann::json j;
  j["mode"] = s.mode == Mode::Edge ? "edge" : "vertex";
  j["r"] = s.r;
  if (s.optimum) {
    j["optimum"] = *s.optimum;
  } else {
    j["optimum"] = nullptr;
  }
  j["witness"] = s.witness;
  j["nodes"] = s.nodes;
  j["status"] = s.status;
  return j.dump();
}

}  // namespace perc
