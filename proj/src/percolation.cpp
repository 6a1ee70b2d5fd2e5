#include "perc/percolation.hpp"

#include <algorithm>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace perc {

namespace {

std::size_t universe_size(const GenericGraph& g, Mode mode) {
  return mode == Mode::Vertex ? g.vertex_count() : g.edge_count();
}

void check_seed(const std::vector<std::uint32_t>& seed, std::size_t universe) {
  for (std::uint32_t s : seed) {
    if (s >= universe) throw std::invalid_argument("seed index out of range");
  }
}

void finish(PercState& s, std::size_t universe) {
  s.closure_size = static_cast<std::uint64_t>(
      std::count(s.active.begin(), s.active.end(), true));
  s.percolated = (s.closure_size == universe);
}

// r = 0: the threshold is vacuous, so round 1 activates every remaining
// element no matter the seed.
void activate_all_round_one(PercState& s) {
  std::vector<std::uint32_t> round;
  for (std::uint32_t i = 0; i < s.active.size(); ++i) {
    if (!s.active[i]) {
      s.active[i] = true;
      round.push_back(i);
    }
  }
  if (!round.empty()) s.rounds.push_back(std::move(round));
}

}  // namespace

PercState close_vertices(const GenericGraph& g,
                         const std::vector<std::uint32_t>& seed, int r) {
  check_seed(seed, g.vertex_count());
  PercState s;
  s.mode = Mode::Vertex;
  s.r = r;
  s.seed = seed;
  s.active.assign(g.vertex_count(), false);
  std::vector<std::uint32_t> batch;
  for (std::uint32_t v : seed) {
    if (!s.active[v]) {
      s.active[v] = true;
      batch.push_back(v);
    }
  }
  if (r == 0) {
    activate_all_round_one(s);
    finish(s, g.vertex_count());
    return s;
  }
  std::vector<std::uint32_t> count(g.vertex_count(), 0);
  while (!batch.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : batch) {
      for (std::uint32_t w : g.neighbors(v)) ++count[w];
    }
    for (std::uint32_t v : batch) {
      for (std::uint32_t w : g.neighbors(v)) {
        if (!s.active[w] && count[w] >= static_cast<std::uint32_t>(r)) {
          s.active[w] = true;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    batch = std::move(next);
    if (!batch.empty()) s.rounds.push_back(batch);
  }
  finish(s, g.vertex_count());
  return s;
}

PercState close_edges(const GenericGraph& g,
                      const std::vector<std::uint32_t>& seed, int r) {
  check_seed(seed, g.edge_count());
  PercState s;
  s.mode = Mode::Edge;
  s.r = r;
  s.seed = seed;
  s.active.assign(g.edge_count(), false);
  std::vector<std::uint32_t> batch;
  for (std::uint32_t e : seed) {
    if (!s.active[e]) {
      s.active[e] = true;
      batch.push_back(e);
    }
  }
  if (r == 0) {
    activate_all_round_one(s);
    finish(s, g.edge_count());
    return s;
  }
  // count[v] = active edges incident to v; once it reaches r every inactive
  // edge at v activates in the following round.
  std::vector<std::uint32_t> count(g.vertex_count(), 0);
  std::vector<bool> drained(g.vertex_count(), false);
  while (!batch.empty()) {
    std::vector<std::uint32_t> touched;
    for (std::uint32_t e : batch) {
      auto [u, v] = g.edge(e);
      ++count[u];
      ++count[v];
      touched.push_back(u);
      touched.push_back(v);
    }
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : touched) {
      if (drained[v] || count[v] < static_cast<std::uint32_t>(r)) continue;
      drained[v] = true;
      for (std::uint32_t e : g.incident_edges(v)) {
        if (!s.active[e]) {
          s.active[e] = true;
          next.push_back(e);
        }
      }
    }
    std::sort(next.begin(), next.end());
    batch = std::move(next);
    if (!batch.empty()) s.rounds.push_back(batch);
  }
  finish(s, g.edge_count());
  return s;
}

std::vector<bool> closure_with_order(const GenericGraph& g,
                                     const std::vector<std::uint32_t>& seed,
                                     int r, Mode mode,
                                     const std::vector<std::uint32_t>& permutation) {
  const std::size_t universe = universe_size(g, mode);
  check_seed(seed, universe);
  std::vector<bool> active(universe, false);
  for (std::uint32_t s : seed) active[s] = true;
  if (r == 0) return std::vector<bool>(universe, true);

  auto eligible = [&](std::uint32_t i) {
    if (mode == Mode::Vertex) {
      std::uint32_t c = 0;
      for (std::uint32_t w : g.neighbors(i)) c += active[w] ? 1 : 0;
      return c >= static_cast<std::uint32_t>(r);
    }
    auto [u, v] = g.edge(i);
    for (std::uint32_t x : {u, v}) {
      std::uint32_t c = 0;
      for (std::uint32_t e : g.incident_edges(x)) c += active[e] ? 1 : 0;
      if (c >= static_cast<std::uint32_t>(r)) return true;
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t i : permutation) {
      if (!active[i] && eligible(i)) {
        active[i] = true;
        changed = true;
      }
    }
  }
  return active;
}

PercState close_sync_parallel(const GenericGraph& g,
                              const std::vector<std::uint32_t>& seed, int r,
                              Mode mode) {
  const std::size_t universe = universe_size(g, mode);
  check_seed(seed, universe);
  PercState s;
  s.mode = mode;
  s.r = r;
  s.seed = seed;
  s.active.assign(universe, false);
  std::vector<char> active(universe, 0);
  for (std::uint32_t i : seed) active[i] = 1;
  if (r == 0) {
    for (std::uint32_t i : seed) s.active[i] = true;
    activate_all_round_one(s);
    finish(s, universe);
    return s;
  }

  auto eligible = [&](std::uint32_t i) -> bool {
    if (mode == Mode::Vertex) {
      std::uint32_t c = 0;
      for (std::uint32_t w : g.neighbors(i)) c += active[w];
      return c >= static_cast<std::uint32_t>(r);
    }
    auto [u, v] = g.edge(i);
    for (std::uint32_t x : {u, v}) {
      std::uint32_t c = 0;
      for (std::uint32_t e : g.incident_edges(x)) c += active[e];
      if (c >= static_cast<std::uint32_t>(r)) return true;
    }
    return false;
  };

  const std::int64_t m = static_cast<std::int64_t>(universe);
  while (true) {
    std::vector<std::uint32_t> round;
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<std::uint32_t> local;
#pragma omp for nowait schedule(static)
      for (std::int64_t i = 0; i < m; ++i) {
        if (!active[i] && eligible(static_cast<std::uint32_t>(i))) {
          local.push_back(static_cast<std::uint32_t>(i));
        }
      }
#pragma omp critical
      round.insert(round.end(), local.begin(), local.end());
    }
#else
    for (std::int64_t i = 0; i < m; ++i) {
      if (!active[i] && eligible(static_cast<std::uint32_t>(i))) {
        round.push_back(static_cast<std::uint32_t>(i));
      }
    }
#endif
    if (round.empty()) break;
    std::sort(round.begin(), round.end());
    for (std::uint32_t i : round) active[i] = 1;
    s.rounds.push_back(std::move(round));
  }
  for (std::uint32_t i = 0; i < universe; ++i) s.active[i] = active[i] != 0;
  finish(s, universe);
  return s;
}

std::string trace_json(const PercState& s, const std::string& graph_name) {
  nlohmann::json j;
  j["mode"] = s.mode == Mode::Vertex ? "vertex" : "edge";
  j["n_or_file"] = graph_name;
  j["r"] = s.r;
  j["seed"] = s.seed;
  j["rounds"] = s.rounds;
  j["percolated"] = s.percolated;
  j["closure_size"] = s.closure_size;
  return j.dump();
}

}  // namespace perc
