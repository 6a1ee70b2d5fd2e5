#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <random>

#include "perc/constructions.hpp"
#include "perc/formulas.hpp"
#include "perc/percolation.hpp"

using namespace perc;

namespace {

GenericGraph four_cycle() {
  return GenericGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

std::vector<std::uint32_t> active_indices(const std::vector<bool>& active) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < active.size(); ++i) {
    if (active[i]) out.push_back(i);
  }
  return out;
}

// Erdos-Renyi-ish random graph with at most max_edges edges.
GenericGraph random_graph(std::mt19937& rng, std::uint32_t max_edges) {
  std::uniform_int_distribution<std::uint32_t> nv(4, 24);
  std::uint32_t v = nv(rng);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  for (std::uint32_t a = 0; a < v; ++a) {
    for (std::uint32_t b = a + 1; b < v; ++b) all.emplace_back(a, b);
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> ne(
      0, std::min<std::size_t>(all.size(), max_edges));
  all.resize(ne(rng));
  return GenericGraph(v, std::move(all));
}

std::vector<std::uint32_t> random_subset(std::mt19937& rng, std::uint32_t universe) {
  std::vector<std::uint32_t> out;
  if (universe == 0) return out;
  std::uniform_int_distribution<std::uint32_t> size_dist(0, universe);
  std::uint32_t k = size_dist(rng) / 2;
  std::vector<std::uint32_t> idx(universe);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  return idx;
}

std::vector<std::uint32_t> random_permutation(std::mt19937& rng, std::uint32_t universe) {
  std::vector<std::uint32_t> p(universe);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("vertex closure on the 4-cycle") {
  GenericGraph g = four_cycle();
  PercState r1 = close_vertices(g, {0}, 1);
  CHECK(r1.percolated);
  CHECK(r1.closure_size == 4);

  PercState r2 = close_vertices(g, {0}, 2);
  CHECK_FALSE(r2.percolated);
  CHECK(r2.closure_size == 1);

  // opposite corners at r = 2 do percolate
  PercState opp = close_vertices(g, {0, 2}, 2);
  CHECK(opp.percolated);
}

TEST_CASE("edge closure on the 4-cycle") {
  GenericGraph g = four_cycle();
  PercState s = close_edges(g, {0}, 1);
  CHECK(s.percolated);
  CHECK(s.closure_size == 4);
  CHECK(s.rounds.size() == 2);  // both endpoints spread, then the far edge

  PercState empty = close_edges(g, {}, 1);
  CHECK_FALSE(empty.percolated);
  CHECK(empty.closure_size == 0);
  PercState empty2 = close_edges(g, {}, 3);
  CHECK(empty2.closure_size == 0);
}

TEST_CASE("r=0 activates everything in round 1") {
  GenericGraph g = four_cycle();
  PercState v = close_vertices(g, {}, 0);
  CHECK(v.percolated);
  CHECK(v.rounds.size() == 1);
  CHECK(v.rounds[0].size() == 4);
  PercState e = close_edges(g, {2}, 0);
  CHECK(e.percolated);
  CHECK(e.rounds[0].size() == 3);
}

TEST_CASE("constructed seed percolates the rook graph") {
  GenericGraph g = materialize(HammingGraph(3, 2));
  EdgeSeed seed = edge_percolating_set(3, 2, 3);
  CHECK(seed.edges.size() == 10);
  CHECK(me_nested_sum(3, 2, 3) == 10);
  PercState s = close_edges(g, seed.edges, 3);
  CHECK(s.percolated);

  VertexSeed vs = vertex_percolating_set(3, 2, 2);
  std::vector<std::uint32_t> sv(vs.vertices.begin(), vs.vertices.end());
  CHECK(close_vertices(g, sv, 2).percolated);
}

TEST_CASE("full edge seed percolates in zero rounds") {
  GenericGraph g = four_cycle();
  PercState s = close_edges(g, {0, 1, 2, 3}, 2);
  CHECK(s.percolated);
  CHECK(s.rounds.empty());
}

TEST_CASE("closure_with_order equals close_* for fixed orders") {
  GenericGraph g = materialize(HammingGraph(2, 3));
  std::vector<std::uint32_t> seed = {0, 3, 7, 10};
  PercState sync = close_edges(g, seed, 2);

  std::vector<std::uint32_t> identity(g.edge_count());
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(closure_with_order(g, seed, 2, Mode::Edge, identity) == sync.active);

  std::vector<std::uint32_t> reversed(identity.rbegin(), identity.rend());
  CHECK(closure_with_order(g, seed, 2, Mode::Edge, reversed) == sync.active);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    CHECK(closure_with_order(g, seed, 2, Mode::Edge,
                             random_permutation(rng, g.edge_count())) ==
          sync.active);
  }
}

TEST_CASE("round soundness: every activation has enough earlier witnesses") {
  GenericGraph g = materialize(HammingGraph(3, 2));
  EdgeSeed seed = edge_percolating_set(3, 2, 3);
  PercState s = close_edges(g, seed.edges, 3);
  std::vector<bool> before(g.edge_count(), false);
  for (std::uint32_t e : s.seed) before[e] = true;
  for (const auto& round : s.rounds) {
    for (std::uint32_t e : round) {
      auto [u, v] = g.edge(e);
      std::uint32_t best = 0;
      for (std::uint32_t x : {u, v}) {
        std::uint32_t c = 0;
        for (std::uint32_t f : g.incident_edges(x)) c += before[f] ? 1 : 0;
        best = std::max(best, c);
      }
      CHECK(best >= 3);
    }
    for (std::uint32_t e : round) before[e] = true;
  }
}

TEST_CASE("rounds partition closure minus seed") {
  GenericGraph g = materialize(HammingGraph(2, 3));
  VertexSeed vs = vertex_percolating_set(2, 3, 2);
  std::vector<std::uint32_t> seed(vs.vertices.begin(), vs.vertices.end());
  PercState s = close_vertices(g, seed, 2);
  std::vector<int> seen(g.vertex_count(), 0);
  for (std::uint32_t v : s.seed) ++seen[v];
  for (const auto& round : s.rounds) {
    for (std::uint32_t v : round) ++seen[v];
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    CHECK(seen[v] == (s.active[v] ? 1 : 0));
  }
}

TEST_CASE("parallel synchronous kernel matches the serial closure") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    GenericGraph g = random_graph(rng, 120);
    int r = static_cast<int>(rng() % 5);
    auto vseed = random_subset(rng, g.vertex_count());
    PercState sv = close_vertices(g, vseed, r);
    PercState pv = close_sync_parallel(g, vseed, r, Mode::Vertex);
    CHECK(sv.active == pv.active);
    CHECK(sv.rounds == pv.rounds);

    auto eseed = random_subset(rng, g.edge_count());
    PercState se = close_edges(g, eseed, r);
    PercState pe = close_sync_parallel(g, eseed, r, Mode::Edge);
    CHECK(se.active == pe.active);
    CHECK(se.rounds == pe.rounds);
  }
  // and on a structured instance
  GenericGraph g = materialize(HammingGraph(3, 3));
  EdgeSeed seed = edge_percolating_set(3, 3, 4);
  PercState a = close_edges(g, seed.edges, 4);
  PercState b = close_sync_parallel(g, seed.edges, 4, Mode::Edge);
  CHECK(a.active == b.active);
  CHECK(a.rounds == b.rounds);
  CHECK(a.percolated);
}

TEST_CASE("confluence, monotonicity, idempotence on random instances") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    GenericGraph g = random_graph(rng, 200);
    int r = static_cast<int>(rng() % 7);
    Mode mode = (trial % 2 == 0) ? Mode::Edge : Mode::Vertex;
    std::uint32_t universe = mode == Mode::Edge ? g.edge_count() : g.vertex_count();
    auto seed = random_subset(rng, universe);
    auto close = [&](const std::vector<std::uint32_t>& s) {
      return mode == Mode::Edge ? close_edges(g, s, r) : close_vertices(g, s, r);
    };
    PercState base = close(seed);

    // confluence across random orders
    for (int p = 0; p < 5; ++p) {
      CHECK(closure_with_order(g, seed, r, mode, random_permutation(rng, universe)) ==
            base.active);
    }

    // monotonicity: growing the seed grows the closure
    auto bigger = seed;
    auto extra = random_subset(rng, universe);
    bigger.insert(bigger.end(), extra.begin(), extra.end());
    PercState super = close(bigger);
    for (std::uint32_t i = 0; i < universe; ++i) {
      if (base.active[i]) CHECK(super.active[i]);
    }

    // idempotence: closing the closure changes nothing
    PercState again = close(active_indices(base.active));
    CHECK(again.active == base.active);
    CHECK(again.rounds.empty());
  }
}

TEST_CASE("edge counters match a brute recount after closure") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    GenericGraph g = random_graph(rng, 80);
    auto seed = random_subset(rng, g.edge_count());
    int r = 1 + static_cast<int>(rng() % 4);
    PercState s = close_edges(g, seed, r);
    // recount: every vertex either has all incident edges active or fewer
    // than r of them beyond the closure boundary
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      std::uint32_t c = 0, total = 0;
      for (std::uint32_t e : g.incident_edges(v)) {
        c += s.active[e] ? 1 : 0;
        ++total;
      }
      if (c >= static_cast<std::uint32_t>(r)) CHECK(c == total);
    }
  }
}

TEST_CASE("trace json shape") {
  GenericGraph g = four_cycle();
  PercState s = close_edges(g, {0}, 1);
  auto j = nlohmann::json::parse(trace_json(s, "C4"));
  CHECK(j["mode"] == "edge");
  CHECK(j["r"] == 1);
  CHECK(j["percolated"] == true);
  CHECK(j["closure_size"] == 4);
  CHECK(j["seed"].size() == 1);
  CHECK(j["rounds"].size() == 2);
}

TEST_CASE("seed out of range rejected") {
  GenericGraph g = four_cycle();
  CHECK_THROWS(close_vertices(g, {9}, 1));
  CHECK_THROWS(close_edges(g, {4}, 1));
}
