#include <doctest.h>

#include <json.hpp>

#include "perc/certifier.hpp"
#include "perc/formulas.hpp"
#include "perc/search.hpp"

using namespace perc;

namespace {

GenericGraph four_cycle() {
  return GenericGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

}  // namespace

TEST_CASE("edge search on the 4-cycle") {
  GenericGraph g = four_cycle();
  SearchResult r1 = min_edge_percolating(g, 1);
  CHECK(r1.status == "optimal");
  CHECK(*r1.optimum == 1);

  // r equals the max degree, so every edge is needed
  SearchResult r2 = min_edge_percolating(g, 2);
  CHECK(*r2.optimum == 4);
}

TEST_CASE("vertex search basics") {
  GenericGraph k5 = materialize(HammingGraph(5, 1));
  SearchResult one = min_vertex_percolating(k5, 1);
  CHECK(*one.optimum == 1);

  GenericGraph g = four_cycle();
  SearchResult two = min_vertex_percolating(g, 2);
  CHECK(*two.optimum == 2);
  // witness must be opposite corners
  REQUIRE(two.witness.size() == 2);
  CHECK((two.witness[1] - two.witness[0]) == 2);
}

TEST_CASE("witness validity and exhaustiveness below the optimum") {
  GenericGraph g = materialize(HammingGraph(2, 2));
  for (int r = 0; r <= 2; ++r) {
    SearchResult res = min_edge_percolating(g, r);
    REQUIRE(res.status == "optimal");
    CHECK(close_edges(g, res.witness, r).percolated);
    CHECK(res.witness.size() == *res.optimum);
    CHECK(BigCount(*res.optimum) == me_value(2, 2, r).first);
  }
}

TEST_CASE("oracle agreement on exhaustive Hamming instances") {
  struct Inst {
    int n, d;
  };
  for (Inst inst : {Inst{2, 1}, Inst{2, 2}, Inst{3, 1}, Inst{4, 1}, Inst{2, 3}}) {
    GenericGraph g = materialize(HammingGraph(inst.n, inst.d));
    for (int r = 0; r <= (inst.n - 1) * inst.d; ++r) {
      CAPTURE(inst.n);
      CAPTURE(inst.d);
      CAPTURE(r);
      SearchResult res = min_edge_percolating(g, r);
      REQUIRE(res.status == "optimal");
      CHECK(BigCount(*res.optimum) == me_nested_sum(inst.n, inst.d, r));
    }
  }
}

TEST_CASE("sandwich bounds hold for exhaustive vertex optima") {
  struct Inst {
    int n, d;
  };
  for (Inst inst : {Inst{2, 2}, Inst{3, 1}, Inst{4, 1}, Inst{2, 3}}) {
    GenericGraph g = materialize(HammingGraph(inst.n, inst.d));
    for (int r = 0; r <= (inst.n - 1) * inst.d; ++r) {
      SearchResult res = min_vertex_percolating(g, r);
      REQUIRE(res.status == "optimal");
      auto [lo, hi] = m_bounds(inst.n, inst.d, r);
      CAPTURE(inst.n);
      CAPTURE(inst.d);
      CAPTURE(r);
      CHECK(BigCount(*res.optimum) >= lo);
      CHECK(BigCount(*res.optimum) <= hi);
    }
  }
}

TEST_CASE("branch-and-bound on the rook graph seeded by the algebraic bound") {
  GenericGraph g = materialize(HammingGraph(3, 2));
  Certificate cert = certify(3, 2, 2);
  SearchResult res =
      min_edge_percolating(g, 2, {}, static_cast<std::uint64_t>(cert.dim));
  REQUIRE(res.status == "optimal");
  CHECK(*res.optimum == 4);
  CHECK(close_edges(g, res.witness, 2).percolated);
}

TEST_CASE("budget exhaustion reports inconclusive") {
  GenericGraph g = materialize(HammingGraph(3, 2));
  SearchBudget tiny;
  tiny.max_nodes = 5;
  SearchResult res = min_edge_percolating(g, 3, tiny);
  CHECK(res.status == "inconclusive");
  CHECK_FALSE(res.optimum.has_value());
}

TEST_CASE("search json shape") {
  GenericGraph g = four_cycle();
  SearchResult res = min_edge_percolating(g, 1);
  auto j = nlohmann::json::parse(search_json(res));
  CHECK(j["mode"] == "edge");
  CHECK(j["optimum"] == 1);
  CHECK(j["status"] == "optimal");
  CHECK(j["nodes"].get<std::uint64_t>() >= 1);

  SearchBudget tiny;
  tiny.max_nodes = 0;
  auto j2 = nlohmann::json::parse(search_json(min_edge_percolating(g, 2, tiny)));
  CHECK(j2["optimum"].is_null());
}
