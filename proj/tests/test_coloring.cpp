#include <doctest.h>

#include <set>
#include <sstream>

#include "perc/coloring.hpp"

using namespace perc;

TEST_CASE("single edge coloring") {
  auto c = proper_edge_coloring_hamming(2, 1);
  CHECK(c.colors.size() == 1);
  CHECK(validate_coloring(materialize(HammingGraph(2, 1)), c).proper);
}

TEST_CASE("validate_coloring catches a clash") {
  GenericGraph triangle = materialize(HammingGraph(3, 1));
  EdgeColoring good;
  good.colors = {1, 2, 3};
  CHECK(validate_coloring(triangle, good).proper);

  EdgeColoring bad;
  bad.colors = {1, 1, 2};
  auto report = validate_coloring(triangle, bad);
  CHECK_FALSE(report.proper);
  REQUIRE(report.violating_vertex.has_value());
  // edges {0,1} and {0,2} share color 1 and meet at vertex 0
  CHECK(*report.violating_vertex == 0);
}

TEST_CASE("coloring domain mismatch is an error") {
  GenericGraph triangle = materialize(HammingGraph(3, 1));
  EdgeColoring short_coloring;
  short_coloring.colors = {1, 2};
  CHECK_THROWS(validate_coloring(triangle, short_coloring));
}

TEST_CASE("hamming coloring proper across the small grid") {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d <= 4; ++d) {
      auto c = proper_edge_coloring_hamming(n, d);
      GenericGraph g = materialize(HammingGraph(n, d));
      CAPTURE(n);
      CAPTURE(d);
      CHECK(validate_coloring(g, c).proper);
    }
  }
}

TEST_CASE("rook graph coloring structure") {
  auto c = proper_edge_coloring_hamming(3, 2);
  GenericGraph g = materialize(HammingGraph(3, 2));
  CHECK(c.colors.size() == 18);
  CHECK(validate_coloring(g, c).proper);
  // 9 cross edges carry gamma products, 9 copy edges carry base colors
  int base = 0, lifted = 0;
  for (int lvl : c.level) (lvl == 1 ? base : lifted)++;
  CHECK(base == 9);
  CHECK(lifted == 9);
  CHECK(c.gamma.size() == 3);
}

TEST_CASE("cube coloring has three gamma-product colors at the top level") {
  auto c = proper_edge_coloring_hamming(2, 3);
  CHECK(c.colors.size() == 12);
  std::set<mpq_class> top_colors;
  for (std::size_t e = 0; e < c.colors.size(); ++e) {
    if (c.level[e] == 3) top_colors.insert(c.colors[e]);
  }
  // one gamma pair per lift level with n = 2: a single product color each,
  // so levels 1..3 partition the 12 edges into 4 + 4 + 4
  CHECK(top_colors.size() == 1);
  std::set<int> levels(c.level.begin(), c.level.end());
  CHECK(levels == std::set<int>{1, 2, 3});
}

TEST_CASE("gamma values distinct, nonzero, products fresh") {
  auto c = proper_edge_coloring_hamming(4, 3);
  std::set<mpq_class> gammas(c.gamma.begin(), c.gamma.end());
  CHECK(gammas.size() == 4);
  for (const auto& g : c.gamma) CHECK(g != 0);
  // colors produced below the top level never collide with top products
  std::set<mpq_class> inherited, top;
  for (std::size_t e = 0; e < c.colors.size(); ++e) {
    (c.level[e] == 3 ? top : inherited).insert(c.colors[e]);
  }
  for (const auto& t : top) CHECK(inherited.count(t) == 0);
}

TEST_CASE("coloring csv export") {
  auto c = proper_edge_coloring_hamming(2, 2);
  GenericGraph g = materialize(HammingGraph(2, 2));
  std::ostringstream out;
  write_coloring_csv(g, c, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "u,v,numerator,denominator");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("fingerprint depends on the colors") {
  auto a = proper_edge_coloring_hamming(3, 2);
  auto b = proper_edge_coloring_hamming(2, 3);
  CHECK(a.fingerprint() != b.fingerprint());
  CHECK(a.fingerprint() == proper_edge_coloring_hamming(3, 2).fingerprint());
}
