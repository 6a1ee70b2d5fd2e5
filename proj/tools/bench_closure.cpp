// Compares the serial worklist closure against the OpenMP synchronous
// kernel on mid-size Hamming instances.

#include <chrono>
#include <cstdio>

#include "perc/constructions.hpp"
#include "perc/graph.hpp"
#include "perc/percolation.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_edge(int n, int d, int r) {
  perc::GenericGraph g = perc::materialize(perc::HammingGraph(n, d));
  perc::EdgeSeed seed = perc::edge_percolating_set(n, d, r);

  auto t0 = Clock::now();
  perc::PercState serial = perc::close_edges(g, seed.edges, r);
  double ts = seconds_since(t0);

  t0 = Clock::now();
  perc::PercState parallel =
      perc::close_sync_parallel(g, seed.edges, r, perc::Mode::Edge);
  double tp = seconds_since(t0);

  bool same = serial.active == parallel.active && serial.rounds == parallel.rounds;
  std::printf("edge   K_%d^%d r=%d  |E|=%u  serial %.4fs  parallel %.4fs  %s\n",
              n, d, r, g.edge_count(), ts, tp, same ? "match" : "MISMATCH");
}

void bench_vertex(int n, int d, int r) {
  perc::GenericGraph g = perc::materialize(perc::HammingGraph(n, d));
  perc::VertexSeed seed = perc::vertex_percolating_set(n, d, r);
  std::vector<std::uint32_t> s(seed.vertices.begin(), seed.vertices.end());

  auto t0 = Clock::now();
  perc::PercState serial = perc::close_vertices(g, s, r);
  double ts = seconds_since(t0);

  t0 = Clock::now();
  perc::PercState parallel = perc::close_sync_parallel(g, s, r, perc::Mode::Vertex);
  double tp = seconds_since(t0);

  bool same = serial.active == parallel.active && serial.rounds == parallel.rounds;
  std::printf("vertex K_%d^%d r=%d  |V|=%u  serial %.4fs  parallel %.4fs  %s\n",
              n, d, r, g.vertex_count(), ts, tp, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  bench_vertex(2, 16, 3);
  bench_vertex(3, 10, 3);
  bench_vertex(4, 8, 4);
  bench_edge(2, 12, 4);
  bench_edge(3, 7, 6);
  bench_edge(4, 5, 8);
  return 0;
}
