#include "perc/constructions.hpp"

#include <algorithm>
#include <json.hpp>

#include "perc/formulas.hpp"

namespace perc {

namespace {

using VertexPair = std::pair<std::uint64_t, std::uint64_t>;

std::vector<VertexPair> all_edges(int n, int d) {
  HammingGraph h(n, d);
  std::vector<VertexPair> out;
  out.reserve(h.edge_count());
  for (std::uint64_t v = 0; v < h.vertex_count(); ++v) {
    for (std::uint64_t w : h.neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

// Seed of the (r)-edge process on K_n^d as vertex pairs. Layers are taken
// along the last coordinate; layer i carries the minimum seed at threshold
// r - i, and the first g layers are tied together by the per-column cross
// edges.
std::vector<VertexPair> edge_seed_pairs(int n, int d, int r) {
  if (r < 0 || d == 0) return {};
  if (r > (n - 1) * d) return all_edges(n, d);
  std::vector<VertexPair> out;
  std::uint64_t stride = 1;
  for (int k = 0; k < d - 1; ++k) stride *= n;
  for (int i = 0; i < n; ++i) {
    std::uint64_t offset = stride * static_cast<std::uint64_t>(i);
    for (auto [u, v] : edge_seed_pairs(n, d - 1, r - i)) {
      out.emplace_back(u + offset, v + offset);
    }
  }
  long g = g_parameter(n, d, r).g;
  for (std::uint64_t v = 0; v < stride; ++v) {
    for (long i = 0; i < g; ++i) {
      for (long j = i + 1; j < g; ++j) {
        out.emplace_back(v + stride * i, v + stride * j);
      }
    }
  }
  return out;
}

void combinations(int d, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int start, int pos) {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= d - (k - pos); ++i) {
      cur[pos] = i;
      rec(i + 1, pos + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

EdgeSeed edge_percolating_set(int n, int d, int r) {
  if (n < 2 || d < 0) throw std::invalid_argument("edge_percolating_set: bad parameters");
  EdgeSeed seed;
  seed.n = n;
  seed.d = d;
  seed.r = r;
  if (d == 0) return seed;

  GenericGraph g = materialize(HammingGraph(n, d));
  std::vector<VertexPair> pairs;
  if (r > (n - 1) * d || r < 0) {
    pairs = edge_seed_pairs(n, d, r);
    seed.layer_sizes.assign(n, 0);
    seed.g = (r > (n - 1) * d) ? n : 0;
  } else {
    std::uint64_t stride = 1;
    for (int k = 0; k < d - 1; ++k) stride *= n;
    for (int i = 0; i < n; ++i) {
      auto sub = edge_seed_pairs(n, d - 1, r - i);
      seed.layer_sizes.push_back(sub.size());
      std::uint64_t offset = stride * static_cast<std::uint64_t>(i);
      for (auto [u, v] : sub) pairs.emplace_back(u + offset, v + offset);
    }
    seed.g = g_parameter(n, d, r).g;
    for (std::uint64_t v = 0; v < stride; ++v) {
      for (long i = 0; i < seed.g; ++i) {
        for (long j = i + 1; j < seed.g; ++j) {
          pairs.emplace_back(v + stride * i, v + stride * j);
          ++seed.cross_edges;
        }
      }
    }
  }
  seed.edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    seed.edges.push_back(g.edge_index(static_cast<std::uint32_t>(u),
                                      static_cast<std::uint32_t>(v)));
  }
  std::sort(seed.edges.begin(), seed.edges.end());
  if (std::adjacent_find(seed.edges.begin(), seed.edges.end()) != seed.edges.end()) {
    throw std::logic_error("edge_percolating_set produced a duplicate edge");
  }
  return seed;
}

CoverFamily cover_family(int d, int r) {
  if (r < 1 || r > d) throw std::invalid_argument("cover_family: need 1 <= r <= d");
  CoverFamily fam;
  fam.d = d;
  fam.r = r;

  std::vector<std::vector<int>> blocks;
  combinations(d, r, blocks);
  std::vector<std::vector<int>> targets;
  combinations(d, r - 1, targets);  // one empty target for r = 1

  // target subset -> index
  auto target_index = [&](const std::vector<int>& t) {
    return static_cast<std::size_t>(
        std::lower_bound(targets.begin(), targets.end(), t) - targets.begin());
  };
  // per block, indices of the r targets it covers
  std::vector<std::vector<std::size_t>> covers(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<int> t(blocks[b].begin(), blocks[b].end());
    for (int skip = 0; skip < r; ++skip) {
      std::vector<int> sub;
      for (int i = 0; i < r; ++i) {
        if (i != skip) sub.push_back(blocks[b][i]);
      }
      covers[b].push_back(target_index(sub));
    }
    std::sort(covers[b].begin(), covers[b].end());
    covers[b].erase(std::unique(covers[b].begin(), covers[b].end()), covers[b].end());
  }

  std::vector<bool> covered(targets.size(), false);
  std::size_t remaining = targets.size();
  while (remaining > 0) {
    std::size_t best = blocks.size();
    std::size_t best_gain = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::size_t gain = 0;
      for (std::size_t t : covers[b]) gain += covered[t] ? 0 : 1;
      if (gain > best_gain) {  // lexicographic tie-break: first wins
        best_gain = gain;
        best = b;
      }
    }
    if (best == blocks.size()) throw std::logic_error("cover_family: greedy stalled");
    for (std::size_t t : covers[best]) {
      if (!covered[t]) {
        covered[t] = true;
        --remaining;
      }
    }
    fam.blocks.push_back(blocks[best]);
  }
  std::sort(fam.blocks.begin(), fam.blocks.end());
  double target = binom(d, r - 1).get_d() / static_cast<double>(r);
  fam.greedy_ratio = static_cast<double>(fam.blocks.size()) / target;
  return fam;
}

VertexSeed vertex_percolating_set(int n, int d, int r) {
  if (n < 2 || r < 1 || d < r) {
    throw std::invalid_argument("vertex_percolating_set: need n >= 2, 1 <= r <= d");
  }
  if (r >= 3 && static_cast<long>(n - 1) * (d - r + 3) < r) {
    // weight-(r-3) vertices would have fewer than r active up-neighbors, so
    // the closure stalls below weight r-2
    throw std::invalid_argument(
        "vertex_percolating_set: need (n-1)(d-r+3) >= r for the seed to percolate");
  }
  HammingGraph h(n, d);  // enforces the capacity cap
  VertexSeed seed;
  seed.n = n;
  seed.d = d;
  seed.r = r;

  for (const auto& block : cover_family(d, r).blocks) {
    std::uint64_t v = 0;
    for (int k : block) v += h.stride(k);
    seed.cover_part.push_back(v);
  }

  if (r >= 2) {
    // all vertices with exactly r-2 nonzero digits
    std::vector<std::vector<int>> supports;
    combinations(d, r - 2, supports);
    for (const auto& support : supports) {
      std::vector<int> digit(support.size(), 1);
      while (true) {
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < support.size(); ++k) {
          v += h.stride(support[k]) * static_cast<std::uint64_t>(digit[k]);
        }
        seed.weight_part.push_back(v);
        std::size_t pos = 0;
        while (pos < digit.size() && digit[pos] == n - 1) digit[pos++] = 1;
        if (pos == digit.size()) break;
        ++digit[pos];
      }
    }
  }

  seed.vertices = seed.cover_part;
  seed.vertices.insert(seed.vertices.end(), seed.weight_part.begin(),
                       seed.weight_part.end());
  std::sort(seed.vertices.begin(), seed.vertices.end());
  return seed;
}

std::string seed_json(const EdgeSeed& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["d"] = s.d;
  j["r"] = s.r;
  j["mode"] = "edge";
  j["indices"] = s.edges;
  j["size"] = s.edges.size();
  j["provenance"] = {{"layer_sizes", s.layer_sizes},
                     {"cross_edges", s.cross_edges},
                     {"g", s.g}};
  return j.dump();
}

std::string seed_json(const VertexSeed& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["d"] = s.d;
  j["r"] = s.r;
  j["mode"] = "vertex";
  j["indices"] = s.vertices;
  j["size"] = s.vertices.size();
  j["provenance"] = {{"cover_part", s.cover_part},
                     {"weight_part", s.weight_part}};
  return j.dump();
}

}  // namespace perc
