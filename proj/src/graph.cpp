#include "perc/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace perc {

HammingGraph::HammingGraph(int n, int d) : n_(n), d_(d) {
  if (n < 2) throw std::invalid_argument("alphabet size n must be >= 2");
  if (d < 0) throw std::invalid_argument("dimension d must be >= 0");
  strides_.resize(d + 1);
  strides_[0] = 1;
  for (int k = 1; k <= d; ++k) {
    if (strides_[k - 1] > kMaxVertices / static_cast<std::uint64_t>(n)) {
      throw CapacityError("K_" + std::to_string(n) + "^" + std::to_string(d) +
                          " exceeds the vertex cap of 2^26");
    }
    strides_[k] = strides_[k - 1] * static_cast<std::uint64_t>(n);
  }
  vertex_count_ = strides_[d];
  if (vertex_count_ > kMaxVertices) {
    throw CapacityError("K_" + std::to_string(n) + "^" + std::to_string(d) +
                        " exceeds the vertex cap of 2^26");
  }
  edge_count_ = vertex_count_ * static_cast<std::uint64_t>(n - 1) *
                static_cast<std::uint64_t>(d) / 2;
}

std::vector<int> HammingGraph::digits(std::uint64_t v) const {
  std::vector<int> out(d_);
  for (int k = 0; k < d_; ++k) {
    out[k] = static_cast<int>(v % n_);
    v /= n_;
  }
  return out;
}

std::uint64_t HammingGraph::from_digits(const std::vector<int>& digits) const {
  std::uint64_t v = 0;
  for (int k = d_ - 1; k >= 0; --k) v = v * n_ + digits[k];
  return v;
}

std::vector<std::uint64_t> HammingGraph::neighbors(std::uint64_t v) const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (int k = 0; k < d_; ++k) {
    std::uint64_t digit = (v / strides_[k]) % n_;
    std::uint64_t base = v - digit * strides_[k];
    for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(n_); ++a) {
      if (a != digit) out.push_back(base + a * strides_[k]);
    }
  }
  return out;
}

GenericGraph::GenericGraph(
    std::uint32_t vertex_count,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  adjacency_.assign(vertex_count_, {});
  incident_.assign(vertex_count_, {});
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  for (auto& lst : adjacency_) std::sort(lst.begin(), lst.end());
}

std::uint32_t GenericGraph::edge_index(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) {
    throw std::invalid_argument("not an edge: {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  return static_cast<std::uint32_t>(it - edges_.begin());
}

bool GenericGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_ || u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

HammingGraph build_hamming(int n, int d) { return HammingGraph(n, d); }

GenericGraph materialize(const HammingGraph& h) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(h.edge_count());
  for (std::uint64_t v = 0; v < h.vertex_count(); ++v) {
    for (std::uint64_t w : h.neighbors(v)) {
      if (v < w) edges.emplace_back(static_cast<std::uint32_t>(v),
                                    static_cast<std::uint32_t>(w));
    }
  }
  return GenericGraph(static_cast<std::uint32_t>(h.vertex_count()),
                      std::move(edges));
}

GenericGraph read_edge_list(std::istream& in) {
  std::string line;
  std::uint32_t nv = 0, ne = 0;
  bool have_header = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 'p') {
      if (!(ls >> nv >> ne)) throw std::invalid_argument("bad header line");
      have_header = true;
      edges.reserve(ne);
    } else if (tag == 'e') {
      std::uint32_t u, v;
      if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line");
      edges.emplace_back(u, v);
    } else {
      throw std::invalid_argument("unrecognized line: " + line);
    }
  }
  if (!have_header) throw std::invalid_argument("missing 'p' header");
  if (edges.size() != ne) throw std::invalid_argument("edge count mismatch");
  return GenericGraph(nv, std::move(edges));
}

void write_edge_list(const GenericGraph& g, std::ostream& out) {
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    out << "e " << u << " " << v << "\n";
  }
}

}  // namespace perc
