#include "gmsrg/graph.hpp"

#include <algorithm>
#include <string>

#include "gmsrg/error.hpp"

namespace gmsrg {

Graph::Graph(std::vector<Point> labels, std::vector<BitVec> adjacency)
    : labels_(std::move(labels)), adj_(std::move(adjacency)) {
  const std::size_t v = labels_.size();
  if (adj_.size() != v) {
    throw Error(Errc::invalid_graph, "adjacency row count differs from vertex count");
  }
  for (std::size_t i = 0; i + 1 < v; ++i) {
    if (!(labels_[i] < labels_[i + 1])) {
      throw Error(Errc::invalid_graph, "vertex labels must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < v; ++i) {
    if (adj_[i].size() != v) {
      throw Error(Errc::invalid_graph, "adjacency row " + std::to_string(i) +
                                           " has the wrong length");
    }
    if (adj_[i].test(i)) {
      throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (auto j : adj_[i].ones_indices()) {
      if (!adj_[j].test(i)) {
        throw Error(Errc::invalid_graph, "adjacency is not symmetric at (" +
                                             std::to_string(i) + ", " +
                                             std::to_string(j) + ")");
      }
    }
  }
}

Graph Graph::from_edges(std::size_t v,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<Point> labels;
  labels.reserve(v);
  for (std::size_t i = 0; i < v; ++i) labels.push_back(Point{static_cast<std::uint32_t>(i + 1)});
  std::vector<BitVec> adj(v, BitVec(v));
  for (auto [a, b] : edges) {
    if (a >= v || b >= v || a == b) {
      throw Error(Errc::invalid_graph, "bad edge (" + std::to_string(a) + ", " +
                                           std::to_string(b) + ")");
    }
    adj[a].set(b);
    adj[b].set(a);
  }
  return Graph(std::move(labels), std::move(adj));
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : adj_) twice += r.count();
  return twice / 2;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(adj_.size());
  for (const auto& r : adj_) out.push_back(r.count());
  return out;
}

std::optional<std::size_t> Graph::index_of(Point p) const noexcept {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), p);
  if (it == labels_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
  const std::size_t v = vertex_count();
  if (perm.size() != v) throw Error(Errc::invalid_request, "permutation has the wrong size");
  std::vector<std::size_t> seen(v, 0);
  for (auto p : perm) {
    if (p >= v || seen[p]++ != 0) throw Error(Errc::invalid_request, "not a permutation");
  }
  std::vector<BitVec> adj(v, BitVec(v));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if (adjacent(perm[i], perm[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  std::vector<Point> labels;
  labels.reserve(v);
  for (std::size_t i = 0; i < v; ++i) labels.push_back(Point{static_cast<std::uint32_t>(i + 1)});
  return Graph(std::move(labels), std::move(adj));
}

}  // namespace gmsrg
