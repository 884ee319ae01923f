#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gmsrg/bits.hpp"
#include "gmsrg/gf2geom.hpp"

namespace gmsrg {

/// Simple undirected graph whose vertex i carries the label labels()[i].
/// Labels are strictly increasing; adjacency rows are bit-packed and the
/// adjacency matrix is symmetric with zero diagonal.
class Graph {
 public:
  Graph() = default;
  /// Validates labels and adjacency; throws invalid_graph on violation.
  Graph(std::vector<Point> labels, std::vector<BitVec> adjacency);

  /// Graph on v vertices labelled 1..v.
  static Graph from_edges(std::size_t v,
                          std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::span<const Point> labels() const noexcept { return labels_; }
  Point label(std::size_t i) const noexcept { return labels_[i]; }
  const BitVec& row(std::size_t i) const noexcept { return adj_[i]; }
  std::span<const BitVec> rows() const noexcept { return adj_; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept { return adj_[i].test(j); }
  std::size_t degree(std::size_t i) const noexcept { return adj_[i].count(); }
  std::size_t edge_count() const noexcept;
  std::vector<std::size_t> degree_sequence() const;

  std::optional<std::size_t> index_of(Point p) const noexcept;

  /// Relabelled copy: vertex i of the result is vertex perm[i] of *this.
  /// Labels of the result are 1..v; used to build isomorphic copies.
  Graph permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Point> labels_;
  std::vector<BitVec> adj_;
};

}  // namespace gmsrg
