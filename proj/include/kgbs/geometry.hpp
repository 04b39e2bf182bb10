#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "kgbs/common.hpp"

namespace kgbs {

/// Euclidean distances between the columns of `a` (dim x p) and the columns
/// of `b` (dim x q); returns p x q.
Matrix pairwise_distances(const Matrix& a, const Matrix& b);

/// Labeled-to-unlabeled distance table over a view whose first `l` columns
/// are labeled. `sigma` is the graph bandwidth: the mean of all l*(n-l)
/// entries.
struct DistanceIndex {
  Matrix labeled_to_unlabeled;  // l x (n - l)
  double sigma = 0.0;

  Index num_labeled() const { return labeled_to_unlabeled.rows(); }
  Index num_unlabeled() const { return labeled_to_unlabeled.cols(); }
};

DistanceIndex make_distance_index(const Matrix& features, Index num_labeled);

/// Unlabeled positions (0-based within the unlabeled block) of the k nearest
/// neighbours of labeled instance `labeled_index`, nearest first; equal
/// distances are ordered by the smaller unlabeled index.
std::vector<Index> knn_unlabeled(Index k, Index labeled_index, const DistanceIndex& dist);

/// Mean distance to the K nearest unlabeled neighbours (density proxy).
double avg_knn_distance(Index k, Index labeled_index, const DistanceIndex& dist);

/// Per-instance neighbour counts: the density proxies are rescaled linearly
/// from [min, max] onto [un_min, un_max], rounded half up and clamped. A
/// constant proxy maps every instance to un_min.
std::vector<Index> dynamic_pun(std::span<const double> dbar, Index un_min, Index un_max);

struct GraphEdge {
  Index unlabeled;  // position within the unlabeled block
  double distance;
  double weight;
};

struct IncomingEdge {
  Index labeled;
  double weight;
};

/// Sparse labeled -> unlabeled heat-kernel graph. Absent edges have weight 0.
struct NeighborGraph {
  std::vector<std::vector<GraphEdge>> edges;        // per labeled instance
  std::vector<std::vector<IncomingEdge>> incoming;  // per unlabeled instance, labeled index ascending
  std::vector<Index> dpun;                          // neighbour count per labeled instance
  double sigma = 0.0;

  Index num_labeled() const { return static_cast<Index>(edges.size()); }
  Index num_unlabeled() const { return static_cast<Index>(incoming.size()); }
  /// Sum of the weights leaving labeled instance k.
  double out_weight(Index k) const;
};

/// Connects every labeled k to its dpun[k] nearest unlabeled neighbours with
/// weight exp(-d^2 / sigma^2). Throws std::domain_error when sigma == 0.
NeighborGraph graph_weights(const DistanceIndex& dist, std::span<const Index> dpun);

/// Same graph with the same neighbour count p for every labeled instance.
NeighborGraph fixed_graph(const DistanceIndex& dist, Index p);

/// Debug dump: one row per edge (k, r, distance, weight), r relative to the
/// unlabeled block.
void write_graph_csv(const NeighborGraph& graph, const std::filesystem::path& path);

}  // namespace kgbs
