#pragma once

#include <span>
#include <vector>

#include "kgbs/common.hpp"

namespace kgbs {

/// Hard labels 1..c: argmax over each column, ties to the smallest index.
std::vector<int> predict_labels(const Matrix& u);

enum class Matching {
  identity,          // cluster i is class i
  best_permutation,  // best bijection over all c! relabelings (c <= 8)
};

struct RunScore {
  double accuracy = 0.0;
  std::vector<Index> per_class_hits;  // indexed by class - 1
  std::vector<int> mapping;           // mapping[cluster - 1] = class
};

/// Fraction of instances whose (mapped) predicted cluster equals the true
/// class. Labels are 1-based; `num_classes` bounds both sequences.
RunScore clustering_accuracy(std::span<const int> pred, std::span<const int> truth, int num_classes, Matching match);

struct AggregateScore {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single run
  int runs = 0;
};

AggregateScore aggregate(std::span<const double> accuracies);

}  // namespace kgbs
