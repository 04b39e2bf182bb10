#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kgbs/common.hpp"

namespace kgbs {

/// A labeled feature matrix. Instances are stored as columns
/// (`features` is dim x n) so each point is contiguous in memory.
/// Class ids are contiguous in 1..num_classes.
struct Dataset {
  Matrix features;
  std::vector<int> truth;
  int num_classes = 0;
  std::string name;

  Index size() const { return features.cols(); }
  Index dim() const { return features.rows(); }

  /// Throws std::invalid_argument if any invariant is broken: label range,
  /// every class present, finite features, matching lengths.
  void validate() const;
};

/// Dataset split into a labeled prefix and an unlabeled suffix.
///
/// `data` is the base dataset reordered so the first `num_labeled` columns
/// are the labeled instances. `provided` holds the labels a learner is
/// allowed to see (possibly corrupted); `data.truth` is never modified.
struct SemiSupervisedView {
  Dataset data;
  std::vector<Index> original_index;  // position -> row in the base dataset
  Index num_labeled = 0;
  std::vector<int> provided;
  std::vector<bool> mislabeled;

  Index num_unlabeled() const { return data.size() - num_labeled; }
  int num_classes() const { return data.num_classes; }

  /// c x l one-hot matrix built from the provided labels.
  Matrix one_hot() const;
  Index mislabel_count() const;
};

struct CsvOptions {
  /// Zero-based label column; negative values count from the end (-1 = last).
  int label_column = -1;
  std::string name;
};

/// Reads a header-prefixed CSV. All non-label columns must be numeric. The
/// label column may hold integers or category names; distinct values are
/// sorted (numerically when all are integers) and mapped to 1..c.
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// Raw numeric table with header, as used by the dataset registry for files
/// whose class must be derived from a feature (bupa).
struct NumericTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
NumericTable load_numeric_csv(const std::filesystem::path& path);

/// Bupa liver-disorders target derived from the drinks column (x6):
/// 0 when x6 < 3, 1 otherwise. `raw_row` is the raw record, x6 at index 5.
int bupa_target(std::span<const double> raw_row);

enum class GaussKind { gauss50, gauss50x };

/// Synthetic two-class Gaussian data in 50 dimensions with class means
/// +0.25 / -0.25 on every feature and identity covariance.
///   gauss50:  n = 1550, one normal per class (775 + 775)
///   gauss50x: n = 2000, each class a 0.6/0.4 mixture of two normals whose
///             means are shifted by +0.5 / -0.5 along the first 10 features.
Dataset gen_gauss(GaussKind kind, std::uint64_t seed);

/// Breiman's waveform-21 generator: three classes, each a random convex
/// combination of two of three triangular base waves plus N(0,1) noise.
Dataset gen_waveform(Index n, std::uint64_t seed);

/// Uniform labeled sample of round(fraction * n) instances, re-drawn with a
/// derived seed (at most 1000 attempts) until every class is represented.
SemiSupervisedView split_labeled(const Dataset& ds, double labeled_fraction, std::uint64_t seed);

/// Corrupts exactly round(ratio * l) provided labels, each to a class drawn
/// uniformly from the c - 1 wrong ones. Corruption is always applied to the
/// ground truth, so the result does not depend on the view's current labels.
/// For a fixed seed the corrupted sets are nested as the ratio grows.
SemiSupervisedView inject_mislabels(const SemiSupervisedView& view, double ratio, std::uint64_t seed);

/// Per-feature z-score using the population standard deviation; constant
/// features become 0.
Dataset standardize(const Dataset& ds);

/// Writes features then a `class` column (1-based ids), header included.
void write_csv(const Dataset& ds, const std::filesystem::path& path);

/// Names accepted by load_named().
const std::vector<std::string>& known_datasets();

struct TableShape {
  Index n;
  Index dim;
  int classes;
};
/// Reference shape of a registry dataset.
TableShape reference_shape(const std::string& name);

/// Registry loader. Real datasets are read from `<data_dir>/<name>.csv`;
/// gauss50, gauss50x and waveform are generated with fixed seeds.
Dataset load_named(const std::string& name, const std::filesystem::path& data_dir, bool standardized = true);

/// Default data directory: $KGBS_DATA_DIR if set, otherwise `data`.
std::filesystem::path default_data_dir();

}  // namespace kgbs
