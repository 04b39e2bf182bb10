#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgbs/evaluation.hpp"
#include "kgbs/safe.hpp"

namespace kgbs {

enum class Algorithm { kmeans, fcm, ssfcm, as3fcm, kgbs3fcm };

std::string_view algorithm_name(Algorithm a);
/// Throws std::invalid_argument on an unknown name.
Algorithm parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

/// One benchmark protocol. Every default is the published experimental
/// setup: 20% labeled, mislabel ratios 0..0.30 in steps of 0.05, the six
/// value lambda grid searched jointly for lambda1 and lambda2, 20 repeats.
struct ExperimentConfig {
  std::vector<std::string> datasets{"heart"};
  std::vector<Algorithm> algorithms{all_algorithms()};
  double labeled_fraction = 0.2;
  std::vector<double> mislabel_ratios{0.0, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30};
  std::vector<double> lambda_grid{1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0};
  int repeats = 20;
  std::uint64_t base_seed = 20240607;
  int workers = 1;
  std::filesystem::path data_dir;  // empty: default_data_dir()
  bool standardize = true;         // per-feature z-score before fitting
  SafeConfig safe;                 // also supplies eta/maxiter to every baseline

  void validate() const;
};

std::string config_to_json(const ExperimentConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Identifies one fit. Hyperparameters an algorithm does not take are
/// absent: kmeans/fcm have neither, ssfcm stores its alpha as lambda1.
struct RunKey {
  std::string dataset;
  Algorithm algorithm = Algorithm::kgbs3fcm;
  double ratio = 0.0;
  std::optional<double> lambda1;
  std::optional<double> lambda2;
  int rep = 0;

  std::string id() const;  // stable textual key
  auto operator<=>(const RunKey&) const = default;
};

struct RunRecord {
  RunKey key;
  std::uint64_t seed = 0;
  Index num_labeled = 0;
  Index mislabeled = 0;
  bool ok = true;
  std::string error;
  double accuracy = 0.0;
  int iterations = 0;
  bool converged = false;
  double objective_initial = 0.0;
  double objective_final = 0.0;
  int objective_increases = 0;  // steps whose objective rose by more than 1e-8 relative
  double max_objective_increase = 0.0;
  double final_mean_safety = 0.0;  // kgbs3fcm only
  int final_gate = 0;              // kgbs3fcm only
  int gate_open_iterations = 0;    // kgbs3fcm only
};

std::string record_to_json(const RunRecord& r);
RunRecord record_from_json(std::string_view line);

/// Seed ladder. The split depends on (dataset, rep) and the mislabel draw on
/// (dataset, rep), so every ratio and lambda pair sees the same partition
/// and nested corruption masks; the per-fit seed (K-Means / FCM seeding)
/// hashes the full run key.
std::uint64_t split_seed(std::uint64_t base, std::string_view dataset, int rep);
std::uint64_t mislabel_seed(std::uint64_t base, std::string_view dataset, int rep);
std::uint64_t run_seed(std::uint64_t base, const RunKey& key);

/// All keys the protocol calls for, in execution order.
std::vector<RunKey> planned_runs(const ExperimentConfig& cfg);

/// Runs a single configuration.
RunRecord run_single(const RunKey& key, const Dataset& ds, const ExperimentConfig& cfg);

struct SweepSummary {
  Index planned = 0;
  Index skipped = 0;  // already present in the output directory
  Index completed = 0;
  Index failed = 0;
};

/// Executes planned_runs(cfg) into `out_dir`: one JSON line per run in
/// `<dataset>/<algorithm>.jsonl` and wall times in
/// `<dataset>/<algorithm>.timing.jsonl`. Runs already recorded are skipped,
/// so an interrupted sweep resumes where it stopped. The configuration is
/// saved as `config.json`.
SweepSummary run_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, std::ostream* log = nullptr);

/// Every run record under `dir`, sorted by key.
std::vector<RunRecord> load_records(const std::filesystem::path& dir);

// ---- reporting -----------------------------------------------------------

struct GroupScore {
  std::string dataset;
  Algorithm algorithm = Algorithm::kgbs3fcm;
  double ratio = 0.0;
  std::optional<double> lambda1;
  std::optional<double> lambda2;
  AggregateScore score;
  int failures = 0;
};

/// One aggregate per (dataset, algorithm, ratio, lambda1, lambda2), sorted.
std::vector<GroupScore> aggregate_records(const std::vector<RunRecord>& records);

/// Per (dataset, algorithm, ratio): the hyperparameter pair with the highest
/// mean accuracy; ties keep the first pair in sorted order.
std::vector<GroupScore> select_best_lambda(const std::vector<GroupScore>& groups);

struct ReferenceCell {
  std::string dataset;
  double ratio;
  double accuracy_percent;
  bool checked;  // false for the synthetic Gaussian sets, whose generator is underdetermined
};

/// Published K-GBS3FCM accuracies (percent) for every dataset and ratio.
const std::vector<ReferenceCell>& kgbs_reference_table();

struct ComparisonRow {
  std::string dataset;
  double ratio = 0.0;
  double reference = 0.0;                // percent
  std::optional<double> reproduced;      // percent
  std::optional<double> delta;           // reproduced - reference
  int runs = 0;
  bool checked = true;                   // counts toward report --check
  bool flagged = false;                  // checked and |delta| > tolerance
};

std::vector<ComparisonRow> compare_table(const std::vector<GroupScore>& best,
                                         const std::vector<ReferenceCell>& reference, double tolerance);

struct PairedComparison {
  std::string dataset;
  double ratio = 0.0;
  Algorithm other = Algorithm::fcm;
  double mean_difference = 0.0;  // kgbs3fcm minus other, accuracy fraction
  double std_difference = 0.0;
  int wins = 0;
  int losses = 0;
  int ties = 0;
};

/// Per-repeat comparison of K-GBS3FCM against every other algorithm, each at
/// its own best hyperparameters.
std::vector<PairedComparison> paired_comparisons(const std::vector<RunRecord>& records,
                                                 const std::vector<GroupScore>& best);

/// One CSV per dataset: ratio, then <algorithm>_mean and <algorithm>_std for
/// each algorithm present. Algorithms in `expected` without results are
/// omitted with a warning on `warn`.
std::vector<std::filesystem::path> export_plot_data(const std::vector<GroupScore>& best,
                                                    const std::filesystem::path& dir,
                                                    const std::vector<Algorithm>& expected, std::ostream* warn);

struct ReportOutput {
  std::vector<GroupScore> groups;
  std::vector<GroupScore> best;
  std::vector<ComparisonRow> comparison;
  int flagged = 0;
};

/// Writes aggregate.csv, best.csv, compare.csv, compare.md, paired.csv and
/// plots/<dataset>.csv under `out_dir`.
ReportOutput write_report(const std::filesystem::path& results_dir, const std::filesystem::path& out_dir,
                          double tolerance, std::ostream* warn);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace kgbs
