#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kgbs/clustering.hpp"
#include "kgbs/dataset.hpp"
#include "kgbs/geometry.hpp"
#include "kgbs/simplex.hpp"

namespace kgbs {

// Safe semi-supervised fuzzy clustering: K-GBS3FCM and AS3FCM.
//
// Both operate on a SemiSupervisedView (labeled prefix of length l, then
// n - l unlabeled columns) and a labeled -> unlabeled NeighborGraph. They
// share the objective
//
//   J = sum_{k<n} sum_i u_ik^2 d_ik^2
//     + lambda1 sum_{k<l} s_k sum_i (u_ik - f_ik)^2 d_ik^2
//     + g sum_{k<l} [ s_k sum_r w_kr sum_i (f_ik - u_ir)^2
//                     + beta(s_k) sum_r w_kr sum_i (u_ik - u_ir)^2 ]
//
// with beta(s) = 2 / (s + 1) - 1 and coupling g. AS3FCM uses g = lambda2;
// K-GBS3FCM uses g = lambda2 * lambda1^Step(mean s), where Step opens once
// the mean safety degree reaches theta_s.

/// Order in which the two membership blocks are refreshed per iteration.
enum class SweepOrder {
  /// Both blocks from the previous iterate.
  jacobi,
  /// Labeled block first, then unlabeled block against the new labeled
  /// columns (block coordinate descent).
  block,
};

struct SafeConfig {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  Index density_k = 5;      // K, neighbours used for the density proxy
  double theta_s = 0.6;     // gate threshold on the mean safety degree
  Index un_min = 5;
  Index un_max = 0;         // 0 selects round(sqrt(n))
  double eta = 1e-4;
  int maxiter = 100;
  bool gate_enabled = true;
  SweepOrder sweep = SweepOrder::jacobi;

  void validate() const;
  /// (un_min, un_max) with the round(sqrt(n)) default resolved; both are
  /// capped at the number of unlabeled instances and un_max >= un_min.
  std::pair<Index, Index> neighbor_range(Index n, Index num_unlabeled) const;
};

struct SafetyVector {
  std::vector<double> s;
  double mean = 0.0;
};

/// li_k = sum over neighbours r of k, sum_i |u_ir - f_ik|. `u` holds all n
/// columns (labeled prefix first); `f` is c x l.
std::vector<double> local_inconsistency(const Matrix& u, const Matrix& f, const NeighborGraph& graph);

/// s_k = 1 / (1 + li_k / dpun_k).
SafetyVector safety_degrees(std::span<const double> li, std::span<const Index> dpun);

/// 1 iff mean_s >= theta_s.
int step_gate(double mean_s, double theta_s);

/// Effective labeled/unlabeled coupling lambda2 * lambda1^gate.
double coupling_coefficient(double lambda1, double lambda2, int gate);

inline double beta_of(double s) { return 2.0 / (s + 1.0) - 1.0; }

/// The shared objective above for an explicit coupling g.
double safe_objective(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                      std::span<const double> s, double lambda1, double coupling, const Matrix& features);

/// K-GBS3FCM objective. The gate comes from the safety vector's mean unless
/// `forced_gate` is given.
double kgbs_objective(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                      const SafetyVector& s, const SafeConfig& cfg, const Matrix& features,
                      std::optional<int> forced_gate = std::nullopt);

/// Recomputes the labeled columns [0, l) of `u_next` from `u_prev`:
///   p_ik = lambda1 s_k f_ik d_ik^2 + g beta_k sum_r w_kr u_ir
///   q_ik = d_ik^2 + lambda1 s_k d_ik^2 + g beta_k sum_r w_kr
/// u_ik = (p_ik + (1 - sum_i p_ik/q_ik) / sum_i 1/q_ik) / q_ik, the
/// nonnegativity constraint being enforced if that point leaves the simplex.
void update_labeled_block(const Matrix& u_prev, const Matrix& d2, const Matrix& f, const NeighborGraph& graph,
                          std::span<const double> s, double lambda1, double coupling, Matrix& u_next);

/// Recomputes the unlabeled columns [l, n) of `u_next`; labeled memberships
/// are read from `u_source`:
///   z_ir = g sum_k w_kr (s_k f_ik + beta_k u_ik)
///   t_ir = d_ir^2 + g sum_k w_kr (s_k + beta_k)
/// with the same closed form. Columns outside every neighbourhood reduce to
/// the plain FCM update.
void update_unlabeled_block(const Matrix& u_source, const Matrix& d2, const Matrix& f, const NeighborGraph& graph,
                            std::span<const double> s, double coupling, Matrix& u_next);

/// Labeled update with the K-GBS3FCM coupling for `gate`; returns the new
/// c x l labeled block.
Matrix kgbs_update_labeled(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                           const SafetyVector& s, const SafeConfig& cfg, int gate, const Matrix& features);
/// Unlabeled update with the K-GBS3FCM coupling; returns the c x (n - l) block.
Matrix kgbs_update_unlabeled(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                             const SafetyVector& s, const SafeConfig& cfg, int gate, const Matrix& features);

/// Center update shared by both algorithms:
///   v_i = (sum_k u_ik^2 x_k + lambda1 sum_{k<l} s_k (u_ik - f_ik)^2 x_k)
///       / (sum_k u_ik^2 + lambda1 sum_{k<l} s_k (u_ik - f_ik)^2)
/// Throws std::domain_error on a zero denominator.
Matrix safe_center_update(const Matrix& u, const Matrix& f, std::span<const double> s, double lambda1,
                          const Matrix& features);

/// Geometry computed once per labeled/unlabeled partition.
struct SafeGeometry {
  DistanceIndex distances;
  std::vector<double> density;  // mean distance to the K nearest unlabeled neighbours
  NeighborGraph graph;
};

SafeGeometry prepare_kgbs_geometry(const SemiSupervisedView& view, const SafeConfig& cfg);

struct KgbsResult {
  Matrix u;
  SafetyVector safety;
  Matrix centers;
  FitTrace trace;
  double loop_seconds = 0.0;  // wall time of the iteration loop only
};

/// K-GBS3FCM. Throws std::invalid_argument if some class has no labeled
/// instance under the provided labels.
KgbsResult kgbs_fit(const SemiSupervisedView& view, const SafeConfig& cfg);
KgbsResult kgbs_fit(const SemiSupervisedView& view, const SafeGeometry& geometry, const SafeConfig& cfg);

// ---- AS3FCM ---------------------------------------------------------------

constexpr Index kAs3Neighbors = 5;

struct As3State {
  std::vector<double> s;      // on the simplex
  std::vector<double> omega;  // quadratic coefficients of the safety QP
  std::vector<double> delta;  // linear coefficients of the safety QP
  int qp_iterations = 0;
  double kkt_residual = 0.0;
};

Matrix as3_update_labeled(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                          std::span<const double> s, double lambda1, double lambda2, const Matrix& features);
Matrix as3_update_unlabeled(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                            std::span<const double> s, double lambda2, const Matrix& features);

/// QP coefficients
///   omega_k = 4 lambda2 sum_r w_kr sum_i (u_ik - u_ir)^2
///   delta_k = lambda1 sum_i (u_ik - f_ik)^2 d_ik^2
///           + lambda2 sum_r w_kr sum_i (f_ik - u_ir)^2
///           - 2 lambda2 sum_r w_kr sum_i (u_ik - u_ir)^2
/// then s = argmin 1/2 sum omega s^2 + sum delta s over the simplex.
/// `warm_start` (if non-empty) seeds the projected-gradient solver.
As3State as3_safety_update(const Matrix& u, const Matrix& centers, const Matrix& f, const NeighborGraph& graph,
                           double lambda1, double lambda2, const Matrix& features,
                           std::span<const double> warm_start = {}, const QpOptions& qp = {});

struct As3Result {
  Matrix u;
  As3State state;
  Matrix centers;
  FitTrace trace;
};

struct As3Config {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double eta = 1e-4;
  int maxiter = 100;
  SweepOrder sweep = SweepOrder::jacobi;
};

/// AS3FCM on a fixed 5-nearest-unlabeled-neighbour graph.
As3Result as3_fit(const SemiSupervisedView& view, const As3Config& cfg);
As3Result as3_fit(const SemiSupervisedView& view, const NeighborGraph& graph, const As3Config& cfg);

/// Fixed-p graph for AS3FCM over a view.
NeighborGraph prepare_as3_graph(const SemiSupervisedView& view);

}  // namespace kgbs
