#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kgbs/common.hpp"
#include "kgbs/dataset.hpp"

namespace kgbs {

// Layout conventions shared by every fit:
//   features  dim x n  (one column per instance)
//   U         c x n    (fuzzy partition, columns sum to one)
//   centers   dim x c  (one column per cluster)

/// Per-iteration record of an alternating optimisation run. The safe
/// variants also log their mean safety degree and gate value per iteration;
/// entry 0 of every sequence is the initial state.
struct FitTrace {
  std::vector<double> objective;
  std::vector<double> mean_safety;
  std::vector<int> gate;
  int iterations = 0;
  bool converged = false;

  /// Number of iterations whose objective exceeds its predecessor by more
  /// than `slack`.
  int objective_increases(double slack = 0.0) const;
  double max_objective_increase() const;
};

/// True if every column of `u` sums to one within `tol` and all entries lie
/// in [-tol, 1 + tol].
bool is_partition(const Matrix& u, double tol = 1e-9);

/// Squared Euclidean distance of every instance to every center (c x n).
Matrix squared_distances(const Matrix& features, const Matrix& centers);

/// sum_i sum_k u_ik^m d_ik^2
double fcm_objective(const Matrix& u, const Matrix& centers, const Matrix& features, double m);

/// Standard membership update. A point lying exactly on one or more centers
/// is shared evenly among those centers.
Matrix fcm_membership_update(const Matrix& centers, const Matrix& features, double m);

/// Weighted means with weights u_ik^m. Throws std::domain_error if a
/// cluster carries zero membership mass.
Matrix fcm_center_update(const Matrix& u, const Matrix& features, double m);

/// K-Means++ seeding: c distinct instance columns chosen with D^2 weighting.
Matrix kmeanspp_centers(const Matrix& features, int c, std::mt19937_64& rng);

struct KMeansResult {
  Matrix centers;
  std::vector<int> labels;  // 1..c
  double inertia = 0.0;
  int iterations = 0;
};

/// Lloyd iterations from K-Means++ seeds. An emptied cluster is reseeded
/// with the point farthest from its current center.
KMeansResult kmeans_fit(const Dataset& ds, int c, std::uint64_t seed, int max_iterations = 300);

struct FuzzyFit {
  Matrix u;
  Matrix centers;
  FitTrace trace;
};

/// FCM from given initial centers: U = update(V0), then alternate centers /
/// memberships until |J(t) - J(t-1)| < eta or maxiter iterations.
FuzzyFit fcm_fit_from(const Matrix& features, const Matrix& initial_centers, double m, double eta, int maxiter);

/// FCM seeded by K-Means++ under `seed`.
FuzzyFit fcm_fit(const Dataset& ds, int c, double m, double eta, int maxiter, std::uint64_t seed);

/// Fidelity term sum_k sum_i |u_ik - f_ik b_k|^m d_ik^2. `f` is c x n with
/// one-hot columns where `labeled[k]` is true and zero columns elsewhere.
double ssfcm_fidelity(const Matrix& u, const Matrix& f, const std::vector<bool>& labeled, const Matrix& centers,
                      const Matrix& features, double m);

/// J_FCM + alpha * fidelity with m = 2.
double ssfcm_objective(const Matrix& u, const Matrix& f, const std::vector<bool>& labeled, const Matrix& centers,
                       const Matrix& features, double alpha);

/// Exact SSFCM membership update (m = 2) given centers: the FCM membership
/// on unlabeled columns, and on labeled ones
///   u_ik = (1 / (d_ik^2 sum_j d_jk^-2) + alpha f_ik) / (1 + alpha).
Matrix ssfcm_membership_update(const Matrix& centers, const Matrix& f, const std::vector<bool>& labeled,
                               const Matrix& features, double alpha);

/// Exact SSFCM center update (m = 2): weights u_ik^2 + alpha (u_ik - f_ik b_k)^2.
Matrix ssfcm_center_update(const Matrix& u, const Matrix& f, const std::vector<bool>& labeled, const Matrix& features,
                           double alpha);

/// SSFCM (m = 2) from explicit initial centers.
FuzzyFit ssfcm_fit_from(const SemiSupervisedView& view, const Matrix& initial_centers, double alpha, double eta,
                        int maxiter);

/// SSFCM with centers initialised at the per-class means of the labeled
/// instances (provided labels), so cluster i corresponds to class i.
FuzzyFit ssfcm_fit(const SemiSupervisedView& view, double alpha, double m, double eta, int maxiter);

/// c x n one-hot of the provided labels over the labeled prefix, zero
/// columns for unlabeled instances.
Matrix full_one_hot(const SemiSupervisedView& view);

/// Per-class means of the labeled instances under the provided labels
/// (dim x c). Throws std::invalid_argument if a class has no labeled instance.
Matrix labeled_class_means(const SemiSupervisedView& view);

}  // namespace kgbs
