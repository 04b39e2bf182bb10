#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kgbs/common.hpp"

namespace kgbs::oracle {

// Slow, literal reference computations. Nothing here calls into the
// optimised library paths; they exist to be compared against them.

/// FCM membership of one point from the ratio form 1 / sum_j (d_i/d_j)^(2/(m-1)).
Vector fcm_membership(const Vector& x, const Matrix& centers, double m);
/// Weighted means sum_k u_ik^m x_k / sum_k u_ik^m, one loop per coordinate.
Matrix fcm_centers(const Matrix& u, const Matrix& features, double m);
double fcm_objective(const Matrix& u, const Matrix& centers, const Matrix& features, double m);
/// sum over labeled k of sum_i |u_ik - f_ik|^m d_ik^2 with f the c x n one-hot
/// matrix (zero columns for unlabeled points).
double ssfcm_fidelity(const Matrix& u, const Matrix& f_full, const std::vector<bool>& labeled, const Matrix& centers,
                      const Matrix& features, double m);

/// Unlabeled neighbours of labeled column `k` by full sort of (distance, index).
std::vector<Index> knn(const Matrix& features, Index num_labeled, Index k, Index count);

struct DenseGraph {
  Matrix weights;           // l x (n - l), zero where no edge
  std::vector<Index> dpun;  // neighbour count per labeled instance
  std::vector<double> density;
  double sigma = 0.0;
};

/// Density proxy from the K nearest unlabeled neighbours, neighbour counts
/// rescaled onto [un_min, un_max], heat-kernel weights with sigma equal to
/// the mean labeled-unlabeled distance. `fixed_p` > 0 bypasses the rescale.
DenseGraph build_graph(const Matrix& features, Index num_labeled, Index density_k, Index un_min, Index un_max,
                       Index fixed_p = 0);

/// Safety objective evaluated term by term on a dense weight matrix.
double safe_objective(const Matrix& u, const Matrix& centers, const Matrix& f, const Matrix& weights,
                      const std::vector<double>& s, double lambda1, double coupling, const Matrix& features);

double local_inconsistency(const Matrix& u, const Matrix& f, const Matrix& weights, Index k);

/// Minimiser of `objective` over the simplex grid {u >= 0, sum u = 1} with
/// spacing `step` (exhaustive enumeration; c <= 3 is practical).
Vector grid_minimize(int c, double step, const std::function<double(const Vector&)>& objective);

/// Finite-difference gradient (central, spacing h) of `fn` at `v`.
Matrix fd_gradient(const Matrix& v, double h, const std::function<double(const Matrix&)>& fn);

struct Check {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs every closed-form-versus-brute-force comparison on small random
/// instances (n <= 8, c = 2 for the constrained updates).
std::vector<Check> run_suite(std::uint64_t seed = 7);

}  // namespace kgbs::oracle
