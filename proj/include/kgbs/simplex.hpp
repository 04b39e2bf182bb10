#pragma once

#include <span>
#include <vector>

#include "kgbs/common.hpp"

namespace kgbs {

/// Minimises sum_i (a_i u_i^2 - 2 b_i u_i) over the probability simplex,
/// with a_i >= 0 and b_i >= 0 (exact KKT solution).
///
/// When every a_i > 0 and the equality-constrained stationary point
///   u_i = (b_i + (1 - sum_j b_j/a_j) / sum_j (1/a_j)) / a_i
/// is nonnegative, that expression is what gets evaluated. Otherwise the
/// coordinates that would go negative are pinned at zero. Coordinates with
/// a_i == 0 act as sinks: they receive whatever mass the curved
/// coordinates leave over, split evenly among the sinks with the largest b.
void solve_simplex_column(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// Euclidean projection onto {x >= 0, sum x = 1} (sort-based).
Vector project_to_simplex(const Vector& v);

struct QpOptions {
  double tolerance = 1e-8;
  int max_iterations = 10000;
};

struct QpResult {
  Vector s;
  int iterations = 0;
  double kkt_residual = 0.0;
};

/// Projected-gradient residual ||s - P(s - grad)||_inf of the separable
/// quadratic 1/2 sum omega_k s_k^2 + sum delta_k s_k on the simplex. Zero
/// exactly at the KKT points.
double simplex_qp_residual(const Vector& omega, const Vector& delta, const Vector& s);

/// Minimises 1/2 sum omega_k s_k^2 + sum delta_k s_k over the simplex by
/// projected gradient descent with step 1/max(omega), starting from
/// `start` (projected first). omega == 0 is solved exactly: all mass on
/// argmin delta, split evenly among ties. Throws std::runtime_error with the
/// final residual if the iteration cap is hit.
QpResult solve_simplex_qp(const Vector& omega, const Vector& delta, const Vector& start, const QpOptions& options = {});

}  // namespace kgbs
