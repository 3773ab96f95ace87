#pragma once

#include <Eigen/Dense>

#include <vector>

namespace retrofit {

/// Minimum-norm point of a convex hull together with the convex weights that
/// produce it (one weight per input point, zeros off the supporting set).
struct MinNormPoint {
    Eigen::VectorXd point;
    Eigen::VectorXd weights;
};

/// Unique minimum-Euclidean-norm element of conv{points}, found by Wolfe's
/// active-set method.  The returned weights are nonnegative up to roundoff
/// and sum to one.
MinNormPoint min_norm_point(const std::vector<Eigen::VectorXd>& points, double tol = 1e-10);

}  // namespace retrofit
