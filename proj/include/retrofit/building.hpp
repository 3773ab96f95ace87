#pragma once

#include <Eigen/Dense>

#include <vector>

namespace retrofit {

/// Per-floor properties of one shear building, floors ordered bottom-up
/// (floor 1 sits on the ground).
struct BuildingSpec {
    Eigen::VectorXd mass;       // kg
    Eigen::VectorXd stiffness;  // N/m
    Eigen::VectorXd damping;    // N·s/m

    /// Building with identical properties on every floor.
    static BuildingSpec uniform(int floors, double mass, double stiffness, double damping);

    int floors() const { return static_cast<int>(mass.size()); }

    /// Throws std::invalid_argument on empty buildings, non-positive mass or
    /// stiffness, or negative damping.
    void validate() const;
};

/// Tridiagonal lumped-mass chain stencil shared by the stiffness and damping
/// assembly: entry (i,i) = v_i + v_{i+1} with v past the top floor zero,
/// entries (i,i+1) = (i+1,i) = -v_{i+1}.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> chain_matrix(
    const Eigen::Ref<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>& per_story)
{
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index nf = per_story.size();
    Mat a = Mat::Zero(nf, nf);
    for (Eigen::Index i = 0; i < nf; ++i) {
        a(i, i) = per_story(i) + (i + 1 < nf ? per_story(i + 1) : Scalar(0));
        if (i + 1 < nf) {
            a(i, i + 1) = -per_story(i + 1);
            a(i + 1, i) = -per_story(i + 1);
        }
    }
    return a;
}

/// Two adjacent shear buildings assembled into one lumped-mass system.
///
/// Coordinates 1..n+m are the taller building's floors bottom-up, coordinates
/// n+m+1..2n+m the shorter building's floors bottom-up.  M is diagonal; K and
/// C are block tridiagonal with one shear chain per building.
struct CoupledModel {
    int n = 0;              ///< floor count of the shorter building
    int m = 0;              ///< floor excess of the taller building
    int building_order = 1; ///< input (1 or 2) occupying the first n+m coordinates
    Eigen::MatrixXd M, C, K;

    int size() const { return 2 * n + m; }
};

/// Assembles mass, structural damping and stiffness matrices for two
/// buildings.  The taller input becomes coordinate block one; equal heights
/// keep the first input first.
CoupledModel assemble_model(const BuildingSpec& b1, const BuildingSpec& b2);

/// Damper placement: the connected floors (1-based, all within 1..n) plus the
/// full per-floor coefficient vector, zero away from the active floors.
struct DamperLayout {
    std::vector<int> active_floors;  ///< sorted ascending, no duplicates
    Eigen::VectorXd coefficients;    ///< size n, N·s/m, nonnegative

    static DamperLayout none(int n);

    /// Layout whose active set is exactly the nonzero support of `cd`.
    static DamperLayout from_coefficients(const Eigen::VectorXd& cd);

    int damper_count() const { return static_cast<int>(active_floors.size()); }

    /// Throws std::invalid_argument when the floors or coefficients are
    /// inconsistent with a model whose shorter building has `n` floors.
    void validate(int n) const;
};

/// Damper coupling matrix: diag(c_d) on each building's first n floors and
/// -diag(c_d) across, zero rows for the taller building's excess floors.
/// Symmetric positive semidefinite by construction.
Eigen::MatrixXd assemble_damper_matrix(const DamperLayout& layout, int n, int m);

}  // namespace retrofit
