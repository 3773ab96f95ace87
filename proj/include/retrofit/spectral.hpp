#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "retrofit/building.hpp"

namespace retrofit {

/// Kanai-Tajimi filtered white-noise parameters for the ground-acceleration
/// spectral density.
struct ExcitationSpec {
    double omega_g = 15.0;  ///< rad/s
    double zeta_g = 0.6;
    double S0 = 4.65e-4;    ///< m²/(rad·s³)

    /// Secondary filter frequency carried by problem definitions for
    /// completeness; it does not enter the spectral density.
    double omega_k = 1.5;

    void validate() const
    {
        if (!(omega_g > 0.0) || !(zeta_g > 0.0) || !(S0 > 0.0))
            throw std::invalid_argument("excitation parameters must be positive");
    }
};

/// Ground-acceleration spectral density at circular frequency `omega`.
/// Even in omega, equal to S0 at omega = 0, finite for zeta_g > 0.
template <typename Scalar>
Scalar kanai_tajimi(Scalar omega, const ExcitationSpec& exc)
{
    const Scalar ratio = omega / exc.omega_g;
    const Scalar r = ratio * ratio;
    const Scalar z = Scalar(4) * exc.zeta_g * exc.zeta_g * r;
    return exc.S0 * (Scalar(1) + z) / ((Scalar(1) - r) * (Scalar(1) - r) + z);
}

/// Uniform frequency grid for the displacement-variance quadrature.
///
/// Points are affine blends of the endpoints so that symmetric grids pair
/// exactly: point(mid+k) == -point(mid-k) bit for bit.
struct FrequencyGrid {
    double omega_min = -20.0;  ///< rad/s
    double omega_max = 20.0;   ///< rad/s
    double step = 0.02;        ///< rad/s

    int count() const
    {
        return static_cast<int>(std::lround((omega_max - omega_min) / step)) + 1;
    }

    double point(int i) const
    {
        const int last = count() - 1;
        if (i == 0) return omega_min;
        if (i == last) return omega_max;
        return (omega_min * (last - i) + omega_max * i) / last;
    }

    /// Centered about zero with a grid point at zero.
    bool symmetric() const { return omega_min == -omega_max && count() % 2 == 1; }

    void validate() const
    {
        if (!(omega_min < omega_max))
            throw std::invalid_argument("frequency grid requires omega_min < omega_max");
        if (!(step > 0.0))
            throw std::invalid_argument("frequency grid step must be positive");
        if (count() < 2)
            throw std::invalid_argument("frequency grid needs at least two points");
    }
};

/// Trapezoidal quadrature with the grid's nominal step; values[i] pairs with
/// grid.point(i).  Summation runs left to right so results are reproducible.
double trapezoid(const FrequencyGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& values);

/// Raised when the frequency-domain system is numerically singular, which
/// requires a completely undamped resonance.
struct SingularSystemError : std::runtime_error {
    explicit SingularSystemError(double omega)
        : std::runtime_error("frequency-response system is numerically singular at omega = " +
                             std::to_string(omega)) {}
};

/// Linear-solve engine behind the frequency sweep.  Both factorizations are
/// exact direct solves of the same system; `banded` exploits the chain
/// topology (pentadiagonal after interleaving the two buildings) and is the
/// default, `dense` is the straight dense factorization kept as the
/// cross-checking route.
enum class SolveEngine { banded, dense };

/// Complex displacement response at one frequency: the solution of
/// (-M w² + iw(C+C_d) + K) X = -M·1·sqrt(S_g(w)).
Eigen::VectorXcd frequency_response(const CoupledModel& model,
                                    const Eigen::MatrixXd& damper_matrix, double omega,
                                    const ExcitationSpec& exc,
                                    SolveEngine engine = SolveEngine::banded);

/// Per-coordinate displacement standard deviations: sqrt of the trapezoid of
/// |X_i(w)|² over the grid.
Eigen::VectorXd floor_sigmas(const CoupledModel& model, const Eigen::MatrixXd& damper_matrix,
                             const ExcitationSpec& exc, const FrequencyGrid& grid,
                             SolveEngine engine = SolveEngine::banded);

/// Result of one objective evaluation.
struct DriftEvaluation {
    Eigen::VectorXd sigma;   ///< displacement std dev per coordinate (m)
    Eigen::VectorXd drifts;  ///< squared inter-story drift per coordinate (m²)
    double objective = 0.0;  ///< max drift over both buildings (m²)
    int argmax_building = 1; ///< coordinate block attaining the max (1 or 2)
    int argmax_floor = 1;    ///< 1-based floor within that building
};

/// Full objective evaluation for one damper layout.  This is the unit of
/// cost for all solver accounting: one call, one frequency sweep.
DriftEvaluation evaluate_objective(const CoupledModel& model, const DamperLayout& layout,
                                   const ExcitationSpec& exc, const FrequencyGrid& grid,
                                   SolveEngine engine = SolveEngine::banded);

}  // namespace retrofit
