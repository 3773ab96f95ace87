#include "retrofit/spectral.hpp"

#include <complex>
#include <vector>

#include "band_lu.hpp"

namespace retrofit {

double trapezoid(const FrequencyGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& values)
{
    grid.validate();
    const int count = grid.count();
    if (values.size() != count)
        throw std::invalid_argument("trapezoid: value count does not match grid");
    double sum = 0.5 * values(0);
    for (int i = 1; i + 1 < count; ++i) sum += values(i);
    sum += 0.5 * values(count - 1);
    return sum * grid.step;
}

namespace {

// Interleaved coordinate order that makes the coupled system pentadiagonal:
// the two buildings alternate over the first 2n slots, the taller building's
// excess floors follow.  perm[model coordinate] = interleaved position.
std::vector<int> interleave_permutation(int n, int m)
{
    const int nt = n + m;
    std::vector<int> perm(2 * n + m);
    for (int f = 1; f <= nt; ++f) perm[f - 1] = (f <= n) ? 2 * (f - 1) : n + f - 1;
    for (int f = 1; f <= n; ++f) perm[nt + f - 1] = 2 * f - 1;
    return perm;
}

constexpr int kBand = 2;  // half bandwidth of the interleaved system
constexpr double kMaxCondition = 1e14;

// Shared per-sweep state for the banded engine.
struct BandedSweep {
    std::vector<int> perm;
    Eigen::MatrixXd Kp, Bp;      // permuted stiffness and total damping
    Eigen::VectorXd Mp;          // permuted mass diagonal
    Eigen::VectorXd rhs0;        // -Mp, scaled by sqrt(S_g) per point
    double k_norm = 0.0, b_norm = 0.0, m_max = 0.0;
    detail::BandLU lu;
    std::vector<std::complex<double>> x;

    BandedSweep(const CoupledModel& model, const Eigen::MatrixXd& damper_matrix)
        : lu(model.size(), kBand, kBand), x(model.size())
    {
        const int N = model.size();
        perm = interleave_permutation(model.n, model.m);
        Eigen::MatrixXd B = model.C + damper_matrix;
        Kp.setZero(N, N);
        Bp.setZero(N, N);
        Mp.setZero(N);
        for (int i = 0; i < N; ++i) {
            Mp(perm[i]) = model.M(i, i);
            for (int j = 0; j < N; ++j) {
                Kp(perm[i], perm[j]) = model.K(i, j);
                Bp(perm[i], perm[j]) = B(i, j);
            }
        }
        rhs0 = -Mp;
        k_norm = model.K.cwiseAbs().rowwise().sum().maxCoeff();
        b_norm = B.cwiseAbs().rowwise().sum().maxCoeff();
        m_max = model.M.diagonal().maxCoeff();
    }

    // Solve at one frequency; the solution stays in interleaved order.
    void solve(double omega, const ExcitationSpec& exc)
    {
        const int N = static_cast<int>(x.size());
        lu.reset();
        for (int j = 0; j < N; ++j) {
            const int lo = std::max(0, j - kBand);
            const int hi = std::min(N - 1, j + kBand);
            for (int i = lo; i <= hi; ++i)
                lu.at(i, j) = {Kp(i, j) - (i == j ? omega * omega * Mp(i) : 0.0),
                               omega * Bp(i, j)};
        }
        const double min_pivot = lu.factor();
        const double scale = k_norm + omega * omega * m_max + std::abs(omega) * b_norm;
        if (min_pivot <= 0.0 || scale > kMaxCondition * min_pivot)
            throw SingularSystemError(omega);

        const double s = std::sqrt(kanai_tajimi(omega, exc));
        for (int i = 0; i < N; ++i) x[i] = rhs0(i) * s;
        lu.solve(x.data());
    }
};

// Dense counterpart, one LU per frequency point.
struct DenseSweep {
    Eigen::MatrixXd B;
    Eigen::VectorXd Mdiag, rhs0;
    double k_norm = 0.0, b_norm = 0.0, m_max = 0.0;
    Eigen::MatrixXcd A;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
    Eigen::VectorXcd x;
    const CoupledModel& model;

    DenseSweep(const CoupledModel& mdl, const Eigen::MatrixXd& damper_matrix) : model(mdl)
    {
        const int N = model.size();
        B = model.C + damper_matrix;
        Mdiag = model.M.diagonal();
        rhs0 = -Mdiag;
        k_norm = model.K.cwiseAbs().rowwise().sum().maxCoeff();
        b_norm = B.cwiseAbs().rowwise().sum().maxCoeff();
        m_max = Mdiag.maxCoeff();
        A.resize(N, N);
    }

    void solve(double omega, const ExcitationSpec& exc)
    {
        A.real() = model.K;
        A.real().diagonal() -= omega * omega * Mdiag;
        A.imag() = omega * B;
        lu.compute(A);
        const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
        const double scale = k_norm + omega * omega * m_max + std::abs(omega) * b_norm;
        if (min_pivot <= 0.0 || scale > kMaxCondition * min_pivot)
            throw SingularSystemError(omega);

        const double s = std::sqrt(kanai_tajimi(omega, exc));
        x = lu.solve((rhs0 * s).cast<std::complex<double>>().eval());
    }
};

void check_dimensions(const CoupledModel& model, const Eigen::MatrixXd& damper_matrix)
{
    if (damper_matrix.rows() != model.size() || damper_matrix.cols() != model.size())
        throw std::invalid_argument("damper matrix size does not match the model");
}

}  // namespace

Eigen::VectorXcd frequency_response(const CoupledModel& model,
                                    const Eigen::MatrixXd& damper_matrix, double omega,
                                    const ExcitationSpec& exc, SolveEngine engine)
{
    exc.validate();
    check_dimensions(model, damper_matrix);
    const int N = model.size();
    Eigen::VectorXcd out(N);
    if (engine == SolveEngine::dense) {
        DenseSweep sweep(model, damper_matrix);
        sweep.solve(omega, exc);
        out = sweep.x;
    } else {
        BandedSweep sweep(model, damper_matrix);
        sweep.solve(omega, exc);
        for (int i = 0; i < N; ++i) out(i) = sweep.x[sweep.perm[i]];
    }
    return out;
}

Eigen::VectorXd floor_sigmas(const CoupledModel& model, const Eigen::MatrixXd& damper_matrix,
                             const ExcitationSpec& exc, const FrequencyGrid& grid,
                             SolveEngine engine)
{
    exc.validate();
    grid.validate();
    check_dimensions(model, damper_matrix);

    const int N = model.size();
    const int last = grid.count() - 1;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(N);

    // A symmetric grid is swept over its nonnegative half only: the response
    // magnitude is even in omega, so the two-sided trapezoid reduces to the
    // half sweep with doubled interior weights.
    const bool half = grid.symmetric();
    const int first = half ? last / 2 : 0;

    auto weight = [&](int j) {
        if (half) return grid.step * ((j == first || j == last) ? 1.0 : 2.0);
        return grid.step * ((j == 0 || j == last) ? 0.5 : 1.0);
    };

    if (engine == SolveEngine::dense) {
        DenseSweep sweep(model, damper_matrix);
        for (int j = first; j <= last; ++j) {
            sweep.solve(grid.point(j), exc);
            const double w = weight(j);
            for (int i = 0; i < N; ++i) acc(i) += w * std::norm(sweep.x(i));
        }
        return acc.cwiseSqrt();
    }

    BandedSweep sweep(model, damper_matrix);
    for (int j = first; j <= last; ++j) {
        sweep.solve(grid.point(j), exc);
        const double w = weight(j);
        for (int i = 0; i < N; ++i) acc(i) += w * std::norm(sweep.x[i]);
    }
    Eigen::VectorXd sigma(N);
    for (int i = 0; i < N; ++i) sigma(i) = std::sqrt(acc(sweep.perm[i]));
    return sigma;
}

DriftEvaluation evaluate_objective(const CoupledModel& model, const DamperLayout& layout,
                                   const ExcitationSpec& exc, const FrequencyGrid& grid,
                                   SolveEngine engine)
{
    layout.validate(model.n);
    const Eigen::MatrixXd cd = assemble_damper_matrix(layout, model.n, model.m);

    DriftEvaluation eval;
    eval.sigma = floor_sigmas(model, cd, exc, grid, engine);

    const int N = model.size();
    const int nt = model.n + model.m;
    eval.drifts.resize(N);
    for (int i = 0; i < N; ++i) {
        const bool block_start = (i == 0 || i == nt);
        const double below = block_start ? 0.0 : eval.sigma(i - 1);
        const double d = eval.sigma(i) - below;
        eval.drifts(i) = d * d;
    }

    eval.objective = -1.0;
    for (int i = 0; i < N; ++i) {
        if (eval.drifts(i) > eval.objective) {
            eval.objective = eval.drifts(i);
            eval.argmax_building = (i < nt) ? 1 : 2;
            eval.argmax_floor = (i < nt) ? i + 1 : i - nt + 1;
        }
    }
    return eval;
}

}  // namespace retrofit
