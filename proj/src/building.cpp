#include "retrofit/building.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace retrofit {

BuildingSpec BuildingSpec::uniform(int floors, double mass, double stiffness, double damping)
{
    BuildingSpec spec;
    spec.mass = Eigen::VectorXd::Constant(floors, mass);
    spec.stiffness = Eigen::VectorXd::Constant(floors, stiffness);
    spec.damping = Eigen::VectorXd::Constant(floors, damping);
    return spec;
}

void BuildingSpec::validate() const
{
    if (mass.size() < 1)
        throw std::invalid_argument("building must have at least one floor");
    if (stiffness.size() != mass.size() || damping.size() != mass.size())
        throw std::invalid_argument("per-floor property vectors differ in length");
    if ((mass.array() <= 0.0).any())
        throw std::invalid_argument("floor masses must be positive");
    if ((stiffness.array() <= 0.0).any())
        throw std::invalid_argument("story stiffnesses must be positive");
    if ((damping.array() < 0.0).any())
        throw std::invalid_argument("story damping must be nonnegative");
}

CoupledModel assemble_model(const BuildingSpec& b1, const BuildingSpec& b2)
{
    b1.validate();
    b2.validate();

    const bool second_taller = b2.floors() > b1.floors();
    const BuildingSpec& tall = second_taller ? b2 : b1;
    const BuildingSpec& low = second_taller ? b1 : b2;

    CoupledModel model;
    model.n = low.floors();
    model.m = tall.floors() - low.floors();
    model.building_order = second_taller ? 2 : 1;

    const int nt = tall.floors();
    const int N = model.size();

    model.M = Eigen::MatrixXd::Zero(N, N);
    model.M.diagonal().head(nt) = tall.mass;
    model.M.diagonal().tail(model.n) = low.mass;

    model.K = Eigen::MatrixXd::Zero(N, N);
    model.K.topLeftCorner(nt, nt) = chain_matrix<double>(tall.stiffness);
    model.K.bottomRightCorner(model.n, model.n) = chain_matrix<double>(low.stiffness);

    model.C = Eigen::MatrixXd::Zero(N, N);
    model.C.topLeftCorner(nt, nt) = chain_matrix<double>(tall.damping);
    model.C.bottomRightCorner(model.n, model.n) = chain_matrix<double>(low.damping);

    return model;
}

DamperLayout DamperLayout::none(int n)
{
    DamperLayout layout;
    layout.coefficients = Eigen::VectorXd::Zero(n);
    return layout;
}

DamperLayout DamperLayout::from_coefficients(const Eigen::VectorXd& cd)
{
    DamperLayout layout;
    layout.coefficients = cd;
    for (int i = 0; i < cd.size(); ++i)
        if (cd(i) != 0.0) layout.active_floors.push_back(i + 1);
    return layout;
}

void DamperLayout::validate(int n) const
{
    if (coefficients.size() != n)
        throw std::invalid_argument("coefficient vector length " +
                                    std::to_string(coefficients.size()) +
                                    " does not match floor count " + std::to_string(n));
    if (!std::is_sorted(active_floors.begin(), active_floors.end()))
        throw std::invalid_argument("active floors must be sorted ascending");
    if (std::adjacent_find(active_floors.begin(), active_floors.end()) != active_floors.end())
        throw std::invalid_argument("duplicate active floor");
    for (int f : active_floors)
        if (f < 1 || f > n)
            throw std::invalid_argument("active floor " + std::to_string(f) +
                                        " outside 1.." + std::to_string(n));
    for (int i = 0; i < coefficients.size(); ++i) {
        if (coefficients(i) < 0.0)
            throw std::invalid_argument("damper coefficients must be nonnegative");
        if (coefficients(i) != 0.0 &&
            !std::binary_search(active_floors.begin(), active_floors.end(), i + 1))
            throw std::invalid_argument("nonzero coefficient on inactive floor " +
                                        std::to_string(i + 1));
    }
}

Eigen::MatrixXd assemble_damper_matrix(const DamperLayout& layout, int n, int m)
{
    layout.validate(n);
    const int N = 2 * n + m;
    Eigen::MatrixXd cd = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < n; ++i) {
        const double c = layout.coefficients(i);
        cd(i, i) += c;
        cd(n + m + i, n + m + i) += c;
        cd(i, n + m + i) -= c;
        cd(n + m + i, i) -= c;
    }
    return cd;
}

}  // namespace retrofit
