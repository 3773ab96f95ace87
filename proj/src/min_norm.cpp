#include "retrofit/min_norm.hpp"

#include <limits>
#include <stdexcept>

namespace retrofit {

namespace {

// Minimum-norm point of the affine hull of the selected columns: solve the
// bordered normal equations [G 1; 1' 0][alpha; mu] = [0; 1] with G = P'P.
Eigen::VectorXd affine_min_norm_weights(const Eigen::MatrixXd& pts,
                                        const std::vector<int>& support)
{
    const int k = static_cast<int>(support.size());
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            sys(a, b) = pts.col(support[a]).dot(pts.col(support[b]));
    sys.row(k).head(k).setOnes();
    sys.col(k).head(k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    Eigen::VectorXd sol = Eigen::FullPivLU<Eigen::MatrixXd>(sys).solve(rhs);
    return sol.head(k);
}

}  // namespace

MinNormPoint min_norm_point(const std::vector<Eigen::VectorXd>& points, double tol)
{
    const int count = static_cast<int>(points.size());
    if (count == 0) throw std::invalid_argument("min_norm_point: empty point set");
    const Eigen::Index dim = points.front().size();
    Eigen::MatrixXd pts(dim, count);
    double scale_sq = 0.0;
    for (int j = 0; j < count; ++j) {
        if (points[j].size() != dim)
            throw std::invalid_argument("min_norm_point: points differ in dimension");
        pts.col(j) = points[j];
        scale_sq = std::max(scale_sq, points[j].squaredNorm());
    }

    // Start from the shortest input point.
    int start = 0;
    for (int j = 1; j < count; ++j)
        if (pts.col(j).squaredNorm() < pts.col(start).squaredNorm()) start = j;

    std::vector<int> support{start};
    Eigen::VectorXd w = Eigen::VectorXd::Ones(1);
    Eigen::VectorXd x = pts.col(start);

    const double opt_tol = tol * std::max(1.0, scale_sq);
    const int max_major = 16 * (count + static_cast<int>(dim)) + 64;

    for (int major = 0; major < max_major; ++major) {
        // Optimality: no point improves the support hyperplane.
        int best = -1;
        double best_ip = std::numeric_limits<double>::infinity();
        for (int j = 0; j < count; ++j) {
            const double ip = x.dot(pts.col(j));
            if (ip < best_ip) {
                best_ip = ip;
                best = j;
            }
        }
        if (best_ip >= x.squaredNorm() - opt_tol) break;
        bool already = false;
        for (int idx : support) already = already || idx == best;
        if (already) break;  // numerically stalled

        support.push_back(best);
        w.conservativeResize(support.size());
        w(w.size() - 1) = 0.0;

        // Minor cycle: pull x to the affine minimizer, dropping points whose
        // weight would turn negative.
        for (int minor = 0; minor <= count + 1; ++minor) {
            Eigen::VectorXd alpha = affine_min_norm_weights(pts, support);
            if (!alpha.allFinite()) {
                // Degenerate affine system; drop the newest point and resume.
                support.pop_back();
                w.conservativeResize(support.size());
                break;
            }
            const double interior_tol = 1e-12;
            if ((alpha.array() > interior_tol).all()) {
                w = alpha;
                break;
            }
            double theta = 1.0;
            for (int a = 0; a < alpha.size(); ++a)
                if (alpha(a) <= interior_tol && w(a) > alpha(a))
                    theta = std::min(theta, w(a) / (w(a) - alpha(a)));
            w = theta * alpha + (1.0 - theta) * w;

            std::vector<int> kept_support;
            std::vector<double> kept_w;
            for (int a = 0; a < static_cast<int>(support.size()); ++a) {
                if (w(a) > interior_tol) {
                    kept_support.push_back(support[a]);
                    kept_w.push_back(w(a));
                }
            }
            if (kept_support.empty()) {
                kept_support.push_back(support[0]);
                kept_w.push_back(1.0);
            }
            support = kept_support;
            w = Eigen::Map<Eigen::VectorXd>(kept_w.data(), kept_w.size());
        }

        w /= w.sum();
        x.setZero();
        for (int a = 0; a < static_cast<int>(support.size()); ++a)
            x += w(a) * pts.col(support[a]);
    }

    MinNormPoint result;
    result.point = x;
    result.weights = Eigen::VectorXd::Zero(count);
    for (int a = 0; a < static_cast<int>(support.size()); ++a)
        result.weights(support[a]) += w(a);
    return result;
}

}  // namespace retrofit
