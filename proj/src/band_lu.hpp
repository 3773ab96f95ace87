#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace retrofit::detail {

// LU factorization with partial pivoting for a complex banded matrix, stored
// LAPACK-style: entry (i,j) lives at ab[(kl+ku+i-j)*n + j], with kl extra
// superdiagonals of workspace for pivoting fill-in.  Sized once, reused for
// every frequency point.
class BandLU {
public:
    BandLU(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku), rows_(2 * kl + ku + 1),
          ab_(static_cast<size_t>(rows_) * n), ipiv_(n) {}

    int n() const { return n_; }

    // Zero the storage before refilling.
    void reset() { std::fill(ab_.begin(), ab_.end(), std::complex<double>(0.0, 0.0)); }

    std::complex<double>& at(int i, int j) { return ab_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j]; }

    // Factor in place.  Returns the smallest |U_ii| encountered, the caller's
    // conditioning guard; a hard zero pivot reports 0.
    double factor()
    {
        double min_pivot = -1.0;
        for (int j = 0; j < n_; ++j) {
            const int km = std::min(kl_, n_ - 1 - j);
            int p = 0;
            double best = std::abs(entry(j, j));
            for (int i = 1; i <= km; ++i) {
                const double a = std::abs(entry(j + i, j));
                if (a > best) {
                    best = a;
                    p = i;
                }
            }
            ipiv_[j] = j + p;
            if (best == 0.0) return 0.0;
            if (min_pivot < 0.0 || best < min_pivot) min_pivot = best;

            const int last_col = std::min(j + kl_ + ku_, n_ - 1);
            if (p != 0)
                for (int c = j; c <= last_col; ++c)
                    std::swap(entry(j, c), entry(j + p, c));

            const std::complex<double> piv = entry(j, j);
            for (int i = j + 1; i <= j + km; ++i) {
                const std::complex<double> l = entry(i, j) / piv;
                entry(i, j) = l;
                for (int c = j + 1; c <= last_col; ++c)
                    entry(i, c) -= l * entry(j, c);
            }
        }
        return min_pivot;
    }

    // Solve with the factored matrix; rhs is overwritten by the solution.
    void solve(std::complex<double>* rhs) const
    {
        for (int j = 0; j < n_; ++j) {
            if (ipiv_[j] != j) std::swap(rhs[j], rhs[ipiv_[j]]);
            const int km = std::min(kl_, n_ - 1 - j);
            for (int i = j + 1; i <= j + km; ++i)
                rhs[i] -= centry(i, j) * rhs[j];
        }
        for (int j = n_ - 1; j >= 0; --j) {
            rhs[j] /= centry(j, j);
            const int first = std::max(0, j - kl_ - ku_);
            for (int i = first; i < j; ++i)
                rhs[i] -= centry(i, j) * rhs[j];
        }
    }

private:
    std::complex<double>& entry(int i, int j) { return ab_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j]; }
    const std::complex<double>& centry(int i, int j) const
    {
        return ab_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j];
    }

    int n_, kl_, ku_, rows_;
    std::vector<std::complex<double>> ab_;
    std::vector<int> ipiv_;
};

}  // namespace retrofit::detail
