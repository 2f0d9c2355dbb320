#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "fracsde/hurst.hpp"
#include "fracsde/rng.hpp"
#include "fracsde/time_grid.hpp"

namespace fracsde {

/// Covariance E[x_s x_t] = (|s|^{2H} + |t|^{2H} - |s-t|^{2H}) / 2 of fBm.
inline double fbm_covariance(double s, double t, HurstParam h) {
    const double a = h.two_h();
    return 0.5 * (std::pow(std::abs(s), a) + std::pow(std::abs(t), a) -
                  std::pow(std::abs(s - t), a));
}

/// Inner product of indicator functions in the Gaussian Hilbert space,
/// <1_[u,v], 1_[s,t]> = E[(x_v - x_u)(x_t - x_s)]
///                    = (|t-u|^{2H} + |s-v|^{2H} - |s-u|^{2H} - |t-v|^{2H}) / 2.
inline double indicator_inner(double u, double v, double s, double t, HurstParam h) {
    const double a = h.two_h();
    return 0.5 * (std::pow(std::abs(t - u), a) + std::pow(std::abs(s - v), a) -
                  std::pow(std::abs(s - u), a) - std::pow(std::abs(t - v), a));
}

/// <1_{(-inf,t]}, 1_[a,b]> = (|t-a|^{2H} - |t-b|^{2H}) / 2. Finite only for
/// H < 1/2 (for H >= 1/2 the defining limit diverges, hence the rejection).
inline double semiinfinite_inner(double t, double a, double b, HurstParam h) {
    h.require_rough("semiinfinite_inner");
    const double e = h.two_h();
    return 0.5 * (std::pow(std::abs(t - a), e) - std::pow(std::abs(t - b), e));
}

/// One sampled fBm trajectory on the fine grid of `grid`, x_0 = 0 always.
/// Values are shared immutably, so re-gridded views (with_coarse) alias the
/// same array. (seed, path_index) record the stream that produced the path.
class FbmPath {
public:
    FbmPath(TimeGrid grid, HurstParam h, std::vector<double> values,
            std::uint64_t seed, std::uint64_t path_index)
        : grid_(grid),
          h_(h),
          values_(std::make_shared<const std::vector<double>>(std::move(values))),
          seed_(seed),
          path_index_(path_index) {
        if (values_->size() != grid_.fine_points())
            throw std::invalid_argument("FbmPath: value count does not match grid");
        if ((*values_)[0] != 0.0)
            throw std::invalid_argument("FbmPath: path must start at 0");
    }

    const TimeGrid& grid() const noexcept { return grid_; }
    HurstParam hurst() const noexcept { return h_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t path_index() const noexcept { return path_index_; }

    double value(std::size_t fine_j) const { return (*values_)[fine_j]; }
    double coarse_value(std::size_t k) const { return (*values_)[grid_.fine_of_coarse(k)]; }
    double coarse_increment(std::size_t k) const {
        return coarse_value(k + 1) - coarse_value(k);
    }
    const std::vector<double>& values() const noexcept { return *values_; }

    /// Reinterprets the same fine array on a coarser partition with n_new
    /// coarse steps (all fine points are kept as substeps). Cheap: shares
    /// storage with *this.
    FbmPath with_coarse(std::size_t n_new) const {
        const std::size_t fine = grid_.fine_steps();
        if (n_new == 0 || fine % n_new != 0)
            throw std::invalid_argument("FbmPath::with_coarse: " + std::to_string(n_new) +
                                        " does not divide the fine step count");
        return FbmPath(TimeGrid(grid_.horizon(), n_new, fine / n_new), h_, values_, seed_,
                       path_index_);
    }

    bool same_identity(const FbmPath& o) const noexcept {
        return values_ == o.values_ ||
               (seed_ == o.seed_ && path_index_ == o.path_index_ &&
                h_.value() == o.h_.value() && grid_.horizon() == o.grid_.horizon() &&
                grid_.fine_steps() == o.grid_.fine_steps());
    }

private:
    FbmPath(TimeGrid grid, HurstParam h, std::shared_ptr<const std::vector<double>> values,
            std::uint64_t seed, std::uint64_t path_index)
        : grid_(grid), h_(h), values_(std::move(values)), seed_(seed), path_index_(path_index) {}

    TimeGrid grid_;
    HurstParam h_;
    std::shared_ptr<const std::vector<double>> values_;
    std::uint64_t seed_;
    std::uint64_t path_index_;
};

/// Exact-in-distribution fBm sampler on the fine grid of a fixed TimeGrid.
///
/// Setup computes the circulant-embedding eigenvalues of the fractional
/// Gaussian noise covariance once (FFT of the even extension of the
/// autocovariance row). Per path, 2N standard normals are shaped in Fourier
/// space and transformed back, O(N log N). Eigenvalues in
/// [-1e-10 * max, 0) are clamped to zero; anything more negative switches
/// the sampler to a dense Cholesky factorization of the increment
/// covariance (hard error if that factorization fails or the grid is too
/// large for a dense factor).
///
/// sample() is const and safe to call concurrently; per-thread FFT work
/// areas are managed internally.
class FbmSampler {
public:
    FbmSampler(TimeGrid grid, HurstParam h, bool force_cholesky = false);
    ~FbmSampler();

    FbmSampler(const FbmSampler&) = delete;
    FbmSampler& operator=(const FbmSampler&) = delete;

    /// Pure function of (master_seed, path_index): same arguments, same path.
    FbmPath sample(std::uint64_t master_seed, std::uint64_t path_index) const;

    const TimeGrid& grid() const noexcept { return grid_; }
    HurstParam hurst() const noexcept { return h_; }
    bool uses_cholesky() const noexcept { return use_cholesky_; }

private:
    TimeGrid grid_;
    HurstParam h_;
    bool use_cholesky_ = false;
    std::vector<double> sqrt_eig_;        // sqrt(lambda_j / M), j = 0..M-1
    std::vector<double> chol_;            // row-major lower factor when fallback active
    std::size_t fft_size_ = 0;
};

}  // namespace fracsde
