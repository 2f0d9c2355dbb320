#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracsde {

/// Uniform partition of [0,T] with n coarse steps t_k = k T / n, each coarse
/// step subdivided into m fine steps u_j = j T / (n m). Every coarse point is
/// a fine point (u_{k m} = t_k).
///
/// The projections eta / lambda are defined on indices, never by comparing
/// floating-point times: for a fine index j, eta maps to the coarse index
/// floor(j/m) and lambda to ceil(j/m). Conventions at the ends: eta(T) = T
/// and lambda(t_k) = t_k.
class TimeGrid {
public:
    TimeGrid(double horizon, std::size_t coarse_steps, std::size_t substeps)
        : T_(horizon), n_(coarse_steps), m_(substeps) {
        if (!(horizon > 0.0))
            throw std::invalid_argument("TimeGrid: horizon must be positive");
        if (n_ == 0 || m_ == 0)
            throw std::invalid_argument("TimeGrid: n and m must be positive");
    }

    double horizon() const noexcept { return T_; }
    std::size_t coarse_steps() const noexcept { return n_; }
    std::size_t substeps() const noexcept { return m_; }

    std::size_t fine_steps() const noexcept { return n_ * m_; }
    std::size_t fine_points() const noexcept { return n_ * m_ + 1; }

    double coarse_dt() const noexcept { return T_ / static_cast<double>(n_); }
    double fine_dt() const noexcept { return T_ / static_cast<double>(n_ * m_); }

    double coarse_time(std::size_t k) const noexcept {
        return static_cast<double>(k) * T_ / static_cast<double>(n_);
    }
    double fine_time(std::size_t j) const noexcept {
        return static_cast<double>(j) * T_ / static_cast<double>(n_ * m_);
    }

    std::size_t fine_of_coarse(std::size_t k) const noexcept { return k * m_; }

    /// eta on indices: coarse index of the left endpoint of the coarse step
    /// containing fine point j (j = n*m maps to coarse index n).
    std::size_t eta_coarse(std::size_t j) const noexcept { return j / m_; }

    /// lambda on indices: coarse index of t_{k+1} for j strictly inside a
    /// coarse step, k for j exactly on a coarse point.
    std::size_t lambda_coarse(std::size_t j) const noexcept { return (j + m_ - 1) / m_; }

    bool operator==(const TimeGrid& o) const noexcept {
        return T_ == o.T_ && n_ == o.n_ && m_ == o.m_;
    }

    void check_coarse_range(std::size_t k_lo, std::size_t k_hi, const char* what) const {
        if (k_lo > k_hi || k_hi > n_)
            throw std::invalid_argument(std::string(what) + ": coarse range [" +
                                        std::to_string(k_lo) + "," + std::to_string(k_hi) +
                                        "] invalid for n=" + std::to_string(n_));
    }

private:
    double T_;
    std::size_t n_;
    std::size_t m_;
};

}  // namespace fracsde
