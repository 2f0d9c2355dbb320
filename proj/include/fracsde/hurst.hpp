#pragma once

#include <cmath>
#include <stdexcept>

namespace fracsde {

/// Hurst index of the driving noise. Valid range is (0,1); the limit
/// theory implemented by the sums/constants modules additionally needs
/// h < 1/2, which callers request via require_rough().
class HurstParam {
public:
    explicit HurstParam(double h) : h_(h) {
        if (!(h > 0.0) || !(h < 1.0) || !std::isfinite(h))
            throw std::invalid_argument("HurstParam: h must lie in (0,1), got " +
                                        std::to_string(h));
    }

    double value() const noexcept { return h_; }
    double two_h() const noexcept { return 2.0 * h_; }

    bool is_rough() const noexcept { return h_ < 0.5; }

    /// Throws unless h < 1/2. `what` names the operation for the message.
    void require_rough(const char* what) const {
        if (!is_rough())
            throw std::invalid_argument(std::string(what) +
                                        ": requires Hurst parameter < 1/2, got " +
                                        std::to_string(h_));
    }

private:
    double h_;
};

/// Least ell with ell * h > 1/2 (the compensation depth needed for the
/// n^{-(H+1/2)} rate).
inline int least_compensation_order(HurstParam h) {
    int ell = static_cast<int>(std::floor(0.5 / h.value())) + 1;
    while (ell * h.value() <= 0.5) ++ell;  // guards the boundary case 0.5/h integral
    return ell;
}

}  // namespace fracsde
