#ifndef GTRIG_PARAMS_HPP
#define GTRIG_PARAMS_HPP

#include <string>

#include "error.hpp"

namespace gtrig {

/// Validated exponent pair (p, q), both strictly greater than one.
class PqParams
{
public:
    PqParams(double p, double q)
        : p_(p), q_(q)
    {
        detail::require_finite(p, "p");
        detail::require_finite(q, "q");
        if (!(p > 1.0) || !(q > 1.0))
            throw DomainError("exponents must satisfy p > 1 and q > 1 (got p="
                              + std::to_string(p) + ", q=" + std::to_string(q) + ")");
    }

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    /// Conjugate exponent p' = p/(p-1).
    double p_conj() const noexcept { return p_ / (p_ - 1.0); }

    friend bool operator==(const PqParams&, const PqParams&) = default;

private:
    double p_;
    double q_;
};

} // namespace gtrig

#endif
