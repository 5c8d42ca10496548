#ifndef GTRIG_INVERSION_HPP
#define GTRIG_INVERSION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "error.hpp"
#include "params.hpp"
#include "pqtrig.hpp"

namespace gtrig {

enum class InitialGuess { LinearScale, Midpoint };

struct RootConfig
{
    double abs_tol = 1e-13;
    int max_iter = 200;
    InitialGuess initial_guess_policy = InitialGuess::LinearScale;

    void validate() const
    {
        if (!(abs_tol >= 1e-15 && abs_tol <= 1e-6))
            throw DomainError("RootConfig: abs_tol must lie in [1e-15, 1e-6]");
        if (max_iter < 8)
            throw DomainError("RootConfig: max_iter must be at least 8");
    }
};

namespace detail {

template <class F, class DF>
double invert_bracketed(F& f, DF& f_deriv, double y, double lo, double hi, double f_lo, double f_hi,
                        const RootConfig& cfg, std::optional<double> guess)
{
    const double tol = cfg.abs_tol * (1.0 + std::abs(y));
    if (y < f_lo - tol || y > f_hi + tol)
        throw BracketInvalid("target " + std::to_string(y) + " outside [f(lo), f(hi)] = ["
                             + std::to_string(f_lo) + ", " + std::to_string(f_hi) + "]");
    if (std::abs(f_lo - y) <= tol)
        return lo;
    if (std::abs(f_hi - y) <= tol)
        return hi;

    double x;
    if (guess) {
        x = *guess;
    } else if (cfg.initial_guess_policy == InitialGuess::LinearScale) {
        x = lo + (y - f_lo) / (f_hi - f_lo) * (hi - lo);
    } else {
        x = 0.5 * (lo + hi);
    }
    const double margin = 1e-6 * (hi - lo);
    x = std::clamp(x, lo + margin, hi - margin);

    double best_x = x;
    double best_r = INFINITY;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double r = f(x) - y;
        if (std::abs(r) < best_r) {
            best_r = std::abs(r);
            best_x = x;
        }
        if (std::abs(r) <= tol)
            return x;
        if (r < 0.0)
            lo = x;
        else
            hi = x;

        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) {
            // Bracket exhausted at double resolution.
            const double r_lo = std::abs(f(lo) - y);
            const double r_hi = std::abs(f(hi) - y);
            const double cand = r_lo <= r_hi ? lo : hi;
            return std::min(r_lo, r_hi) <= best_r ? cand : best_x;
        }
        const double newton = x - r / f_deriv(x);
        x = (std::isfinite(newton) && newton > lo && newton < hi) ? newton : mid;
    }
    throw MaxIterExceeded("invert_monotone: no convergence after " + std::to_string(cfg.max_iter)
                          + " iterations");
}

} // namespace detail

/**
 * Solve f(x) = y for increasing f on [lo, hi] by Newton's method safeguarded
 * with bisection.
 *
 * The bracket [lo, hi] always encloses the root. A Newton step is taken when
 * it lands strictly inside the bracket, otherwise the bracket is bisected.
 * Convergence is declared on the residual |f(x) - y| <= abs_tol (1 + |y|).
 * If the bracket shrinks to two adjacent doubles before that, the endpoint
 * with the smaller residual is returned: no representable x does better.
 *
 * `guess` overrides the initial iterate chosen by cfg.initial_guess_policy.
 */
template <class F, class DF>
double invert_monotone(F&& f, DF&& f_deriv, double y, double lo, double hi,
                       const RootConfig& cfg = {}, std::optional<double> guess = std::nullopt)
{
    cfg.validate();
    detail::require_finite(y, "target value");
    if (!(lo < hi))
        throw BracketInvalid("invert_monotone requires lo < hi");
    return detail::invert_bracketed(f, f_deriv, y, lo, hi, f(lo), f(hi), cfg, guess);
}

/// sin_{p,q} for a fixed exponent pair; pi_{p,q}/2 is computed once.
class SinPq
{
public:
    explicit SinPq(const PqParams& pq, const RootConfig& cfg = {})
        : pq_(pq), cfg_(cfg), pi_half_(0.5 * pi_pq(pq))
    {
        cfg_.validate();
    }

    double pi_half() const noexcept { return pi_half_; }

    double operator()(double y) const
    {
        detail::require_finite(y, "y");
        if (y < 0.0 || y > pi_half_)
            throw DomainError("sin_{p,q} requires 0 <= y <= pi_{p,q}/2");
        if (y == 0.0)
            return 0.0;
        if (y == pi_half_)
            return 1.0;
        const double p = pq_.p(), q = pq_.q();
        auto f = [&](double x) { return arcsin_pq(pq_, x); };
        auto df = [&](double x) { return std::pow(1.0 - std::pow(x, q), -1.0 / p); };
        std::optional<double> guess;
        if (cfg_.initial_guess_policy == InitialGuess::LinearScale)
            guess = std::clamp(y / pi_half_, 1e-6, 1.0 - 1e-6);
        return detail::invert_bracketed(f, df, y, 0.0, 1.0, 0.0, pi_half_, cfg_, guess);
    }

    /**
     * cos_{p,q}(y) = (1 - sin_{p,q}(y)^q)^(1/p), so that cos^p + sin^q = 1.
     *
     * On the upper half of the range sin is too close to 1 for that formula,
     * so cos is found instead by inverting pi_{p,q}/2 - arccos_{p,q}, whose
     * target pi_{p,q}/2 - y is exact there.
     */
    double cos(double y) const
    {
        const double s = (*this)(y);
        if (y < 0.5 * pi_half_)
            return std::pow(1.0 - std::pow(s, pq_.q()), 1.0 / pq_.p());
        if (y == pi_half_)
            return 0.0;
        const double p = pq_.p(), q = pq_.q();
        const double w = pi_half_ - y;
        // Solve complement(v)/w = 1 so the residual test is relative to w.
        auto f = [&](double v) { return arccos_complement_pq(pq_, v) / w; };
        auto df = [&](double v) {
            return p / q * std::pow(v, p - 2.0) * std::pow(1.0 - std::pow(v, p), 1.0 / q - 1.0) / w;
        };
        RootConfig cfg = cfg_;
        cfg.abs_tol = 1e-15;
        const double guess = std::pow(1.0 - std::pow(s, q), 1.0 / p);
        return detail::invert_bracketed(f, df, 1.0, 0.0, 1.0, 0.0, pi_half_ / w, cfg,
                                        std::clamp(guess, 1e-12, 1.0 - 1e-12));
    }

    /// d/dy sin_{p,q}(y) = (1 - sin^q)^(1/p).
    double derivative(double y) const { return cos(y); }

private:
    PqParams pq_;
    RootConfig cfg_;
    double pi_half_;
};

inline constexpr double default_sinh_x_max = 10.0;

/// sinh_{p,q} on [0, arsinh_{p,q}(x_max)] for a fixed exponent pair.
class SinhPq
{
public:
    explicit SinhPq(const PqParams& pq, const RootConfig& cfg = {}, double x_max = default_sinh_x_max)
        : pq_(pq), cfg_(cfg), x_max_(x_max)
    {
        cfg_.validate();
        if (!(x_max > 0.0) || !std::isfinite(x_max))
            throw DomainError("sinh_{p,q}: x_max must be positive and finite");
        y_max_ = arsinh_pq(pq, x_max);
    }

    double x_max() const noexcept { return x_max_; }
    double y_max() const noexcept { return y_max_; }

    double operator()(double y) const
    {
        detail::require_finite(y, "y");
        if (y < 0.0 || y > y_max_)
            throw DomainError("sinh_{p,q} requires 0 <= y <= arsinh_{p,q}(x_max) = "
                              + std::to_string(y_max_));
        if (y == 0.0)
            return 0.0;
        if (y == y_max_)
            return x_max_;
        const double p = pq_.p(), q = pq_.q();
        auto f = [&](double x) { return arsinh_pq(pq_, x); };
        auto df = [&](double x) { return std::pow(1.0 + std::pow(x, q), -1.0 / p); };
        std::optional<double> guess;
        if (cfg_.initial_guess_policy == InitialGuess::LinearScale)
            guess = y;
        return detail::invert_bracketed(f, df, y, 0.0, x_max_, 0.0, y_max_, cfg_, guess);
    }

    /// d/dy sinh_{p,q}(y) = (1 + sinh^q)^(1/p).
    double derivative(double y) const
    {
        return std::pow(1.0 + std::pow((*this)(y), pq_.q()), 1.0 / pq_.p());
    }

private:
    PqParams pq_;
    RootConfig cfg_;
    double x_max_;
    double y_max_ = 0.0;
};

inline double sin_pq(const PqParams& pq, double y, const RootConfig& cfg = {})
{
    return SinPq(pq, cfg)(y);
}

inline double cos_pq(const PqParams& pq, double y, const RootConfig& cfg = {})
{
    return SinPq(pq, cfg).cos(y);
}

inline double sin_pq_derivative(const PqParams& pq, double y, const RootConfig& cfg = {})
{
    return SinPq(pq, cfg).derivative(y);
}

/// Upper end of the domain of sinh_pq: arsinh_{p,q}(x_max).
inline double sinh_y_max(const PqParams& pq, double x_max = default_sinh_x_max)
{
    detail::require_finite(x_max, "x_max");
    return arsinh_pq(pq, x_max);
}

inline double sinh_pq(const PqParams& pq, double y, const RootConfig& cfg = {},
                      double x_max = default_sinh_x_max)
{
    return SinhPq(pq, cfg, x_max)(y);
}

inline double sinh_pq_derivative(const PqParams& pq, double y, const RootConfig& cfg = {})
{
    return SinhPq(pq, cfg).derivative(y);
}

} // namespace gtrig

#endif
