#ifndef GTRIG_SPECIAL_FN_HPP
#define GTRIG_SPECIAL_FN_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"
#include "quadrature.hpp"

namespace gtrig {

/// Natural log of the gamma function for x > 0 (Lanczos, g = 7, nine terms).
inline double ln_gamma(double x)
{
    detail::require_finite(x, "ln_gamma argument");
    if (!(x > 0.0))
        throw DomainError("ln_gamma requires x > 0");

    static constexpr std::array<double, 9> coef = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;

    // The series is accurate for x >= 1/2; shift smaller arguments up once.
    if (x < 0.5)
        return ln_gamma(x + 1.0) - std::log(x);

    const double z = x - 1.0;
    double a = coef[0];
    for (std::size_t i = 1; i < coef.size(); ++i)
        a += coef[i] / (z + static_cast<double>(i));
    const double t = z + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

inline double gamma(double x)
{
    return std::exp(ln_gamma(x));
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), evaluated in log space.
inline double beta(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("beta requires x > 0 and y > 0");
    return std::exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y));
}

namespace detail {

inline bool is_nonpositive_integer(double v)
{
    return v <= 0.0 && v == std::floor(v);
}

/// 1/Gamma(x) on the whole real line (zero at the poles).
inline double rgamma_real(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    if (x > 0.0)
        return std::exp(-ln_gamma(x));
    // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
    return std::sin(std::numbers::pi * x) * gamma(1.0 - x) / std::numbers::pi;
}

} // namespace detail

/// Parameters (a, b; c) of a Gauss hypergeometric function.
class HypTriple
{
public:
    HypTriple(double a, double b, double c)
        : a_(a), b_(b), c_(c)
    {
        detail::require_finite(a, "a");
        detail::require_finite(b, "b");
        detail::require_finite(c, "c");
        if (detail::is_nonpositive_integer(c))
            throw DomainError("hypergeometric parameter c must not be zero or a negative integer");
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    /// Gauss summation at x = 1 applies (c - a - b > 0).
    bool gauss_summable() const noexcept { return c_ - a_ - b_ > 0.0; }

private:
    double a_, b_, c_;
};

enum class Method { DirectSeries, PfaffSeries, EulerSeries, EndpointGauss, Quadrature };

inline std::string_view to_string(Method m)
{
    switch (m) {
    case Method::DirectSeries: return "DirectSeries";
    case Method::PfaffSeries: return "PfaffSeries";
    case Method::EulerSeries: return "EulerSeries";
    case Method::EndpointGauss: return "EndpointGauss";
    case Method::Quadrature: return "Quadrature";
    }
    return "?";
}

struct EvalResult
{
    double value = 0.0;
    double abs_err_est = 0.0;
    Method method = Method::DirectSeries;
};

namespace hyp {

inline constexpr double series_rel_tol = 1e-15;
inline constexpr int max_terms = 10000;
inline constexpr double x_switch = 0.95;

} // namespace hyp

namespace detail {

inline std::optional<EvalResult> try_series(const HypTriple& t, double x)
{
    const double a = t.a(), b = t.b(), c = t.c();
    double term = 1.0;
    double sum = 1.0;
    int small_run = 0;
    for (int n = 0; n < hyp::max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        sum += term;
        if (term == 0.0)
            return EvalResult{sum, 0.0, Method::DirectSeries};
        // Two consecutive small terms, so a transient dip (a + n near zero)
        // does not stop the summation early.
        small_run = std::abs(term) <= hyp::series_rel_tol * std::abs(sum) ? small_run + 1 : 0;
        if (small_run == 2) {
            const double dn1 = dn + 1.0;
            const double next = term * (a + dn1) * (b + dn1) / ((c + dn1) * (dn1 + 1.0)) * x;
            return EvalResult{sum, std::abs(next), Method::DirectSeries};
        }
    }
    return std::nullopt;
}

/*
 * Euler integral representation
 *   F(a,b;c;x) = 1/B(b,c-b) int_0^1 t^(b-1) (1-t)^(c-b-1) (1-xt)^(-a) dt,
 * valid for c > b > 0 and x < 1 (a and b may be swapped). The caller
 * supplies 1 - x separately: near x = 1 the integrand depends on it at a
 * scale where 1 - x recomputed from x has lost most of its digits.
 */
inline std::optional<EvalResult> try_euler_integral(const HypTriple& t, double x, double one_minus_x)
{
    double a = t.a(), b = t.b();
    const double c = t.c();
    if (!(c > b && b > 0.0)) {
        if (c > a && a > 0.0)
            std::swap(a, b);
        else
            return std::nullopt;
    }
    auto integrand = [=](double, double d_lo, double d_hi) {
        const double one_minus_xt = one_minus_x + x * d_hi;
        return std::pow(d_lo, b - 1.0) * std::pow(d_hi, c - b - 1.0) * std::pow(one_minus_xt, -a);
    };
    const QuadResult r = detail::integrate_de_impl(integrand, 0.0, 1.0, 1e-13, Tolerance::Relative);
    const double norm = beta(b, c - b);
    return EvalResult{r.value / norm, r.abs_err_est / norm, Method::Quadrature};
}

} // namespace detail

/// Power series of 2F1 for |x| < 1; throws NonConvergent past the term budget.
inline EvalResult hyp_series(const HypTriple& t, double x)
{
    detail::require_finite(x, "x");
    if (!(std::abs(x) < 1.0))
        throw DomainError("hypergeometric series requires |x| < 1");
    if (auto r = detail::try_series(t, x))
        return *r;
    throw NonConvergent("hypergeometric series exceeded " + std::to_string(hyp::max_terms)
                        + " terms");
}

/// Gauss summation F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
inline EvalResult gauss_summation(const HypTriple& t)
{
    if (!t.gauss_summable())
        throw DomainError("F(a,b;c;1) requires c - a - b > 0");
    const double a = t.a(), b = t.b(), c = t.c();
    const double value = detail::rgamma_real(c - a) * detail::rgamma_real(c - b)
                         / (detail::rgamma_real(c) * detail::rgamma_real(c - a - b));
    return {value, 0.0, Method::EndpointGauss};
}

/**
 * Gauss hypergeometric function F(a,b;c;x) for real x <= 1, with 1 - x
 * passed separately by callers that know it more accurately than 1.0 - x.
 *
 * Routing:
 *  - |x| < 0.95: direct power series.
 *  - x <= -0.95: Pfaff transformation
 *      F(a,b;c;x) = (1-x)^(-b) F(b,c-a;c;x/(x-1)), argument in (0, 1).
 *  - 0.95 <= x < 1: Euler transformation
 *      F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x),
 *    then the Euler integral by tanh-sinh quadrature if the series still
 *    exceeds its budget.
 *  - x = 1: Gauss summation, requires c > a + b.
 */
inline EvalResult gauss_2f1(const HypTriple& t, double x, double one_minus_x)
{
    detail::require_finite(x, "x");
    detail::require_finite(one_minus_x, "1 - x");
    if (x > 1.0)
        throw DomainError("gauss_2f1 requires x <= 1");
    if (x == 0.0)
        return {1.0, 0.0, Method::DirectSeries};
    // x may round to 1 while the supplied complement is still positive.
    if (one_minus_x <= 0.0)
        return gauss_summation(t);

    if (std::abs(x) < hyp::x_switch) {
        if (auto r = detail::try_series(t, x))
            return *r;
    } else if (x < 0.0) {
        const double scale = std::pow(one_minus_x, -t.b());
        const double z = x / (x - 1.0);
        EvalResult inner = gauss_2f1(HypTriple(t.b(), t.c() - t.a(), t.c()), z, 1.0 / one_minus_x);
        if (inner.method == Method::DirectSeries)
            inner.method = Method::PfaffSeries;
        return {scale * inner.value, scale * inner.abs_err_est, inner.method};
    } else {
        const double scale = std::pow(one_minus_x, t.c() - t.a() - t.b());
        if (auto r = detail::try_series(HypTriple(t.c() - t.a(), t.c() - t.b(), t.c()), x))
            return {scale * r->value, scale * r->abs_err_est, Method::EulerSeries};
    }

    if (auto r = detail::try_euler_integral(t, x, one_minus_x))
        return *r;
    throw NonConvergent("gauss_2f1: no convergent route for this parameter triple");
}

inline EvalResult gauss_2f1(const HypTriple& t, double x)
{
    return gauss_2f1(t, x, 1.0 - x);
}

inline double hyp2f1(double a, double b, double c, double x)
{
    return gauss_2f1(HypTriple(a, b, c), x).value;
}

} // namespace gtrig

#endif
