#ifndef GTRIG_BOUNDS_HPP
#define GTRIG_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <string_view>

#include "error.hpp"
#include "params.hpp"
#include "pqtrig.hpp"
#include "special_fn.hpp"

/*
 * Closed-form two-sided estimates for the (p,q)-functions, the constant
 * pi_{p,q}, the Gauss hypergeometric function and ratios of gamma functions.
 *
 * Every function returns the raw bound values. Whether a target lies inside
 * is decided by the caller (see propcheck.hpp); a missing side is reported as
 * an infinity of the appropriate sign.
 */

namespace gtrig {

struct Envelope
{
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();

    bool brackets(double v) const noexcept { return lower < v && v < upper; }
};

namespace detail {

inline void require_open_unit(double x, const char* who)
{
    require_finite(x, "x");
    if (!(x > 0.0 && x < 1.0))
        throw DomainError(std::string(who) + " requires 0 < x < 1");
}

} // namespace detail

/// x(1 + x^q/(p(1+q))) < arcsin_{p,q} x < min(pi_{p,q} x / 2, (1 - x^q)^(-1/(p(1+q))) x).
inline Envelope arcsin_envelope(const PqParams& pq, double x)
{
    detail::require_open_unit(x, "arcsin_envelope");
    const double p = pq.p(), q = pq.q();
    const double xq = std::pow(x, q);
    const double lower = x * (1.0 + xq / (p * (1.0 + q)));
    const double chord = 0.5 * pi_pq(pq) * x;
    const double carlson = std::pow(1.0 - xq, -1.0 / (p * (1.0 + q))) * x;
    return {lower, std::min(chord, carlson)};
}

/// Bounds on arsinh_{p,q} x of the form (x^p/(1+x^q))^(1/p) times L or U.
inline Envelope arsinh_envelope(const PqParams& pq, double x)
{
    detail::require_open_unit(x, "arsinh_envelope");
    const double p = pq.p(), q = pq.q();
    const double xq = std::pow(x, q);
    const double lead = std::pow(std::pow(x, p) / (1.0 + xq), 1.0 / p);
    const double l1 = 1.0 / (1.0 - q * xq / (p * (1.0 + q) * (1.0 + xq)));
    const double l2 = std::pow(xq + 1.0, 1.0 / p) * std::pow((p * q + p + q * xq) / (p * (q + 1.0)), -1.0 / q);
    const double u = std::pow(1.0 - xq / (1.0 + xq), -q / (p * (q + 1.0)));
    return {lead * std::max(l1, l2), lead * u};
}

/// alpha(c, q) = 2 sqrt(pi) / (e q)^(1/q) * ((q(q+4) + 8)/q^3 + c)^(1/6).
inline double alpha(double c, double q)
{
    if (!(c > 0.0) || !(q > 1.0))
        throw DomainError("alpha requires c > 0 and q > 1");
    return 2.0 * std::sqrt(std::numbers::pi) / std::pow(std::numbers::e * q, 1.0 / q)
           * std::pow((q * (q + 4.0) + 8.0) / (q * q * q) + c, 1.0 / 6.0);
}

/// Two-sided estimate of pi_{p,q} built from alpha(1/100, q) and alpha(1/30, q).
inline Envelope pi_pq_envelope(const PqParams& pq)
{
    const double p = pq.p(), q = pq.q();
    const double conj_pow = std::pow(p / (p - 1.0), 1.0 / q);
    const double lower = conj_pow * alpha(1.0 / 100.0, q);
    const double upper = std::pow((p * q + p - q) / (q * (p - 1.0)), 1.0 - 1.0 / q) * conj_pow
                         * alpha(1.0 / 30.0, q);
    return {lower, upper};
}

/// Bounds on pi_{p',p}, p' = p/(p-1).
inline Envelope pi_dual_envelope(double p)
{
    detail::require_finite(p, "p");
    if (!(p > 1.0))
        throw DomainError("pi_dual_envelope requires p > 1");
    const double lead = std::pow(2.0, 1.0 - 2.0 / p);
    const double base = std::numbers::pi / p * (4.0 + p);
    const double k = 2.0 * std::sqrt(std::numbers::pi) * std::exp(ln_gamma(0.75) - ln_gamma(0.25));
    return {lead * std::sqrt(base), lead * std::sqrt(base + k * k)};
}

/// Bounds on pi_{p,p'}, the area of the unit p-circle |x|^p + |y|^p = 1.
inline Envelope pi_conj_envelope(double p)
{
    detail::require_finite(p, "p");
    if (!(p > 1.0))
        throw DomainError("pi_conj_envelope requires p > 1");
    const double lead = std::pow(2.0, 2.0 / p) * std::sqrt(std::numbers::pi);
    const double ip = 1.0 / p;
    const double lower = lead * std::sqrt(1.25 - ip);
    // log space: (2 - 1/p)^(3/2 - 1/p) / (sqrt(e) (3/2 - 1/p)^(1 - 1/p))
    const double log_ratio = (1.5 - ip) * std::log(2.0 - ip) - 0.5 - (1.0 - ip) * std::log(1.5 - ip);
    return {lower, lead * std::exp(log_ratio)};
}

/// Two-sided estimate of F(a,b;c;x) for 0 < a < c, 0 < b < c, x < 1.
inline Envelope carlson_envelope(double a, double b, double c, double x)
{
    for (double v : {a, b, c, x})
        detail::require_finite(v, "argument");
    if (!(a > 0.0 && a < c && b > 0.0 && b < c))
        throw DomainError("carlson_envelope requires 0 < a < c and 0 < b < c");
    if (!(x < 1.0))
        throw DomainError("carlson_envelope requires x < 1");
    const double l1 = std::pow(1.0 - b * x / c, -a);
    const double l2 = std::pow(1.0 - x, c - a - b) * std::pow(1.0 - x + b * x / c, a - c);
    return {std::max(l1, l2), std::pow(1.0 - x, -a * b / c)};
}

enum class GammaBoundVariant { AlzerSixthRoot, KershawRatio, StirlingRatio, WendelRatio };

inline std::string_view to_string(GammaBoundVariant v)
{
    switch (v) {
    case GammaBoundVariant::AlzerSixthRoot: return "AlzerSixthRoot";
    case GammaBoundVariant::KershawRatio: return "KershawRatio";
    case GammaBoundVariant::StirlingRatio: return "StirlingRatio";
    case GammaBoundVariant::WendelRatio: return "WendelRatio";
    }
    return "?";
}

/// Envelope of Gamma(1 + x), x >= 0.
inline Envelope alzer_gamma_envelope(double x)
{
    detail::require_finite(x, "x");
    if (!(x >= 0.0))
        throw DomainError("AlzerSixthRoot requires x >= 0");
    const double poly = 8.0 * x * x * x + 4.0 * x * x + x;
    // sqrt(pi) (x/e)^x, with 0^0 = 1
    const double log_lead = 0.5 * std::log(std::numbers::pi) + (x > 0.0 ? x * (std::log(x) - 1.0) : 0.0);
    return {std::exp(log_lead + std::log(poly + 1.0 / 100.0) / 6.0),
            std::exp(log_lead + std::log(poly + 1.0 / 30.0) / 6.0)};
}

/// Envelope of Gamma(x + 1)/Gamma(x + s), x > 0, 0 < s < 1.
inline Envelope kershaw_ratio_envelope(double x, double s)
{
    detail::require_finite(x, "x");
    detail::require_finite(s, "s");
    if (!(x > 0.0 && s > 0.0 && s < 1.0))
        throw DomainError("KershawRatio requires x > 0 and 0 < s < 1");
    return {std::pow(x + 0.5 * s, 1.0 - s), std::pow(x - 0.5 + std::sqrt(0.25 + s), 1.0 - s)};
}

/// Upper bound of Gamma(b)/Gamma(a), b > a > 0; the lower side is -inf.
inline Envelope stirling_ratio_bound(double a, double b)
{
    detail::require_finite(a, "a");
    detail::require_finite(b, "b");
    if (!(b > a && a > 0.0))
        throw DomainError("StirlingRatio requires b > a > 0");
    const double log_upper = (b - 0.5) * std::log(b) - (a - 0.5) * std::log(a) + a - b;
    return {-std::numeric_limits<double>::infinity(), std::exp(log_upper)};
}

/// Envelope of Gamma(x + s)/(x^s Gamma(x)), x > 0, 0 < s < 1 (non-strict).
inline Envelope wendel_ratio_envelope(double x, double s)
{
    detail::require_finite(x, "x");
    detail::require_finite(s, "s");
    if (!(x > 0.0 && s > 0.0 && s < 1.0))
        throw DomainError("WendelRatio requires x > 0 and 0 < s < 1");
    return {std::pow(x / (x + s), 1.0 - s), 1.0};
}

/**
 * Dispatcher over the four gamma-function estimates. Argument layout:
 *   AlzerSixthRoot {x}, KershawRatio {x, s}, StirlingRatio {a, b},
 *   WendelRatio {x, s}.
 */
inline Envelope gamma_bound(GammaBoundVariant variant, std::span<const double> args)
{
    const std::size_t need = variant == GammaBoundVariant::AlzerSixthRoot ? 1 : 2;
    if (args.size() != need)
        throw DomainError(std::string(to_string(variant)) + " expects " + std::to_string(need)
                          + " argument(s)");
    switch (variant) {
    case GammaBoundVariant::AlzerSixthRoot: return alzer_gamma_envelope(args[0]);
    case GammaBoundVariant::KershawRatio: return kershaw_ratio_envelope(args[0], args[1]);
    case GammaBoundVariant::StirlingRatio: return stirling_ratio_bound(args[0], args[1]);
    case GammaBoundVariant::WendelRatio: return wendel_ratio_envelope(args[0], args[1]);
    }
    throw DomainError("unknown gamma bound variant");
}

/// The quantity each gamma_bound variant encloses, evaluated with ln_gamma.
inline double gamma_bound_target(GammaBoundVariant variant, std::span<const double> args)
{
    switch (variant) {
    case GammaBoundVariant::AlzerSixthRoot: return gamma(1.0 + args[0]);
    case GammaBoundVariant::KershawRatio:
        return std::exp(ln_gamma(args[0] + 1.0) - ln_gamma(args[0] + args[1]));
    case GammaBoundVariant::StirlingRatio: return std::exp(ln_gamma(args[1]) - ln_gamma(args[0]));
    case GammaBoundVariant::WendelRatio:
        return std::exp(ln_gamma(args[0] + args[1]) - args[1] * std::log(args[0]) - ln_gamma(args[0]));
    }
    throw DomainError("unknown gamma bound variant");
}

} // namespace gtrig

#endif
