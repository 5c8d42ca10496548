#ifndef GTRIG_PQTRIG_HPP
#define GTRIG_PQTRIG_HPP

#include <cmath>

#include "error.hpp"
#include "params.hpp"
#include "special_fn.hpp"

namespace gtrig {

/// pi_{p,q} = (2/q) B(1 - 1/p, 1/q), twice arcsin_{p,q}(1).
inline double pi_pq(const PqParams& pq)
{
    return 2.0 / pq.q() * beta(1.0 - 1.0 / pq.p(), 1.0 / pq.q());
}

/// arcsin_{p,q} x = x F(1/p, 1/q; 1 + 1/q; x^q) for x in [0, 1].
inline EvalResult arcsin_pq_eval(const PqParams& pq, double x)
{
    detail::require_finite(x, "x");
    if (x < 0.0 || x > 1.0)
        throw DomainError("arcsin_{p,q} requires 0 <= x <= 1");
    if (x == 0.0)
        return {0.0, 0.0, Method::DirectSeries};
    const double q = pq.q();
    // 1 - x^q without cancellation, for x close to 1
    const double gap = -std::expm1(q * std::log(x));
    const EvalResult f = gauss_2f1(HypTriple(1.0 / pq.p(), 1.0 / q, 1.0 + 1.0 / q), std::pow(x, q), gap);
    return {x * f.value, x * f.abs_err_est, f.method};
}

inline double arcsin_pq(const PqParams& pq, double x)
{
    return arcsin_pq_eval(pq, x).value;
}

/// arccos_{p,q} x = arcsin_{p,q}((1 - x^p)^(1/q)).
inline EvalResult arccos_pq_eval(const PqParams& pq, double x)
{
    detail::require_finite(x, "x");
    if (x < 0.0 || x > 1.0)
        throw DomainError("arccos_{p,q} requires 0 <= x <= 1");
    return arcsin_pq_eval(pq, std::pow(1.0 - std::pow(x, pq.p()), 1.0 / pq.q()));
}

inline double arccos_pq(const PqParams& pq, double x)
{
    return arccos_pq_eval(pq, x).value;
}

/**
 * pi_{p,q}/2 - arccos_{p,q} x = (1/q) B_{x^p}(1 - 1/p, 1/q)
 *   = x^(p-1) / (q (1 - 1/p)) F(1 - 1/p, 1 - 1/q; 2 - 1/p; x^p).
 *
 * Evaluated directly, this stays accurate for small x, where the
 * subtraction from pi_{p,q}/2 would lose the digits of interest.
 */
inline double arccos_complement_pq(const PqParams& pq, double x)
{
    detail::require_finite(x, "x");
    if (x < 0.0 || x > 1.0)
        throw DomainError("arccos_complement_pq requires 0 <= x <= 1");
    if (x == 0.0)
        return 0.0;
    const double p = pq.p(), q = pq.q();
    const double a = 1.0 - 1.0 / p;
    const double f = gauss_2f1(HypTriple(a, 1.0 - 1.0 / q, 1.0 + a), std::pow(x, p)).value;
    return std::pow(x, p - 1.0) / (q * a) * f;
}

/**
 * arsinh_{p,q} x = int_0^x (1 + t^q)^(-1/p) dt, for any x >= 0.
 *
 * Always evaluated through the Pfaff-transformed form
 *   (x^p / (1 + x^q))^(1/p) F(1, 1/p; 1 + 1/q; x^q / (1 + x^q)),
 * whose argument stays in [0, 1) and whose series has positive terms.
 */
inline EvalResult arsinh_pq_eval(const PqParams& pq, double x)
{
    detail::require_finite(x, "x");
    if (x < 0.0)
        throw DomainError("arsinh_{p,q} requires x >= 0");
    if (x == 0.0)
        return {0.0, 0.0, Method::DirectSeries};
    const double p = pq.p();
    const double q = pq.q();
    const double xq = std::pow(x, q);
    const double w = xq / (1.0 + xq);
    // (x^p/(1+x^q))^(1/p) = x (1 + x^q)^(-1/p)
    const double scale = x * std::pow(1.0 + xq, -1.0 / p);
    EvalResult f = gauss_2f1(HypTriple(1.0, 1.0 / p, 1.0 + 1.0 / q), w, 1.0 / (1.0 + xq));
    if (f.method == Method::DirectSeries)
        f.method = Method::PfaffSeries;
    return {scale * f.value, scale * f.abs_err_est, f.method};
}

inline double arsinh_pq(const PqParams& pq, double x)
{
    return arsinh_pq_eval(pq, x).value;
}

/// m_{p,q} = 2^(-1/p) F(1, 1/p; 1 + 1/q; 1/2) = arsinh_{p,q}(1).
inline double m_pq(const PqParams& pq)
{
    const double p = pq.p();
    return std::pow(2.0, -1.0 / p) * gauss_2f1(HypTriple(1.0, 1.0 / p, 1.0 + 1.0 / pq.q()), 0.5).value;
}

/// Constants attached to an exponent pair.
struct PqConstants
{
    double pi_half;     ///< pi_{p,q} / 2
    double m;           ///< m_{p,q}
    double lambda_star; ///< q(p-1)/p, eigenvalue for which sin_{p,q} solves the (p,q)-Laplacian BVP
};

inline PqConstants constants(const PqParams& pq)
{
    return {0.5 * pi_pq(pq), m_pq(pq), pq.q() * (pq.p() - 1.0) / pq.p()};
}

} // namespace gtrig

#endif
