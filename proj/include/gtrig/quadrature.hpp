#ifndef GTRIG_QUADRATURE_HPP
#define GTRIG_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "params.hpp"

namespace gtrig {

struct QuadResult
{
    double value = 0.0;
    double abs_err_est = 0.0;
    int levels_used = 0;
};

namespace detail {

/*
 * Tanh-sinh (double exponential) nodes on the reference interval (-1, 1).
 *
 * A node at parameter t maps to tanh(pi/2 sinh t). Besides the weight we keep
 * the normalised distances to both interval ends, 1/(1+exp(-2u)) and
 * 1/(1+exp(2u)), because 1 - tanh(u) is useless in floating point once u is
 * large and the integrands of interest are singular exactly there.
 */
struct DeNode
{
    double from_lo; // (x - lo)/(hi - lo)
    double from_hi; // (hi - x)/(hi - lo)
    double weight;  // dx/dt on the reference interval, i.e. pi/2 cosh t sech^2 u
};

struct DeTable
{
    static constexpr int min_level = 4;
    static constexpr int max_level = 12;
    static constexpr double t_max = 6.5;

    // nodes[level] holds the nodes that first appear at that level; level
    // min_level holds the complete coarse rule.
    std::vector<std::vector<DeNode>> nodes;

    static double step(int level) { return 2.0 * t_max / static_cast<double>(1 << level); }

    DeTable()
        : nodes(max_level + 1)
    {
        constexpr double half_pi = std::numbers::pi / 2.0;
        auto make = [&](double t) {
            const double u = half_pi * std::sinh(t);
            const double e = std::exp(-2.0 * std::abs(u));
            const double near = e / (1.0 + e); // distance to the closer end
            const double far = 1.0 / (1.0 + e);
            const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
            DeNode n{};
            n.from_lo = u >= 0.0 ? far : near;
            n.from_hi = u >= 0.0 ? near : far;
            n.weight = half_pi * std::cosh(t) * sech2;
            return n;
        };
        const int n_coarse = 1 << min_level;
        const double h0 = step(min_level);
        for (int j = -n_coarse / 2; j <= n_coarse / 2; ++j)
            nodes[min_level].push_back(make(j * h0));
        for (int level = min_level + 1; level <= max_level; ++level) {
            const int n = 1 << level;
            const double h = step(level);
            for (int j = -n / 2 + 1; j <= n / 2; j += 2)
                nodes[level].push_back(make(j * h));
        }
    }
};

inline const DeTable& de_table()
{
    static const DeTable table;
    return table;
}

} // namespace detail

enum class Tolerance { Absolute, Relative };

namespace detail {

template <class F>
QuadResult integrate_de_impl(F&& f, double lo, double hi, double tol, Tolerance mode);

} // namespace detail

/**
 * Integrate f over (lo, hi) by tanh-sinh quadrature with level doubling.
 *
 * f is called either as f(x) or, if it accepts three doubles, as
 * f(x, x - lo, hi - x). The second form receives the distances to the ends
 * computed without cancellation, which is what lets integrands such as
 * (1 - t^q)^(-1/p) be evaluated accurately right next to their singularity.
 * Nodes never coincide with lo or hi.
 *
 * Convergence is declared when two successive levels agree to within tol.
 */
template <class F>
QuadResult integrate_de(F&& f, double lo, double hi, double tol)
{
    return detail::integrate_de_impl(std::forward<F>(f), lo, hi, tol, Tolerance::Absolute);
}

namespace detail {

/// As integrate_de; in Relative mode the level difference is compared with tol |estimate|.
template <class F>
QuadResult integrate_de_impl(F&& f, double lo, double hi, double tol, Tolerance mode)
{
    detail::require_finite(lo, "lower limit");
    detail::require_finite(hi, "upper limit");
    if (!(lo < hi))
        throw DomainError("integrate_de requires lo < hi");
    if (!(tol >= 1e-14 && tol <= 1e-6))
        throw DomainError("integrate_de tolerance must lie in [1e-14, 1e-6]");

    using Table = detail::DeTable;
    const auto& table = detail::de_table();
    const double width = hi - lo;
    const double half_width = 0.5 * width;

    auto eval = [&](const detail::DeNode& n) -> double {
        const double d_lo = width * n.from_lo;
        const double d_hi = width * n.from_hi;
        if (d_lo <= 0.0 || d_hi <= 0.0 || n.weight == 0.0)
            return 0.0;
        const double x = n.from_lo <= 0.5 ? lo + d_lo : hi - d_hi;
        double fx;
        if constexpr (std::is_invocable_r_v<double, F&, double, double, double>) {
            fx = f(x, d_lo, d_hi);
        } else {
            if (x <= lo || x >= hi)
                return 0.0;
            fx = f(x);
        }
        return fx * n.weight;
    };

    double sum = 0.0;
    for (const auto& n : table.nodes[Table::min_level])
        sum += eval(n);
    double estimate = half_width * Table::step(Table::min_level) * sum;

    for (int level = Table::min_level + 1; level <= Table::max_level; ++level) {
        for (const auto& n : table.nodes[level])
            sum += eval(n);
        const double next = half_width * Table::step(level) * sum;
        if (!std::isfinite(next))
            throw NoConvergence("integrate_de: non-finite integrand contribution");
        const double diff = std::abs(next - estimate);
        estimate = next;
        const double limit = mode == Tolerance::Absolute ? tol : tol * std::abs(estimate);
        if (diff < limit)
            return {estimate, diff, level};
    }
    throw NoConvergence("integrate_de: level " + std::to_string(Table::max_level)
                        + " reached without meeting tolerance");
}

} // namespace detail

/// Defining integral of arcsin_{p,q}: int_0^x (1 - t^q)^(-1/p) dt.
inline QuadResult arcsin_quad(const PqParams& pq, double x)
{
    detail::require_finite(x, "x");
    if (x < 0.0 || x > 1.0)
        throw DomainError("arcsin_quad requires 0 <= x <= 1");
    if (x == 0.0)
        return {0.0, 0.0, 0};
    const double p = pq.p();
    const double q = pq.q();
    const double gap = 1.0 - std::pow(x, q);
    const double xq = std::pow(x, q);
    // 1 - t^q with t = x - d, written so that it stays accurate as t -> 1.
    auto integrand = [=](double, double, double d_hi) {
        const double drop = -xq * std::expm1(q * std::log1p(-d_hi / x));
        return std::pow(gap + drop, -1.0 / p);
    };
    return integrate_de(integrand, 0.0, x, x == 1.0 ? 1e-10 : 1e-12);
}

/// Defining integral of arsinh_{p,q}: int_0^x (1 + t^q)^(-1/p) dt.
inline QuadResult arsinh_quad(const PqParams& pq, double x)
{
    detail::require_finite(x, "x");
    if (x < 0.0)
        throw DomainError("arsinh_quad requires x >= 0");
    if (x == 0.0)
        return {0.0, 0.0, 0};
    const double p = pq.p();
    const double q = pq.q();
    return integrate_de([=](double t) { return std::pow(1.0 + std::pow(t, q), -1.0 / p); }, 0.0, x,
                        1e-12);
}

} // namespace gtrig

#endif
