#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <gtrig/inversion.hpp>

namespace {

using gtrig::PqParams;

const PqParams kTable(2.5, 3.0);

struct InverseRow
{
    double y, sin, cos, sinh;
};

constexpr InverseRow kInverse[] = {
    {0.25, 0.249609374617, 0.993749984674, 0.25039062538},
    {0.5, 0.493749598485, 0.949991902031, 0.506250380454},
    {0.75, 0.718334532231, 0.830908250356, 0.781661313195},
    {1.0, 0.899479739615, 0.594286371071, 1.10033201855},
};

TEST(InvertMonotone, SolvesCubic)
{
    auto f = [](double x) { return x * x * x; };
    auto df = [](double x) { return 3.0 * x * x; };
    EXPECT_NEAR(gtrig::invert_monotone(f, df, 2.0, 0.0, 2.0), std::cbrt(2.0), 1e-12);
}

TEST(InvertMonotone, EndpointTargets)
{
    auto f = [](double x) { return std::exp(x); };
    EXPECT_EQ(gtrig::invert_monotone(f, f, 1.0, 0.0, 1.0), 0.0);
    EXPECT_EQ(gtrig::invert_monotone(f, f, std::exp(1.0), 0.0, 1.0), 1.0);
}

TEST(InvertMonotone, BracketErrors)
{
    auto f = [](double x) { return x; };
    EXPECT_THROW(gtrig::invert_monotone(f, f, 5.0, 0.0, 1.0), gtrig::BracketInvalid);
    EXPECT_THROW(gtrig::invert_monotone(f, f, 0.5, 1.0, 0.0), gtrig::BracketInvalid);
}

TEST(InvertMonotone, ConfigValidation)
{
    auto f = [](double x) { return x; };
    gtrig::RootConfig cfg;
    cfg.abs_tol = 1e-3;
    EXPECT_THROW(gtrig::invert_monotone(f, f, 0.5, 0.0, 1.0, cfg), gtrig::DomainError);
    cfg = {};
    cfg.max_iter = 2;
    EXPECT_THROW(gtrig::invert_monotone(f, f, 0.5, 0.0, 1.0, cfg), gtrig::DomainError);
}

TEST(InvertMonotone, IterationBudget)
{
    // A useless derivative forces bisection, which needs more than 8 steps.
    auto f = [](double x) { return x; };
    auto bad = [](double) { return 1e-300; };
    gtrig::RootConfig cfg;
    cfg.max_iter = 8;
    cfg.initial_guess_policy = gtrig::InitialGuess::Midpoint;
    EXPECT_THROW(gtrig::invert_monotone(f, bad, 0.123456789, 0.0, 1.0, cfg), gtrig::MaxIterExceeded);
}

TEST(InverseTable, MatchesReference)
{
    for (const auto& row : kInverse) {
        EXPECT_NEAR(gtrig::sin_pq(kTable, row.y), row.sin, 1e-11) << row.y;
        EXPECT_NEAR(gtrig::cos_pq(kTable, row.y), row.cos, 1e-11) << row.y;
    }
    for (const auto& row : kInverse)
        EXPECT_NEAR(gtrig::sinh_pq(kTable, row.y), row.sinh, 1e-11) << row.y;
}

TEST(InverseTable, SinhAtOneIs1_1003NotPrinted0_1003)
{
    const double v = gtrig::sinh_pq(kTable, 1.0);
    EXPECT_NEAR(v, 1.1003320185473264712, 1e-11);
    EXPECT_GT(v, 1.0); // arsinh_{2.5,3}(1) < 1, so sinh_{2.5,3}(1) > 1
}

TEST(SinPq, EndpointsAndDomain)
{
    const gtrig::SinPq sin(kTable);
    EXPECT_EQ(sin(0.0), 0.0);
    EXPECT_EQ(sin(sin.pi_half()), 1.0);
    EXPECT_EQ(sin.cos(0.0), 1.0);
    EXPECT_EQ(sin.cos(sin.pi_half()), 0.0);
    EXPECT_THROW(sin(-0.1), gtrig::DomainError);
    EXPECT_THROW(sin(sin.pi_half() * 1.001), gtrig::DomainError);
}

TEST(SinPq, Classical)
{
    for (double y : {0.1, 0.7, 1.2, 1.5})
        EXPECT_NEAR(gtrig::sin_pq(PqParams(2.0, 2.0), y), std::sin(y), 1e-13) << y;
    for (double y : {0.1, 0.7, 1.2, 1.5, 1.57})
        EXPECT_NEAR(gtrig::cos_pq(PqParams(2.0, 2.0), y), std::cos(y), 1e-13) << y;
}

TEST(SinPq, PythagoreanIdentity)
{
    for (double p : {1.1, 2.0, 5.0})
        for (double q : {1.5, 3.0, 10.0}) {
            const gtrig::SinPq sin(PqParams(p, q));
            for (double t : {0.1, 0.5, 0.9, 0.99}) {
                const double y = t * sin.pi_half();
                EXPECT_NEAR(std::pow(sin.cos(y), p) + std::pow(sin(y), q), 1.0, 1e-10) << p << " " << q << " " << t;
            }
        }
}

TEST(SinPq, DerivativeIdentity)
{
    const gtrig::SinPq sin(kTable);
    const double h = 1e-5;
    for (double t : {0.2, 0.5, 0.8}) {
        const double y = t * sin.pi_half();
        const double fd = (sin(y + h) - sin(y - h)) / (2.0 * h);
        EXPECT_NEAR(fd, std::pow(1.0 - std::pow(sin(y), 3.0), 1.0 / 2.5), 1e-6) << t;
        EXPECT_NEAR(fd, sin.derivative(y), 1e-6) << t;
    }
}

TEST(SinPq, CosAccurateNearQuarterPeriod)
{
    // With sin within 1e-11 of 1, cos still matches its closed form for p = q = 2.
    const gtrig::SinPq sin(PqParams(2.0, 2.0));
    const double y = std::numbers::pi / 2.0 - 1e-6;
    EXPECT_NEAR(sin.cos(y) / std::cos(y), 1.0, 1e-9);
}

TEST(SinhPq, Classical)
{
    for (double y : {0.1, 0.9, 2.0})
        EXPECT_NEAR(gtrig::sinh_pq(PqParams(2.0, 2.0), y), std::sinh(y), 1e-12 * (1.0 + std::sinh(y))) << y;
}

TEST(SinhPq, DomainCap)
{
    const gtrig::SinhPq sinh(kTable);
    EXPECT_NEAR(sinh.y_max(), gtrig::sinh_y_max(kTable), 1e-15);
    EXPECT_EQ(sinh(sinh.y_max()), 10.0);
    EXPECT_THROW(sinh(sinh.y_max() * 1.01), gtrig::DomainError);
    EXPECT_THROW(gtrig::SinhPq(kTable, {}, -1.0), gtrig::DomainError);
    EXPECT_NEAR(sinh.derivative(0.5), std::pow(1.0 + std::pow(sinh(0.5), 3.0), 0.4), 1e-15);
}

TEST(SinhPq, RoundTrip)
{
    const gtrig::SinhPq sinh(kTable);
    for (double t : {0.01, 0.3, 0.7, 0.999}) {
        const double y = t * sinh.y_max();
        EXPECT_NEAR(gtrig::arsinh_pq(kTable, sinh(y)), y, 1e-11 * (1.0 + y)) << t;
    }
}

TEST(Ordering, SinBelowSinh)
{
    const gtrig::SinPq sin(kTable);
    const gtrig::SinhPq sinh(kTable);
    for (double z : {0.1, 0.5, 1.0, 1.2})
        EXPECT_LT(sin(z), sinh(z)) << z;
}

} // namespace
