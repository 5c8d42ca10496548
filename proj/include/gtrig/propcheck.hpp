#ifndef GTRIG_PROPCHECK_HPP
#define GTRIG_PROPCHECK_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "format.hpp"
#include "inversion.hpp"
#include "params.hpp"
#include "pqtrig.hpp"
#include "special_fn.hpp"

/*
 * Registry of numerically checkable claims about the (p,q)-functions, the
 * Gauss hypergeometric function and the gamma function, plus a deterministic
 * grid sweep that reports the worst signed slack of each claim.
 *
 * Slack convention: positive means the claimed inequality holds at the point.
 * Identity-class predicates report -|residual| (optionally normalised).
 */

namespace gtrig::propcheck {

enum class PredicateClass { Theorem, Lemma, Identity, Conjecture };

inline std::string_view to_string(PredicateClass c)
{
    switch (c) {
    case PredicateClass::Theorem: return "Theorem";
    case PredicateClass::Lemma: return "Lemma";
    case PredicateClass::Identity: return "Identity";
    case PredicateClass::Conjecture: return "Conjecture";
    }
    return "?";
}

/// Parameter tuple; coordinates a predicate does not use are NaN.
struct Point
{
    static constexpr double unset = std::numeric_limits<double>::quiet_NaN();

    double p = unset, q = unset;
    double x = unset, x2 = unset; // x2 > x for monotonicity-in-x checks
    double r = unset, s = unset;
    double k = unset, k2 = unset; // k2 > k for monotonicity-in-k checks
    double a = unset, b = unset, c = unset;

    bool has(double v) const noexcept { return !std::isnan(v); }
    PqParams pq() const { return PqParams(p, q); }
};

inline std::string to_string(const Point& pt)
{
    std::string out = "(";
    bool first = true;
    auto add = [&](const char* name, double v) {
        if (std::isnan(v))
            return;
        if (!first)
            out += ';';
        out += name;
        out += '=';
        out += fmt::shortest(v);
        first = false;
    };
    add("p", pt.p);
    add("q", pt.q);
    add("x", pt.x);
    add("x2", pt.x2);
    add("r", pt.r);
    add("s", pt.s);
    add("k", pt.k);
    add("k2", pt.k2);
    add("a", pt.a);
    add("b", pt.b);
    add("c", pt.c);
    return out + ")";
}

/// Signed margin at one point and the magnitude of the larger side.
struct Slack
{
    double slack = std::numeric_limits<double>::infinity();
    double scale = 0.0;
};

/// slack = big - small for a claim `small <= big`.
inline Slack le(double small, double big)
{
    return {big - small, std::max(std::abs(small), std::abs(big))};
}

inline Slack residual(double r)
{
    return {-std::abs(r), 0.0};
}

struct GridSpec
{
    std::vector<double> p_values;
    std::vector<double> q_values;
    std::vector<double> x_values;
    std::vector<double> r_values;
    std::vector<double> s_values;
    std::vector<double> k_values;
    /// Extra x values appended for predicates sensitive to the x -> 1 end.
    std::vector<double> endpoint_x_values;
    /// Use (v, v) for v in p_values instead of the full p x q product.
    bool pq_diagonal = false;

    bool empty() const
    {
        return p_values.empty() && q_values.empty() && x_values.empty() && r_values.empty()
               && s_values.empty() && k_values.empty();
    }

    std::vector<std::pair<double, double>> pq_pairs() const
    {
        std::vector<std::pair<double, double>> out;
        if (pq_diagonal) {
            for (double v : p_values)
                out.emplace_back(v, v);
            return out;
        }
        for (double p : p_values)
            for (double q : q_values)
                out.emplace_back(p, q);
        return out;
    }

    std::vector<double> x_with_endpoint() const
    {
        std::vector<double> out = x_values;
        if (!x_values.empty())
            out.insert(out.end(), endpoint_x_values.begin(), endpoint_x_values.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

namespace detail {

inline std::vector<double> stepped(double first, double step, int count)
{
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(std::round((first + step * i) * 1e12) / 1e12);
    return out;
}

} // namespace detail

/// p, q in {1.1, 1.5, 2, 2.5, 3, 5, 10}; x, r, s in {0.05, ..., 0.95}; k in {0.25, 0.5, 2, 3, 5}.
inline GridSpec default_grid()
{
    GridSpec g;
    g.p_values = {1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0};
    g.q_values = g.p_values;
    g.x_values = detail::stepped(0.05, 0.05, 19);
    g.r_values = g.x_values;
    g.s_values = g.x_values;
    g.k_values = {0.25, 0.5, 2.0, 3.0, 5.0};
    g.endpoint_x_values = {0.99};
    return g;
}

inline GridSpec coarse_grid()
{
    GridSpec g;
    g.p_values = {1.5, 2.0, 3.0};
    g.q_values = g.p_values;
    g.x_values = {0.1, 0.3, 0.5, 0.7, 0.9};
    g.r_values = g.x_values;
    g.s_values = g.x_values;
    g.k_values = {0.5, 2.0, 3.0};
    g.endpoint_x_values = {0.99};
    return g;
}

inline GridSpec fine_grid()
{
    GridSpec g;
    g.p_values = {1.1, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 7.5, 10.0};
    g.q_values = g.p_values;
    g.x_values = detail::stepped(0.025, 0.025, 39);
    g.r_values = detail::stepped(0.05, 0.05, 19);
    g.s_values = g.r_values;
    g.k_values = {0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 5.0};
    g.endpoint_x_values = {0.99};
    return g;
}

inline GridSpec grid_preset(std::string_view name)
{
    if (name == "default")
        return default_grid();
    if (name == "coarse")
        return coarse_grid();
    if (name == "fine")
        return fine_grid();
    throw DomainError("unknown grid preset '" + std::string(name) + "'");
}

struct PredicateSpec
{
    std::string id;
    PredicateClass cls;
    std::string arity;  ///< parameter signature, e.g. "p,q,x"
    std::string domain; ///< parameter region, human readable
    std::vector<std::string> items;
    /// Identity class: largest admissible |residual| as returned by evaluate.
    double identity_tol = 1e-9;
};

enum class Status { Pass, Fail, Vacuous, NoCounterexampleFound, CounterexampleFound };

inline std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Vacuous: return "VACUOUS";
    case Status::NoCounterexampleFound: return "NO_COUNTEREXAMPLE";
    case Status::CounterexampleFound: return "FINDING";
    }
    return "?";
}

struct PredicateReport
{
    std::string id;
    PredicateClass cls = PredicateClass::Theorem;
    std::size_t grid_points = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_scale = 0.0;
    Point worst_location;
    std::string worst_item;
    /// false only for a Theorem/Lemma/Identity with a violation beyond tolerance.
    bool passed = true;
    Status status = Status::Vacuous;
};

namespace detail {

struct Item
{
    std::string name;
    std::function<bool(const Point&)> applies;
    std::function<Slack(const Point&)> eval;
};

struct Family
{
    PredicateSpec spec;
    std::function<std::vector<Point>(const GridSpec&)> points;
    std::function<bool(const Point&)> in_domain;
    std::vector<Item> items;
};

inline bool open_unit(double v)
{
    return v > 0.0 && v < 1.0;
}

inline bool valid_pq(const Point& pt)
{
    return pt.p > 1.0 && pt.q > 1.0;
}

inline auto always = [](const Point&) { return true; };

/// Consecutive pairs (v[i], v[i+1]) of the sorted values accepted by keep.
template <class Keep>
std::vector<std::pair<double, double>> consecutive(std::vector<double> v, Keep keep)
{
    std::sort(v.begin(), v.end());
    v.erase(std::remove_if(v.begin(), v.end(), [&](double t) { return !keep(t); }), v.end());
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            out.emplace_back(v[i], v[i + 1]);
    return out;
}

/// (p, q, x) over the grid, x restricted to (0, 1).
inline std::vector<Point> pqx_points(const GridSpec& g, const std::vector<double>& xs)
{
    std::vector<Point> out;
    for (auto [p, q] : g.pq_pairs())
        for (double x : xs)
            if (open_unit(x)) {
                Point pt;
                pt.p = p;
                pt.q = q;
                pt.x = x;
                out.push_back(pt);
            }
    return out;
}

inline std::vector<Point> pqrs_points(const GridSpec& g, bool r_ge_s)
{
    std::vector<Point> out;
    for (auto [p, q] : g.pq_pairs())
        for (double r : g.r_values)
            for (double s : g.s_values)
                if (open_unit(r) && open_unit(s) && (!r_ge_s || r >= s)) {
                    Point pt;
                    pt.p = p;
                    pt.q = q;
                    pt.r = r;
                    pt.s = s;
                    out.push_back(pt);
                }
    return out;
}

inline std::vector<Point> p_points(const GridSpec& g)
{
    std::vector<Point> out;
    std::vector<double> ps = g.p_values;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (double p : ps)
        if (p > 1.0) {
            Point pt;
            pt.p = p;
            out.push_back(pt);
        }
    return out;
}

inline std::vector<Point> pq_points(const GridSpec& g)
{
    std::vector<Point> out;
    for (auto [p, q] : g.pq_pairs()) {
        Point pt;
        pt.p = p;
        pt.q = q;
        out.push_back(pt);
    }
    return out;
}

/// Hypergeometric triples (a, b, c) drawn from the r, s and k grids.
inline std::vector<Point> abc_points(const GridSpec& g, const std::vector<double>& xs)
{
    std::vector<Point> out;
    for (double a : g.r_values)
        for (double b : g.s_values)
            for (double c : g.k_values)
                for (double x : xs) {
                    Point pt;
                    pt.a = a;
                    pt.b = b;
                    pt.c = c;
                    pt.x = x;
                    out.push_back(pt);
                }
    return out;
}

inline double f21(double a, double b, double c, double x)
{
    return gauss_2f1(HypTriple(a, b, c), x).value;
}

inline double series21(double a, double b, double c, double x)
{
    return hyp_series(HypTriple(a, b, c), x).value;
}

/// Per-(p,q) cache of the inverse functions used by several families.
class InverseCache
{
public:
    const SinPq& sin(const Point& pt) { return get(pt).first; }
    const SinhPq& sinh(const Point& pt) { return get(pt).second; }

private:
    std::pair<SinPq, SinhPq>& get(const Point& pt)
    {
        const auto key = std::make_pair(pt.p, pt.q);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, std::make_pair(SinPq(pt.pq()), SinhPq(pt.pq()))).first;
        return it->second;
    }

    std::map<std::pair<double, double>, std::pair<SinPq, SinhPq>> cache_;
};

inline InverseCache& inverse_cache()
{
    thread_local InverseCache cache;
    return cache;
}

inline double asn(const Point& pt, double x) { return arcsin_pq(pt.pq(), x); }
inline double ash(const Point& pt, double x) { return arsinh_pq(pt.pq(), x); }
inline double sn(const Point& pt, double y) { return inverse_cache().sin(pt)(y); }
inline double snh(const Point& pt, double y) { return inverse_cache().sinh(pt)(y); }
inline double pi_half(const Point& pt) { return inverse_cache().sin(pt).pi_half(); }
inline double sinh_top(const Point& pt) { return inverse_cache().sinh(pt).y_max(); }

inline std::vector<Family> build_registry()
{
    std::vector<Family> reg;

    // P1: polynomial lower bound and chord / Carlson upper bound for arcsin.
    reg.push_back(Family{
        {"thm1.1-arcsin", PredicateClass::Theorem, "p,q,x", "p,q > 1; x in (0,1)", {"lower", "upper"}},
        [](const GridSpec& g) { return pqx_points(g, g.x_with_endpoint()); },
        [](const Point& pt) { return valid_pq(pt) && open_unit(pt.x); },
        {{"lower", always,
          [](const Point& pt) { return le(arcsin_envelope(pt.pq(), pt.x).lower, asn(pt, pt.x)); }},
         {"upper", always,
          [](const Point& pt) { return le(asn(pt, pt.x), arcsin_envelope(pt.pq(), pt.x).upper); }}}});

    // P2: Carlson-type envelope of arsinh.
    reg.push_back(Family{
        {"thm1.1-arsinh", PredicateClass::Theorem, "p,q,x", "p,q > 1; x in (0,1)", {"lower", "upper"}},
        [](const GridSpec& g) { return pqx_points(g, g.x_with_endpoint()); },
        [](const Point& pt) { return valid_pq(pt) && open_unit(pt.x); },
        {{"lower", always,
          [](const Point& pt) { return le(arsinh_envelope(pt.pq(), pt.x).lower, ash(pt, pt.x)); }},
         {"upper", always,
          [](const Point& pt) { return le(ash(pt, pt.x), arsinh_envelope(pt.pq(), pt.x).upper); }}}});

    // P3: pi_{p,q} between alpha(1/100, q) and alpha(1/30, q) expressions.
    reg.push_back(Family{
        {"thm1.2-pi", PredicateClass::Theorem, "p,q", "p,q > 1", {"lower", "upper"}},
        pq_points,
        valid_pq,
        {{"lower", always, [](const Point& pt) { return le(pi_pq_envelope(pt.pq()).lower, pi_pq(pt.pq())); }},
         {"upper", always, [](const Point& pt) { return le(pi_pq(pt.pq()), pi_pq_envelope(pt.pq()).upper); }}}});

    // P4: pi_{p',p}.
    auto dual = [](const Point& pt) { return pi_pq(PqParams(pt.p / (pt.p - 1.0), pt.p)); };
    reg.push_back(Family{
        {"thm1.2-dual", PredicateClass::Theorem, "p", "p > 1", {"lower", "upper"}},
        p_points,
        [](const Point& pt) { return pt.p > 1.0; },
        {{"lower", always, [=](const Point& pt) { return le(pi_dual_envelope(pt.p).lower, dual(pt)); }},
         {"upper", always, [=](const Point& pt) { return le(dual(pt), pi_dual_envelope(pt.p).upper); }}}});

    // P5: pi_{p,p'}, area of the unit p-circle.
    auto conj = [](const Point& pt) { return pi_pq(PqParams(pt.p, pt.p / (pt.p - 1.0))); };
    reg.push_back(Family{
        {"thm1.2-conj", PredicateClass::Theorem, "p", "p > 1", {"lower", "upper"}},
        p_points,
        [](const Point& pt) { return pt.p > 1.0; },
        {{"lower", always, [=](const Point& pt) { return le(pi_conj_envelope(pt.p).lower, conj(pt)); }},
         {"upper", always, [=](const Point& pt) { return le(conj(pt), pi_conj_envelope(pt.p).upper); }}}});

    // P6: (arcsin(x^k))^(1/k) decreasing, (arsinh(x^k))^(1/k) increasing in k > 0.
    auto k_pairs = [](const GridSpec& g, auto keep) {
        std::vector<Point> out;
        const auto pairs = consecutive(g.k_values, keep);
        for (const Point& base : pqx_points(g, g.x_values))
            for (auto [k, k2] : pairs) {
                Point pt = base;
                pt.k = k;
                pt.k2 = k2;
                out.push_back(pt);
            }
        return out;
    };
    auto root_pow = [](double v, double k) { return std::pow(v, 1.0 / k); };
    reg.push_back(Family{
        {"lem2.1-k-mono", PredicateClass::Lemma, "p,q,x,k<k2", "p,q > 1; x in (0,1); 0 < k < k2",
         {"arcsin-decreasing", "arsinh-increasing"}},
        [=](const GridSpec& g) { return k_pairs(g, [](double k) { return k > 0.0; }); },
        [](const Point& pt) { return valid_pq(pt) && open_unit(pt.x) && pt.k > 0.0 && pt.k2 > pt.k; },
        {{"arcsin-decreasing", always,
          [=](const Point& pt) {
              return le(root_pow(asn(pt, std::pow(pt.x, pt.k2)), pt.k2), root_pow(asn(pt, std::pow(pt.x, pt.k)), pt.k));
          }},
         {"arsinh-increasing", always, [=](const Point& pt) {
              return le(root_pow(ash(pt, std::pow(pt.x, pt.k)), pt.k), root_pow(ash(pt, std::pow(pt.x, pt.k2)), pt.k2));
          }}}});

    // P7: k arcsin(x/k) decreasing on k > 1.
    reg.push_back(Family{
        {"lem2.1-k-scale", PredicateClass::Lemma, "p,q,x,k<k2", "p,q > 1; x in (0,1); 1 < k < k2",
         {"decreasing"}},
        [=](const GridSpec& g) { return k_pairs(g, [](double k) { return k > 1.0; }); },
        [](const Point& pt) { return valid_pq(pt) && open_unit(pt.x) && pt.k > 1.0 && pt.k2 > pt.k; },
        {{"decreasing", always, [](const Point& pt) {
              return le(pt.k2 * asn(pt, pt.x / pt.k2), pt.k * asn(pt, pt.x / pt.k));
          }}}});

    // P8: the three chains for k >= 1.
    auto pqxk = [](const GridSpec& g, auto keep) {
        std::vector<Point> out;
        for (const Point& base : pqx_points(g, g.x_values))
            for (double k : g.k_values)
                if (keep(k)) {
                    Point pt = base;
                    pt.k = k;
                    out.push_back(pt);
                }
        return out;
    };
    reg.push_back(Family{
        {"lem2.1-chains", PredicateClass::Lemma, "p,q,x,k", "p,q > 1; x in (0,1); k >= 1",
         {"arcsin-left", "arcsin-right", "arsinh-left", "arsinh-right", "arcsin-scale"}},
        [=](const GridSpec& g) { return pqxk(g, [](double k) { return k >= 1.0; }); },
        [](const Point& pt) { return valid_pq(pt) && open_unit(pt.x) && pt.k >= 1.0; },
        {{"arcsin-left", always,
          [=](const Point& pt) { return le(root_pow(asn(pt, std::pow(pt.x, pt.k)), pt.k), asn(pt, pt.x)); }},
         {"arcsin-right", always,
          [](const Point& pt) { return le(asn(pt, pt.x), std::pow(asn(pt, std::pow(pt.x, 1.0 / pt.k)), pt.k)); }},
         {"arsinh-left", always,
          [](const Point& pt) { return le(std::pow(ash(pt, std::pow(pt.x, 1.0 / pt.k)), pt.k), ash(pt, pt.x)); }},
         {"arsinh-right", always,
          [=](const Point& pt) { return le(ash(pt, pt.x), root_pow(ash(pt, std::pow(pt.x, pt.k)), pt.k)); }},
         {"arcsin-scale", always, [](const Point& pt) { return le(asn(pt, pt.x / pt.k), asn(pt, pt.x) / pt.k); }}}});

    // P9: multiplicative (geometric-mean) chains.
    auto pqrs_domain = [](const Point& pt) { return valid_pq(pt) && open_unit(pt.r) && open_unit(pt.s); };
    reg.push_back(Family{
        {"thm2.2-multiplicative", PredicateClass::Theorem, "p,q,r,s", "p,q > 1; r,s in (0,1)",
         {"arcsin-left", "arcsin-right", "arsinh-left", "arsinh-right"}},
        [](const GridSpec& g) { return pqrs_points(g, false); },
        pqrs_domain,
        {{"arcsin-left", always,
          [](const Point& pt) {
              return le(asn(pt, pt.r * pt.s), std::sqrt(asn(pt, pt.r * pt.r) * asn(pt, pt.s * pt.s)));
          }},
         {"arcsin-right", always,
          [](const Point& pt) {
              return le(std::sqrt(asn(pt, pt.r * pt.r) * asn(pt, pt.s * pt.s)), asn(pt, pt.r) * asn(pt, pt.s));
          }},
         {"arsinh-left", always,
          [](const Point& pt) {
              return le(ash(pt, pt.r) * ash(pt, pt.s), std::sqrt(ash(pt, pt.r * pt.r) * ash(pt, pt.s * pt.s)));
          }},
         {"arsinh-right", always, [](const Point& pt) {
              return le(std::sqrt(ash(pt, pt.r * pt.r) * ash(pt, pt.s * pt.s)), ash(pt, pt.r * pt.s));
          }}}});

    // P10: g1 = arcsin(x^k)/arcsin(x)^k and g2 = arsinh(x^k)/arsinh(x)^k are
    // monotone in x, with the displayed consequences at x and x2.
    auto g1 = [](const Point& pt, double x) { return asn(pt, std::pow(x, pt.k)) / std::pow(asn(pt, x), pt.k); };
    auto g2 = [](const Point& pt, double x) { return ash(pt, std::pow(x, pt.k)) / std::pow(ash(pt, x), pt.k); };
    auto disp_arcsin = [](const Point& pt, double x) {
        const double lhs = std::pow(pi_half(pt), 1.0 - 1.0 / pt.k) * std::pow(asn(pt, std::pow(x, pt.k)), 1.0 / pt.k);
        return pt.k < 1.0 ? le(lhs, asn(pt, x)) : le(asn(pt, x), lhs);
    };
    auto disp_arsinh = [](const Point& pt, double x) {
        const double lhs = std::pow(m_pq(pt.pq()), 1.0 - 1.0 / pt.k) * std::pow(ash(pt, std::pow(x, pt.k)), 1.0 / pt.k);
        return pt.k < 1.0 ? le(ash(pt, x), lhs) : le(lhs, ash(pt, x));
    };
    auto worse = [](Slack u, Slack v) { return u.slack / (1.0 + u.scale) <= v.slack / (1.0 + v.scale) ? u : v; };
    reg.push_back(Family{
        {"lem-g1g2", PredicateClass::Lemma, "p,q,k,x<x2", "p,q > 1; 0 < x < x2 < 1; k > 0, k != 1",
         {"g1-monotone", "g2-monotone", "arcsin-displayed", "arsinh-displayed"}},
        [](const GridSpec& g) {
            std::vector<Point> out;
            const auto xs = consecutive(g.x_values, open_unit);
            for (const Point& base : pq_points(g))
                for (double k : g.k_values)
                    if (k > 0.0 && k != 1.0)
                        for (auto [x, x2] : xs) {
                            Point pt = base;
                            pt.k = k;
                            pt.x = x;
                            pt.x2 = x2;
                            out.push_back(pt);
                        }
            return out;
        },
        [](const Point& pt) {
            return valid_pq(pt) && pt.k > 0.0 && pt.k != 1.0 && open_unit(pt.x) && open_unit(pt.x2) && pt.x < pt.x2;
        },
        {{"g1-monotone", always,
          [=](const Point& pt) {
              return pt.k < 1.0 ? le(g1(pt, pt.x), g1(pt, pt.x2)) : le(g1(pt, pt.x2), g1(pt, pt.x));
          }},
         {"g2-monotone", always,
          [=](const Point& pt) {
              return pt.k > 1.0 ? le(g2(pt, pt.x), g2(pt, pt.x2)) : le(g2(pt, pt.x2), g2(pt, pt.x));
          }},
         {"arcsin-displayed", always,
          [=](const Point& pt) { return worse(disp_arcsin(pt, pt.x), disp_arcsin(pt, pt.x2)); }},
         {"arsinh-displayed", always,
          [=](const Point& pt) { return worse(disp_arsinh(pt, pt.x), disp_arsinh(pt, pt.x2)); }}}});

    // P11: power ratios, k > 1, r >= s.
    auto pqrsk = [](const GridSpec& g, auto keep) {
        std::vector<Point> out;
        for (const Point& base : pqrs_points(g, true))
            for (double k : g.k_values)
                if (keep(k)) {
                    Point pt = base;
                    pt.k = k;
                    out.push_back(pt);
                }
        return out;
    };
    reg.push_back(Family{
        {"lem-ratio-power", PredicateClass::Lemma, "p,q,k,r>=s", "p,q,k > 1; r,s in (0,1); r >= s",
         {"arcsin", "arsinh"}},
        [=](const GridSpec& g) { return pqrsk(g, [](double k) { return k > 1.0; }); },
        [=](const Point& pt) { return pqrs_domain(pt) && pt.k > 1.0 && pt.r >= pt.s; },
        {{"arcsin", always,
          [](const Point& pt) {
              return le(std::pow(asn(pt, pt.s) / asn(pt, pt.r), pt.k),
                        asn(pt, std::pow(pt.s, pt.k)) / asn(pt, std::pow(pt.r, pt.k)));
          }},
         {"arsinh", always, [](const Point& pt) {
              return le(ash(pt, std::pow(pt.s, pt.k)) / ash(pt, std::pow(pt.r, pt.k)),
                        std::pow(ash(pt, pt.s) / ash(pt, pt.r), pt.k));
          }}}});

    // P12: ratio inequalities for sin and sinh, reversed for k in (0,1).
    reg.push_back(Family{
        {"lem-sin-ratio", PredicateClass::Lemma, "p,q,k,r>=s",
         "p,q > 1; k > 0, k != 1; r,s in (0,1); r >= s", {"sin", "sinh"}},
        [=](const GridSpec& g) { return pqrsk(g, [](double k) { return k > 0.0 && k != 1.0; }); },
        [=](const Point& pt) { return pqrs_domain(pt) && pt.k > 0.0 && pt.k != 1.0 && pt.r >= pt.s; },
        {{"sin", always,
          [](const Point& pt) {
              const double lhs = std::pow(sn(pt, pt.r) / sn(pt, pt.s), pt.k);
              const double rhs = sn(pt, std::pow(pt.r, pt.k)) / sn(pt, std::pow(pt.s, pt.k));
              return pt.k > 1.0 ? le(lhs, rhs) : le(rhs, lhs);
          }},
         {"sinh", [](const Point& pt) { return std::max(pt.r, std::pow(pt.r, pt.k)) <= sinh_top(pt); },
          [](const Point& pt) {
              const double lhs = std::pow(snh(pt, pt.r) / snh(pt, pt.s), pt.k);
              const double rhs = snh(pt, std::pow(pt.r, pt.k)) / snh(pt, std::pow(pt.s, pt.k));
              return pt.k > 1.0 ? le(rhs, lhs) : le(lhs, rhs);
          }}}});

    // P13: two-point midpoint (Jensen) inequalities. arcsin and sinh are
    // convex, sin and arsinh concave on the ranges used here.
    auto mid = [](const Point& pt) { return 0.5 * (pt.r + pt.s); };
    reg.push_back(Family{
        {"lem-midpoint", PredicateClass::Lemma, "p,q,r,s", "p,q > 1; r,s in (0,1)",
         {"arcsin", "sin", "arsinh", "sinh"}},
        [](const GridSpec& g) { return pqrs_points(g, false); },
        pqrs_domain,
        {{"arcsin", always,
          [=](const Point& pt) { return le(2.0 * asn(pt, mid(pt)), asn(pt, pt.r) + asn(pt, pt.s)); }},
         {"sin", always, [=](const Point& pt) { return le(sn(pt, pt.r) + sn(pt, pt.s), 2.0 * sn(pt, mid(pt))); }},
         {"arsinh", always,
          [=](const Point& pt) { return le(ash(pt, pt.r) + ash(pt, pt.s), 2.0 * ash(pt, mid(pt))); }},
         {"sinh", [](const Point& pt) { return std::max(pt.r, pt.s) <= sinh_top(pt); },
          [=](const Point& pt) { return le(2.0 * snh(pt, mid(pt)), snh(pt, pt.r) + snh(pt, pt.s)); }}}});

    // P14: geometric-mean inequalities for sin and sinh (open claim).
    reg.push_back(Family{
        {"conj-sin-gg", PredicateClass::Conjecture, "p,q,r,s", "p,q > 1; r,s in (0,1)", {"sin", "sinh"}},
        [](const GridSpec& g) { return pqrs_points(g, false); },
        pqrs_domain,
        {{"sin", always,
          [](const Point& pt) { return le(sn(pt, std::sqrt(pt.r * pt.s)), std::sqrt(sn(pt, pt.r) * sn(pt, pt.s))); }},
         {"sinh", [](const Point& pt) { return std::max(pt.r, pt.s) <= sinh_top(pt); },
          [](const Point& pt) {
              return le(std::sqrt(snh(pt, pt.r) * snh(pt, pt.s)), snh(pt, std::sqrt(pt.r * pt.s)));
          }}}});

    // P15: sin subadditive on (0, pi_{p,q}/4), sinh superadditive.
    reg.push_back(Family{
        {"lem-subadditive", PredicateClass::Lemma, "p,q,r,s",
         "p,q > 1; sin: r,s in (0, pi_{p,q}/4); sinh: r,s > 0, r+s <= arsinh_{p,q}(10)", {"sin", "sinh"}},
        [](const GridSpec& g) {
            std::vector<Point> out;
            for (const Point& pt : pqrs_points(g, false)) {
                const bool sin_ok = pt.r < 0.5 * pi_half(pt) && pt.s < 0.5 * pi_half(pt);
                const bool sinh_ok = pt.r + pt.s <= sinh_top(pt);
                if (sin_ok || sinh_ok)
                    out.push_back(pt);
            }
            return out;
        },
        [](const Point& pt) {
            if (!valid_pq(pt) || !(pt.r > 0.0) || !(pt.s > 0.0))
                return false;
            return (pt.r < 0.5 * pi_half(pt) && pt.s < 0.5 * pi_half(pt)) || pt.r + pt.s <= sinh_top(pt);
        },
        {{"sin", [](const Point& pt) { return pt.r < 0.5 * pi_half(pt) && pt.s < 0.5 * pi_half(pt); },
          [](const Point& pt) { return le(sn(pt, pt.r + pt.s), sn(pt, pt.r) + sn(pt, pt.s)); }},
         {"sinh", [](const Point& pt) { return pt.r + pt.s <= sinh_top(pt); },
          [](const Point& pt) { return le(snh(pt, pt.r) + snh(pt, pt.s), snh(pt, pt.r + pt.s)); }}}});

    // P16: arsinh < arcsin on (0,1); sin < sinh on (0, min(pi_{p,q}/2, y_max)).
    reg.push_back(Family{
        {"ordering", PredicateClass::Lemma, "p,q,x", "p,q > 1; x in (0,1)", {"arsinh-arcsin", "sin-sinh"}},
        [](const GridSpec& g) { return pqx_points(g, g.x_with_endpoint()); },
        [](const Point& pt) { return valid_pq(pt) && open_unit(pt.x); },
        {{"arsinh-arcsin", always, [](const Point& pt) { return le(ash(pt, pt.x), asn(pt, pt.x)); }},
         {"sin-sinh", [](const Point& pt) { return pt.x < std::min(pi_half(pt), sinh_top(pt)); },
          [](const Point& pt) { return le(sn(pt, pt.x), snh(pt, pt.x)); }}}});

    // P17: ratio monotonicity for 0 < s <= r < 1.
    auto pfaff_norm = [](const Point& pt, double x) {
        return std::pow(std::pow(x, pt.p) / (1.0 + std::pow(x, pt.q)), 1.0 / pt.p);
    };
    reg.push_back(Family{
        {"lem-ratio-mono", PredicateClass::Lemma, "p,q,r>=s", "p,q > 1; 0 < s <= r < 1",
         {"arcsin", "arsinh-normalised", "arsinh"}},
        [](const GridSpec& g) {
            std::vector<Point> out;
            std::vector<double> rs = g.r_values;
            if (!rs.empty())
                rs.insert(rs.end(), g.endpoint_x_values.begin(), g.endpoint_x_values.end());
            for (auto [p, q] : g.pq_pairs())
                for (double r : rs)
                    for (double s : g.s_values)
                        if (open_unit(r) && open_unit(s) && s <= r) {
                            Point pt;
                            pt.p = p;
                            pt.q = q;
                            pt.r = r;
                            pt.s = s;
                            out.push_back(pt);
                        }
            return out;
        },
        [=](const Point& pt) { return pqrs_domain(pt) && pt.s <= pt.r; },
        {{"arcsin", always, [](const Point& pt) { return le(asn(pt, pt.s) / pt.s, asn(pt, pt.r) / pt.r); }},
         {"arsinh-normalised", always,
          [=](const Point& pt) {
              return le(ash(pt, pt.s) / pfaff_norm(pt, pt.s), ash(pt, pt.r) / pfaff_norm(pt, pt.r));
          }},
         {"arsinh", always, [](const Point& pt) { return le(ash(pt, pt.r) / pt.r, ash(pt, pt.s) / pt.s); }}}});

    // P18: hypergeometric identities and inequalities; (a,b,c) from (r,s,k).
    auto lemma5_g = [](double a, double b, double x) {
        return (f21(a, b, a + b, x) - 1.0) / std::log(1.0 / (1.0 - x));
    };
    auto single = [](const Point& pt) { return !pt.has(pt.x2); };
    reg.push_back(Family{
        {"lem3.1", PredicateClass::Lemma, "a,b,c,x | a,b,x<x2",
         "(1) a,b,c > 0, |x| < 1; (2),(3) a,x in (0,1), b,c > 0; (4) c > a+b, x in [0,1]; "
         "(5) c = a+b, 0 < x < x2 < 1",
         {"euler-identity", "minus-a-bound", "sum-exceeds-two", "gauss-bound", "log-ratio-increasing"},
         1e-9},
        [=](const GridSpec& g) {
            std::vector<Point> out = abc_points(g, g.x_with_endpoint());
            const auto xs = consecutive(g.x_values, open_unit);
            for (double a : g.r_values)
                for (double b : g.s_values)
                    for (auto [x, x2] : xs) {
                        Point pt;
                        pt.a = a;
                        pt.b = b;
                        pt.c = a + b;
                        pt.x = x;
                        pt.x2 = x2;
                        out.push_back(pt);
                    }
            return out;
        },
        [](const Point& pt) {
            if (!(pt.a > 0.0 && pt.b > 0.0 && pt.c > 0.0))
                return false;
            if (pt.has(pt.x2))
                return pt.c == pt.a + pt.b && open_unit(pt.x) && open_unit(pt.x2) && pt.x < pt.x2;
            return std::abs(pt.x) < 1.0;
        },
        {{"euler-identity", single,
          [](const Point& pt) {
              // Shifted so that slack >= 0 iff |residual| <= 1e-9.
              const double res = series21(pt.a, pt.b, pt.c, pt.x)
                                 - std::pow(1.0 - pt.x, pt.c - pt.a - pt.b)
                                       * series21(pt.c - pt.a, pt.c - pt.b, pt.c, pt.x);
              return Slack{1e-9 - std::abs(res), 0.0};
          }},
         {"minus-a-bound", [=](const Point& pt) { return single(pt) && open_unit(pt.a) && open_unit(pt.x); },
          [](const Point& pt) {
              return le(f21(-pt.a, pt.b, pt.c, pt.x), 1.0 - pt.a * pt.b / pt.c * pt.x);
          }},
         {"sum-exceeds-two", [=](const Point& pt) { return single(pt) && open_unit(pt.a) && open_unit(pt.x); },
          [](const Point& pt) {
              return le(2.0, f21(pt.a, pt.b, pt.c, pt.x) + f21(-pt.a, pt.b, pt.c, pt.x));
          }},
         {"gauss-bound", [=](const Point& pt) { return single(pt) && pt.c > pt.a + pt.b && pt.x >= 0.0; },
          [](const Point& pt) {
              return le(f21(pt.a, pt.b, pt.c, pt.x), gauss_summation(HypTriple(pt.a, pt.b, pt.c)).value);
          }},
         {"log-ratio-increasing", [](const Point& pt) { return pt.has(pt.x2); },
          [=](const Point& pt) { return le(lemma5_g(pt.a, pt.b, pt.x), lemma5_g(pt.a, pt.b, pt.x2)); }}}});

    // P19: Pfaff transformation, both sides by direct series.
    reg.push_back(Family{
        {"pfaff-identity", PredicateClass::Identity, "a,b,c,x", "a,b,c > 0; x in (0, 0.9]", {"residual"}, 1e-9},
        [](const GridSpec& g) {
            std::vector<double> xs;
            for (double x : g.x_values)
                if (x > 0.0 && x <= 0.9)
                    xs.push_back(x);
            return abc_points(g, xs);
        },
        [](const Point& pt) { return pt.a > 0.0 && pt.b > 0.0 && pt.c > 0.0 && pt.x > 0.0 && pt.x <= 0.9; },
        {{"residual", always, [](const Point& pt) {
              const double lhs = series21(pt.a, pt.b, pt.c, -pt.x);
              const double rhs = std::pow(1.0 + pt.x, -pt.b) * series21(pt.b, pt.c - pt.a, pt.c, pt.x / (1.0 + pt.x));
              return residual(lhs - rhs);
          }}}});

    // P20: Carlson's bounds on both sides of x = 0.
    reg.push_back(Family{
        {"carlson", PredicateClass::Lemma, "a,b,c,x", "0 < a < c; 0 < b < c; x < 1", {"lower", "upper"}},
        [](const GridSpec& g) {
            std::vector<double> xs;
            for (double x : g.x_values) {
                xs.push_back(-x);
                xs.push_back(x);
            }
            std::vector<Point> out;
            for (const Point& pt : abc_points(g, xs))
                if (pt.a < pt.c && pt.b < pt.c)
                    out.push_back(pt);
            return out;
        },
        [](const Point& pt) { return pt.a > 0.0 && pt.a < pt.c && pt.b > 0.0 && pt.b < pt.c && pt.x < 1.0; },
        {{"lower", always,
          [](const Point& pt) { return le(carlson_envelope(pt.a, pt.b, pt.c, pt.x).lower, f21(pt.a, pt.b, pt.c, pt.x)); }},
         {"upper", always, [](const Point& pt) {
              return le(f21(pt.a, pt.b, pt.c, pt.x), carlson_envelope(pt.a, pt.b, pt.c, pt.x).upper);
          }}}});

    // P21: gamma-function estimates; x from the x and k grids, s from the s grid.
    auto gamma_item = [](GammaBoundVariant v, bool lower_side) {
        return [=](const Point& pt) {
            const double args2[2] = {pt.x, v == GammaBoundVariant::StirlingRatio ? pt.x + pt.s : pt.s};
            const std::span<const double> args(args2, v == GammaBoundVariant::AlzerSixthRoot ? 1 : 2);
            const Envelope e = gamma_bound(v, args);
            const double t = gamma_bound_target(v, args);
            return lower_side ? le(e.lower, t) : le(t, e.upper);
        };
    };
    reg.push_back(Family{
        {"gamma-bounds", PredicateClass::Lemma, "x,s", "x > 0; s in (0,1)",
         {"alzer-lower", "alzer-upper", "kershaw-lower", "kershaw-upper", "stirling-upper", "wendel-lower",
          "wendel-upper"}},
        [](const GridSpec& g) {
            std::vector<double> xs = g.x_values;
            xs.insert(xs.end(), g.k_values.begin(), g.k_values.end());
            std::vector<Point> out;
            for (double x : xs)
                for (double s : g.s_values)
                    if (x > 0.0 && open_unit(s)) {
                        Point pt;
                        pt.x = x;
                        pt.s = s;
                        out.push_back(pt);
                    }
            return out;
        },
        [](const Point& pt) { return pt.x > 0.0 && open_unit(pt.s); },
        {{"alzer-lower", always, gamma_item(GammaBoundVariant::AlzerSixthRoot, true)},
         {"alzer-upper", always, gamma_item(GammaBoundVariant::AlzerSixthRoot, false)},
         {"kershaw-lower", always, gamma_item(GammaBoundVariant::KershawRatio, true)},
         {"kershaw-upper", always, gamma_item(GammaBoundVariant::KershawRatio, false)},
         {"stirling-upper", always, gamma_item(GammaBoundVariant::StirlingRatio, false)},
         {"wendel-lower", always, gamma_item(GammaBoundVariant::WendelRatio, true)},
         {"wendel-upper", always, gamma_item(GammaBoundVariant::WendelRatio, false)}}});

    // P22: duplication formula for (p, q) = (4/3, 4).
    reg.push_back(Family{
        {"egl-identity", PredicateClass::Identity, "x", "x in (0, pi_{4/3,4}/4)", {"residual"}, 1e-9},
        [](const GridSpec& g) {
            std::vector<Point> out;
            if (g.x_values.empty())
                return out;
            const double quarter = 0.25 * pi_pq(PqParams(4.0 / 3.0, 4.0));
            constexpr int n = 50;
            for (int i = 1; i <= n; ++i) {
                Point pt;
                pt.x = quarter * i / (n + 1);
                out.push_back(pt);
            }
            return out;
        },
        [](const Point& pt) { return pt.x > 0.0 && pt.x < 0.25 * pi_pq(PqParams(4.0 / 3.0, 4.0)); },
        {{"residual", always, [](const Point& pt) {
              Point key;
              key.p = 4.0 / 3.0;
              key.q = 4.0;
              const SinPq& sin = inverse_cache().sin(key);
              const double u = sin(pt.x);
              const double v = sin.cos(pt.x);
              const double rhs = 2.0 * u * std::cbrt(v) / std::sqrt(1.0 + 4.0 * std::pow(u, 4) * std::pow(v, 4.0 / 3.0));
              return residual(sin(2.0 * pt.x) - rhs);
          }}}});

    // P23: sin_{p,q} solves (phi_p(u'))' + lambda* phi_q(u) = 0, lambda* = q(p-1)/p.
    reg.push_back(Family{
        {"ode-residual", PredicateClass::Identity, "p,q,x", "p,q > 1; y = x pi_{p,q}/2 with x in [0.1, 0.9]",
         {"residual"}, 1e-5},
        [](const GridSpec& g) {
            std::vector<double> xs;
            for (double x : g.x_values)
                if (x >= 0.1 - 1e-12 && x <= 0.9 + 1e-12)
                    xs.push_back(x);
            return pqx_points(g, xs);
        },
        [](const Point& pt) { return valid_pq(pt) && pt.x >= 0.1 - 1e-12 && pt.x <= 0.9 + 1e-12; },
        {{"residual", always, [](const Point& pt) {
              constexpr double h = 1e-5;
              const SinPq& sin = inverse_cache().sin(pt);
              const double y = pt.x * sin.pi_half();
              const double u = sin(y);
              // phi_p(u') with u' = (1 - u^q)^(1/p) >= 0
              auto phi_du = [&](double t) { return std::pow(sin.derivative(t), pt.p - 1.0); };
              const double lambda = pt.q * (pt.p - 1.0) / pt.p;
              const double res = (phi_du(y + h) - phi_du(y - h)) / (2.0 * h) + lambda * std::pow(u, pt.q - 1.0);
              return residual(res / (1.0 + std::pow(u, pt.q - 1.0)));
          }}}});

    return reg;
}

inline const std::vector<Family>& registry()
{
    static const std::vector<Family> reg = build_registry();
    return reg;
}

inline const Family& find_family(std::string_view id)
{
    for (const Family& f : registry())
        if (f.spec.id == id)
            return f;
    throw UnknownPredicate("unknown predicate '" + std::string(id) + "'");
}

/// Worst item at a point: smallest slack relative to (1 + scale).
inline std::pair<Slack, std::string> evaluate_family(const Family& f, const Point& pt,
                                                     std::string_view only_item = {})
{
    Slack worst;
    std::string worst_item;
    double worst_norm = std::numeric_limits<double>::infinity();
    for (const Item& item : f.items) {
        if (!only_item.empty() && item.name != only_item)
            continue;
        if (!item.applies(pt))
            continue;
        const Slack s = item.eval(pt);
        const double norm = std::isnan(s.slack) ? -std::numeric_limits<double>::infinity()
                                                 : s.slack / (1.0 + s.scale);
        if (norm < worst_norm) {
            worst_norm = norm;
            worst = s;
            worst_item = item.name;
        }
    }
    return {worst, worst_item};
}

inline bool satisfied(PredicateClass cls, double identity_tol, const Slack& s, double eps_rel)
{
    if (std::isnan(s.slack))
        return false;
    if (cls == PredicateClass::Identity)
        return -s.slack <= identity_tol;
    return s.slack >= -eps_rel * (1.0 + std::abs(s.scale));
}

} // namespace detail

/// The 23 predicate families in registry order.
inline std::vector<PredicateSpec> list_predicates()
{
    std::vector<PredicateSpec> out;
    for (const auto& f : detail::registry())
        out.push_back(f.spec);
    return out;
}

inline PredicateSpec lookup(std::string_view id)
{
    return detail::find_family(id).spec;
}

/**
 * Signed slack of predicate `id` at `point`; `id` may name a single item as
 * "family:item". Throws DomainViolation outside the declared region.
 */
inline Slack evaluate_predicate_detail(std::string_view id, const Point& point)
{
    std::string_view family_id = id;
    std::string_view item;
    if (const auto colon = id.find(':'); colon != std::string_view::npos) {
        family_id = id.substr(0, colon);
        item = id.substr(colon + 1);
    }
    const detail::Family& f = detail::find_family(family_id);
    if (!item.empty()
        && std::none_of(f.items.begin(), f.items.end(), [&](const detail::Item& it) { return it.name == item; }))
        throw UnknownPredicate("predicate '" + std::string(family_id) + "' has no item '" + std::string(item) + "'");
    if (!f.in_domain(point))
        throw DomainViolation("point " + to_string(point) + " outside the domain of " + f.spec.id + ": "
                              + f.spec.domain);
    auto [slack, name] = detail::evaluate_family(f, point, item);
    if (name.empty())
        throw DomainViolation("no item of " + f.spec.id + " applies at " + to_string(point));
    return slack;
}

inline double evaluate_predicate(std::string_view id, const Point& point)
{
    return evaluate_predicate_detail(id, point).slack;
}

inline PredicateReport sweep(std::string_view id, const GridSpec& grid, double eps_rel = 1e-9)
{
    if (!(eps_rel >= 1e-12 && eps_rel <= 1e-6))
        throw DomainError("sweep: eps_rel must lie in [1e-12, 1e-6]");
    const detail::Family& f = detail::find_family(id);

    PredicateReport rep;
    rep.id = f.spec.id;
    rep.cls = f.spec.cls;
    double worst_norm = std::numeric_limits<double>::infinity();
    bool violated = false;

    for (const Point& pt : f.points(grid)) {
        if (!f.in_domain(pt))
            continue;
        auto [slack, item] = detail::evaluate_family(f, pt);
        if (item.empty())
            continue;
        ++rep.grid_points;
        if (!detail::satisfied(f.spec.cls, f.spec.identity_tol, slack, eps_rel))
            violated = true;
        const double norm = std::isnan(slack.slack) ? -std::numeric_limits<double>::infinity()
                                                     : slack.slack / (1.0 + slack.scale);
        if (norm < worst_norm) { // strict: first occurrence wins ties
            worst_norm = norm;
            rep.worst_slack = slack.slack;
            rep.worst_scale = slack.scale;
            rep.worst_location = pt;
            rep.worst_item = item;
        }
    }

    if (rep.grid_points == 0) {
        rep.passed = true;
        rep.status = Status::Vacuous;
    } else if (f.spec.cls == PredicateClass::Conjecture) {
        rep.passed = true;
        rep.status = violated ? Status::CounterexampleFound : Status::NoCounterexampleFound;
    } else {
        rep.passed = !violated;
        rep.status = violated ? Status::Fail : Status::Pass;
    }
    return rep;
}

inline std::vector<PredicateReport> run_all(const GridSpec& grid, double eps_rel = 1e-9)
{
    std::vector<PredicateReport> out;
    for (const auto& f : detail::registry())
        out.push_back(sweep(f.spec.id, grid, eps_rel));
    return out;
}

/// True iff no Theorem/Lemma/Identity report failed.
inline bool all_passed(const std::vector<PredicateReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const PredicateReport& r) { return r.passed; });
}

/*
 * Record format, one line per predicate, fields separated by a single space:
 *
 *   record id=<id> class=<class> grid_points=<n> worst_slack=<real>
 *          worst_location=(<name>=<real>;...) worst_item=<item> status=<status>
 *
 * Reals use the shortest round-trip decimal form. status is one of PASS,
 * FAIL, VACUOUS, NO_COUNTEREXAMPLE, FINDING. A FINDING record additionally
 * produces a line "FINDING id=<id> point=<location> item=<item> slack=<real>".
 */
inline std::string format_record(const PredicateReport& r)
{
    std::string line = "record id=" + r.id + " class=" + std::string(to_string(r.cls))
                       + " grid_points=" + std::to_string(r.grid_points)
                       + " worst_slack=" + fmt::shortest(r.grid_points ? r.worst_slack : 0.0)
                       + " worst_location=" + to_string(r.worst_location)
                       + " worst_item=" + (r.worst_item.empty() ? "-" : r.worst_item)
                       + " status=" + std::string(to_string(r.status)) + "\n";
    if (r.status == Status::CounterexampleFound)
        line += "FINDING id=" + r.id + " point=" + to_string(r.worst_location) + " item=" + r.worst_item
                + " slack=" + fmt::shortest(r.worst_slack) + "\n";
    return line;
}

inline std::string format_text(const PredicateReport& r)
{
    std::string line = std::string(to_string(r.status));
    line.resize(18, ' ');
    line += r.id;
    if (line.size() < 44)
        line.resize(44, ' ');
    line += " points=" + std::to_string(r.grid_points);
    if (r.grid_points)
        line += "  worst_slack=" + fmt::significant(r.worst_slack, 6) + " [" + r.worst_item + "] at "
                + to_string(r.worst_location);
    return line + "\n";
}

} // namespace gtrig::propcheck

#endif
