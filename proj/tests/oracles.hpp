#pragma once

// Reference computations for the tests. None of these call into the library
// routines they are used to check; they go through boost quadrature, boost
// special functions or plain truncated sums.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

using C = std::complex<double>;
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline const C I{0.0, 1.0};

/// w^n for n >= 0 by repeated multiplication (std::pow(0, 0) is NaN for complex).
inline C int_pow(C w, int n) {
    C r = 1;
    for (int i = 0; i < n; ++i) r *= w;
    return r;
}

/// q^{1/24} prod_{n>=1} (1 - q^n), product taken until |q^n| < 1e-20.
inline C eta_product(C tau) {
    const C q = std::exp(2.0 * pi * I * tau);
    C prod = std::exp(2.0 * pi * I * tau / 24.0);
    C qn = q;
    while (std::abs(qn) > 1e-20) {
        prod *= 1.0 - qn;
        qn *= q;
    }
    return prod;
}

/// sum_{|lambda| <= 60} e^{2 pi i m ((lambda + a)^2 tau + 2 (lambda + a) z)}, a = nu / 2m.
inline C theta_brute(int m, int nu, C tau, C z) {
    const double a = static_cast<double>(nu) / (2.0 * m);
    C s = 0;
    for (int l = -60; l <= 60; ++l) {
        const double r = l + a;
        s += std::exp(2.0 * pi * I * static_cast<double>(m) * (r * r * tau + 2.0 * r * z));
    }
    return s;
}

/// Upper incomplete gamma: boost for positive order, the defining integral
/// int_x^inf t^{a-1} e^{-t} dt otherwise.
inline double upper_gamma(double a, double x) {
    if (a > 0) return boost::math::tgamma(a, x);
    boost::math::quadrature::exp_sinh<double> es;
    return es.integrate([&](double t) { return std::pow(t, a - 1) * std::exp(-t); }, x,
                        std::numeric_limits<double>::infinity());
}

/// int_0^inf f(y) dy for complex f, real and imaginary parts separately.
/// The integrands here decay at least like e^{-y / 8}, so they are taken as
/// zero beyond y = 1e4 (where exp underflows and a polynomial factor could
/// turn 0 * inf into NaN).
inline C integrate_half_line(const std::function<C(double)>& f) {
    boost::math::quadrature::exp_sinh<double> es;
    const double inf = std::numeric_limits<double>::infinity();
    auto g = [&](double y) { return y > 1e4 ? C(0) : f(y); };
    const double re = es.integrate([&](double y) { return g(y).real(); }, 0.0, inf);
    const double im = es.integrate([&](double y) { return g(y).imag(); }, 0.0, inf);
    return {re, im};
}

/// int_a^b f(u) du for complex f by adaptive 61-point Gauss-Kronrod.
inline C integrate_interval(const std::function<C(double)>& f, double a, double b) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double re = GK::integrate([&](double u) { return f(u).real(); }, a, b, 15, 1e-13);
    const double im = GK::integrate([&](double u) { return f(u).imag(); }, a, b, 15, 1e-13);
    return {re, im};
}

/// One exponential term D e^{2 pi i alpha t} of a theta component.
struct Term {
    int mu;
    double alpha;  // M / 4m
    C D;
};

struct Series {
    int k;
    int m;
    int chi;  // multiplier chi_i
    std::vector<Term> terms;

    /// h_mu(t)
    C h(int mu, C t) const {
        C s = 0;
        for (const auto& x : terms)
            if (x.mu == mu) s += x.D * std::exp(2.0 * pi * I * x.alpha * t);
        return s;
    }

    /// Component of F'|T^n, read off from F'(tau + n, z) = sum conj(h(tau + n)) theta(tau + n, z):
    /// chi(T)^n h_mu(t + n) e^{-2 pi i n mu^2 / 4m}.
    C h_translated(int mu, C t, int n) const {
        const C chiT = std::exp(2.0 * pi * I * static_cast<double>(chi) / 24.0);
        return std::pow(chiT, n) * h(mu, t + static_cast<double>(n)) *
               std::exp(-2.0 * pi * I * static_cast<double>(n) * static_cast<double>(mu * mu) / (4.0 * m));
    }
};

/// Double ray integral over t = i y, tau' = i w (dt d conj(tau') = dy dw):
///   sum_a int int g_a(t) [conj(f^{T}_a(tau')) (t - conj tau' - 1)^{k-2}
///                         - conj(f^{T^-1}_a(tau')) (t - conj tau' + 1)^{k-2}] dy dw
/// by nested exp-sinh quadrature.
inline C haberland_double_ray(const Series& F, const Series& G) {
    C total = 0;
    for (int mu = 0; mu < 2 * F.m; ++mu) {
        auto inner = [&](double w) -> C {
            const C tau_p(0, w);
            const C fT = std::conj(F.h_translated(mu, tau_p, 1));
            const C fTi = std::conj(F.h_translated(mu, tau_p, -1));
            return integrate_half_line([&](double y) -> C {
                const C t(0, y);
                const C diff = t - std::conj(tau_p);
                return G.h(mu, t) * (fT * int_pow(diff - 1.0, F.k - 2) - fTi * int_pow(diff + 1.0, F.k - 2));
            });
        };
        total += integrate_half_line(inner);
    }
    return total;
}

/// (1 / sqrt(4m)) int_{|u| <= 1/2, |tau| >= 1} sum_a conj(hF_a) hG_a v^{k-2} du dv for
/// a single coset: the v-integral of each pair of terms is Gamma(k-1, c v0) / c^{k-1}
/// in closed form, the u-integral is done by Gauss-Kronrod.
inline C petersson_fd(const Series& F, const Series& G) {
    auto line = [&](double u) -> C {
        const double v0 = std::sqrt(1.0 - u * u);
        C s = 0;
        for (const auto& a : F.terms)
            for (const auto& b : G.terms) {
                if (a.mu != b.mu) continue;
                const double c = 2.0 * pi * (a.alpha + b.alpha);
                const double vint = boost::math::tgamma(static_cast<double>(F.k - 1), c * v0) / std::pow(c, F.k - 1);
                s += std::conj(a.D) * b.D * std::exp(2.0 * pi * I * (b.alpha - a.alpha) * u) * vint;
            }
        return s;
    };
    return integrate_interval(line, -0.5, 0.5) / std::sqrt(4.0 * F.m);
}

/// int_tau^{i inf} h(t) (t - tau)^{k-2} dt along t = tau + i y.
inline C eichler_vertical(const Series& F, int mu, C tau) {
    return integrate_half_line([&](double y) { return F.h(mu, tau + I * y) * int_pow(I * y, F.k - 2) * I; });
}

/// conj(int_tau^{i inf} h(t) (t - conj tau)^{k-2} dt) along t = tau + i y.
inline C eichler_vertical_nonholomorphic(const Series& F, int mu, C tau) {
    const C val = integrate_half_line([&](double y) {
        const C t = tau + I * y;
        return F.h(mu, t) * int_pow(t - std::conj(tau), F.k - 2) * I;
    });
    return std::conj(val);
}

/// int_0^{i inf} h(t) (t - tau)^{k-2} dt along t = i y.
inline C ray_period_at(const Series& F, int mu, C tau) {
    return integrate_half_line([&](double y) { return F.h(mu, I * y) * int_pow(I * y - tau, F.k - 2) * I; });
}

/// Random synthetic series with 1..4 terms, alpha = M / 4m for M = M_num / M_den.
struct RandomSeriesSpec {
    Series series;
    std::vector<std::pair<long, long>> M;  // (M_num, M_den) per term
};

inline RandomSeriesSpec random_series(std::mt19937_64& rng, int k, int m, int chi) {
    std::uniform_int_distribution<int> count(1, 4), mu(0, 2 * m - 1), num(1, 12), den(1, 4);
    std::normal_distribution<double> N;
    RandomSeriesSpec out{{k, m, chi, {}}, {}};
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const long a = num(rng), b = den(rng);
        out.M.emplace_back(a, b);
        out.series.terms.push_back({mu(rng), static_cast<double>(a) / b / (4.0 * m), C(N(rng), N(rng))});
    }
    return out;
}

}  // namespace oracle
