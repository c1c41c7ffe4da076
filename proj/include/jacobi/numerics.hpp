#pragma once

// Shared scalar layer: precision settings, compensated sums, the incomplete
// gamma function at half-integral order, truncated series and quadrature.

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace jacobi {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// A number in (1/2)Z, stored as its double. Weights, incomplete-gamma orders
/// and the like are all of this form.
struct HalfInteger {
    int twice = 0;

    static constexpr HalfInteger from_twice(int t) { return HalfInteger{t}; }
    static constexpr HalfInteger integer(int n) { return HalfInteger{2 * n}; }

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integral() const { return twice % 2 == 0; }
    constexpr HalfInteger operator+(HalfInteger o) const { return {twice + o.twice}; }
    constexpr HalfInteger operator-(HalfInteger o) const { return {twice - o.twice}; }
    constexpr HalfInteger operator-() const { return {-twice}; }
    constexpr bool operator==(const HalfInteger&) const = default;

    std::string str() const;
};

struct PrecisionConfig {
    int sig_digits = 16;
    double trunc_eps = 1e-18;  // relative tail cutoff for series
    int quad_points = 200;     // per-axis quadrature resolution

    /// Throws InvalidArgument unless sig_digits >= 15, trunc_eps > 0 and
    /// quad_points >= 16.
    void validate() const;

    /// Defaults overridden by JACOBI_SIG_DIGITS, JACOBI_TRUNC_EPS and
    /// JACOBI_QUAD_POINTS when set.
    static PrecisionConfig from_env();
};

/// Neumaier-compensated complex accumulator. Results do not depend on the
/// order of the addends beyond a few ulps.
class CompensatedSum {
public:
    void add(Complex x);
    CompensatedSum& operator+=(Complex x) {
        add(x);
        return *this;
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void step(double& sum, double& comp, double x);
    double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

/// Upper incomplete gamma function Gamma(alpha, x) for alpha in (1/2)Z and
/// x > 0. Non-positive orders go through the downward recurrence from
/// Gamma(1/2, x) or Gamma(1, x).
double incomplete_gamma(HalfInteger alpha, double x);

struct SeriesResult {
    Complex value;
    double error = 0;        // magnitude of the last accepted shell
    std::size_t terms = 0;
};

/// Sums term(n) over n in Z shell by shell (n = 0, then {n, -n}), stopping
/// once two consecutive shells contribute less than trunc_eps times the
/// running magnitude. One-sided series return zero for negative n.
/// Throws NonConvergent after 10^6 terms.
SeriesResult series_sum(const std::function<Complex(long)>& term, const PrecisionConfig& cfg);

/// exp(2 pi i num / den), with the numerator reduced exactly first.
Complex root_of_unity(long num, long den);

/// w^e with the principal logarithm.
Complex principal_power(Complex w, double e);

/// Throws NumericalError naming `what` if z is NaN or infinite.
Complex require_finite(Complex z, const char* what);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Same rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Adaptive 7/15-point Gauss-Kronrod on [a, b]. Throws QuadratureNotConverged
/// if the tolerance is not met within max_depth bisections.
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double rel_tol = 1e-12, double abs_tol = 1e-300, int max_depth = 40);

/// Integral over [a, infinity) of a function with exponential decay, by the
/// substitution x = a + s / (1 - s).
Complex integrate_to_infinity(const std::function<Complex(double)>& f, double a,
                              double rel_tol = 1e-12, double abs_tol = 1e-300);

}  // namespace jacobi
