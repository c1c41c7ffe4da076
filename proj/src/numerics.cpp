#include "jacobi/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi {

std::string HalfInteger::str() const {
    if (is_integral()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

void PrecisionConfig::validate() const {
    if (sig_digits < 15) throw InvalidArgument("sig_digits must be >= 15");
    if (!(trunc_eps > 0)) throw InvalidArgument("trunc_eps must be positive");
    if (quad_points < 16) throw InvalidArgument("quad_points must be >= 16");
}

PrecisionConfig PrecisionConfig::from_env() {
    PrecisionConfig cfg;
    auto read = [](const char* name) -> const char* {
        const char* v = std::getenv(name);
        return (v && *v) ? v : nullptr;
    };
    try {
        if (auto v = read("JACOBI_SIG_DIGITS")) cfg.sig_digits = std::stoi(v);
        if (auto v = read("JACOBI_TRUNC_EPS")) cfg.trunc_eps = std::stod(v);
        if (auto v = read("JACOBI_QUAD_POINTS")) cfg.quad_points = std::stoi(v);
    } catch (const std::logic_error& e) {
        throw InvalidArgument(std::string("unparsable precision override: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

void CompensatedSum::step(double& sum, double& comp, double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
        comp += (sum - t) + x;
    else
        comp += (x - t) + sum;
    sum = t;
}

void CompensatedSum::add(Complex x) {
    step(re_, re_c_, x.real());
    step(im_, im_c_, x.imag());
}

namespace {

// Legendre continued fraction for Gamma(a, x), evaluated by modified Lentz.
// Converges for x > a + 1; used for x >= 1 and a <= 0.
double gamma_continued_fraction(double a, double x) {
    double b = x + 1 - a, c = 1e300, d = 1 / b, h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1 / d;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

double exponential_integral_series(double x) {
    double sum = 0, term = 1;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        const double add = -term / k;
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) + sum;
}

}  // namespace

double incomplete_gamma(HalfInteger alpha, double x) {
    if (!(x > 0)) throw InvalidArgument("incomplete_gamma needs x > 0");
    // The downward recurrence cancels badly for large x.
    if (alpha.twice <= 0 && x >= 1.0) return gamma_continued_fraction(alpha.value(), x);
    const double ex = std::exp(-x);
    // Start at 1/2 or 1 and walk to alpha.
    HalfInteger a = alpha.is_integral() ? HalfInteger::integer(1) : HalfInteger::from_twice(1);
    double g = alpha.is_integral() ? ex : std::sqrt(kPi) * std::erfc(std::sqrt(x));
    while (a.twice < alpha.twice) {
        // Gamma(a+1, x) = a Gamma(a, x) + x^a e^{-x}
        g = a.value() * g + std::pow(x, a.value()) * ex;
        a.twice += 2;
    }
    while (a.twice > alpha.twice) {
        a.twice -= 2;
        // Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a, except Gamma(0, x) = E_1(x)
        g = a.twice == 0 ? exponential_integral_series(x) : (g - std::pow(x, a.value()) * ex) / a.value();
    }
    return g;
}

SeriesResult series_sum(const std::function<Complex(long)>& term, const PrecisionConfig& cfg) {
    constexpr std::size_t kMaxTerms = 1'000'000;
    CompensatedSum total;
    SeriesResult out;
    int quiet_shells = 0;
    for (long n = 0;; ++n) {
        CompensatedSum shell;
        shell += term(n);
        out.terms += 1;
        if (n != 0) {
            shell += term(-n);
            out.terms += 1;
        }
        const Complex s = shell.value();
        total += s;
        const double running = std::abs(total.value());
        if (std::abs(s) <= cfg.trunc_eps * running || (running == 0 && s == Complex{})) {
            if (++quiet_shells >= 2) {
                out.error = std::abs(s);
                break;
            }
        } else {
            quiet_shells = 0;
        }
        if (out.terms >= kMaxTerms)
            throw NonConvergent("series did not meet the cutoff within 10^6 terms");
    }
    out.value = total.value();
    return out;
}

Complex root_of_unity(long num, long den) {
    if (den <= 0) throw InvalidArgument("root_of_unity needs a positive denominator");
    long r = num % den;
    if (r < 0) r += den;
    // Exact values on the axes keep phases clean.
    if (r == 0) return {1, 0};
    if (2 * r == den) return {-1, 0};
    if (4 * r == den) return {0, 1};
    if (4 * r == 3 * den) return {0, -1};
    const double t = 2 * kPi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

Complex principal_power(Complex w, double e) {
    if (w == Complex{}) throw DegeneratePoint("power of zero");
    return std::exp(e * std::log(w));
}

Complex require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NumericalError(std::string("non-finite value in ") + what);
    return z;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw InvalidArgument("gauss_legendre needs n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1);
        const double w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0;
    return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    QuadratureRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

namespace {

// Kronrod 15 / Gauss 7 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct KronrodEstimate {
    Complex value;
    double error;
};

KronrodEstimate kronrod15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex rk = fc * kWgk[7];
    Complex rg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const Complex f1 = f(c - h * kXgk[j]);
        const Complex f2 = f(c + h * kXgk[j]);
        rk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
    }
    return {rk * h, std::abs((rk - rg) * h)};
}

Complex adaptive(const std::function<Complex(double)>& f, double a, double b, double tol,
                 int depth, KronrodEstimate whole) {
    if (whole.error <= tol || depth <= 0) {
        if (whole.error > tol && whole.error > 1e-14 * std::abs(whole.value))
            throw QuadratureNotConverged("adaptive Gauss-Kronrod exhausted its depth");
        return whole.value;
    }
    const double mid = 0.5 * (a + b);
    const KronrodEstimate left = kronrod15(f, a, mid);
    const KronrodEstimate right = kronrod15(f, mid, b);
    return adaptive(f, a, mid, 0.5 * tol, depth - 1, left) +
           adaptive(f, mid, b, 0.5 * tol, depth - 1, right);
}

}  // namespace

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, int max_depth) {
    const KronrodEstimate whole = kronrod15(f, a, b);
    // A coarse pass fixes the scale for the relative tolerance.
    double scale = std::abs(whole.value);
    {
        CompensatedSum coarse;
        constexpr int kPieces = 8;
        for (int i = 0; i < kPieces; ++i) {
            const double lo = a + (b - a) * i / kPieces, hi = a + (b - a) * (i + 1) / kPieces;
            coarse += kronrod15(f, lo, hi).value;
        }
        scale = std::max(scale, std::abs(coarse.value()));
    }
    const double tol = std::max(abs_tol, rel_tol * scale);
    return adaptive(f, a, b, tol, max_depth, whole);
}

Complex integrate_to_infinity(const std::function<Complex(double)>& f, double a, double rel_tol,
                              double abs_tol) {
    auto g = [&](double s) -> Complex {
        if (s >= 1.0) return {};
        const double one_minus = 1.0 - s;
        const double x = a + s / one_minus;
        const Complex v = f(x);
        if (v == Complex{}) return {};
        return v / (one_minus * one_minus);
    };
    return integrate_adaptive(g, 0.0, 1.0, rel_tol, abs_tol);
}

}  // namespace jacobi
