#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/cocycle_solver.hpp"
#include "jacobi/period_module.hpp"
#include "jacobi/theta_weil.hpp"

namespace jacobi {

/// One term D e^{2 pi i (M / 4m) t} of the theta component h_mu.
struct SkewTerm {
    int mu = 0;
    long M_num = 1;
    long M_den = 1;
    Complex D;

    double M() const { return static_cast<double>(M_num) / static_cast<double>(M_den); }
};

/// Finite Fourier data of a skew-holomorphic Jacobi cusp form of weight
/// k + 1/2 and index m:
///   F'(tau, z) = sum_mu conj(h_mu(tau)) theta_{m,mu/2m}(tau, z),
///   h_mu(t)    = sum_{terms with this mu} D e^{2 pi i (M / 4m) t}.
struct SkewFourierSeries {
    int weight_twice = 5;  // 2k + 1
    int m = 1;
    Multiplier mult;
    std::vector<SkewTerm> terms;
    /// Expansions of F' |^sk A for cosets A other than the identity, as
    /// supplied by the caller.
    std::vector<std::pair<GroupElement, std::vector<SkewTerm>>> supplied;
    /// The element this expansion was slashed by, if any.
    std::optional<GroupElement> slashed_by;

    int k() const { return (weight_twice - 1) / 2; }

    /// Throws InvalidArgument unless the weight is k + 1/2 with k >= 2,
    /// m >= 1, every mu lies in [0, 2m) and every M is positive.
    void validate() const;

    /// h_mu(t).
    Complex component(int mu, Complex t) const;
    /// F'(tau, z).
    Complex evaluate(Complex tau, Complex z, const PrecisionConfig& cfg = {}) const;

    /// {"weight_twice":..,"index":..,"chi":..,"terms":[{"mu","M_num","M_den","re","im"}]}
    static SkewFourierSeries from_json(const std::string& text);
    std::string to_json() const;
};

struct LValue {
    Complex value;
    bool empty_class = false;
};

/// sum over the terms of class mu of D / (M / 4m)^s.
LValue partial_L(const SkewFourierSeries& F, const ThetaIndex& a, Complex s);

/// int_tau^{i inf} h(t) (t - tau)^{k-2} dt for the component h = h_mu, termwise.
Complex eichler_component(const SkewFourierSeries& F, int mu, Complex tau);
/// conj(int_tau^{i inf} h(t) (t - conj(tau))^{k-2} dt) for h = h_mu, termwise
/// through Gamma(k - 1, .).
Complex eichler_nonholomorphic_component(const SkewFourierSeries& F, int mu, Complex tau);

struct EichlerValues {
    Complex holo;
    Complex nonholo;
};

/// Jacobi lifts sum_a E(h_a)(tau) theta_{m,a}(tau, z) and the
/// non-holomorphic counterpart.
EichlerValues eichler_integrals(const SkewFourierSeries& F, Complex tau, Complex z,
                                const PrecisionConfig& cfg = {});

/// Polynomial sum_a (int_0^{i inf} h_a(t) (t - tau)^{k-2} dt) theta_{m,a},
/// from the moments i^{n+1} n! (2 pi)^{-n-1} L(h_a, n + 1).
PolyThetaVector ray_period_holomorphic(const SkewFourierSeries& F);

/// sum_a conj(int_0^{i inf} h_a(t) (t - conj(tau))^{k-2} dt) theta_{m,a},
/// with the moments integrated numerically along the imaginary axis.
PolyThetaVector ray_period_nonholomorphic(const SkewFourierSeries& F, const PrecisionConfig& cfg = {});

/// F' |^sk A. T^n acts on the terms by the phases chi(T^n) e^{2 pi i n (M - mu^2) / 4m};
/// other elements need supplied expansions (UnsupportedElement otherwise).
SkewFourierSeries skew_slash(const SkewFourierSeries& F, const GroupElement& A,
                             const PrecisionConfig& cfg = {});

/// chi(A)^{-1} (c conj(tau) + d)^{1/2 - k} |c tau + d|^{-1} e^{-2 pi i m c z^2 / (c tau + d)}
/// F'(A tau, z / (c tau + d)), evaluated directly.
Complex skew_slash_evaluate(const SkewFourierSeries& F, const GroupElement& A, Complex tau, Complex z,
                            const PrecisionConfig& cfg = {});

/// (1 / sqrt(4m)) (1 / index) sum_A int_{Gamma_1 \ H} sum_a conj(h^{F|A}_a) h^{G|A}_a v^{k-2} du dv.
/// Throws QuadratureNotConverged if doubling the resolution moves the
/// value by more than 1e-4 relative.
Complex petersson(const SkewFourierSeries& F, const SkewFourierSeries& G, const CosetTable& table = {},
                  const PrecisionConfig& cfg = {});

/// int over z in C / (Z tau + Z) of theta_{m,a} conj(theta_{m,b}) e^{-4 pi m y^2 / v} dx dy.
Complex theta_inner_product(int m, int nu_a, int nu_b, Complex tau, const PrecisionConfig& cfg = {});

/// The double-ray integrals
///   sum_A sum_a (int_{1}^{i inf} - int_{-1}^{i inf}) int_0^{i inf} g_a(t) conj(f_a(tau)) (t - conj(tau))^{k-2} dt d conj(tau)
/// with g_a, f_a the components of G'|A and F'|A, expanded into partial L-values:
///   sum (k-2)! / (k-2-p-q)! i^{p+q+2} / (2 pi)^{p+q+2} L(G|A, a, q+1)
///       [(-1)^{k-1-q+p} conj L(F|AT, a, p+1) + conj L(F|AT^{-1}, a, p+1)]
/// over p, q >= 0 with p + q <= k - 2.
Complex haberland_rhs(const SkewFourierSeries& F, const SkewFourierSeries& G, const CosetTable& table = {},
                      const PrecisionConfig& cfg = {});

/// A single Fourier term e^{2 pi i (n tau + r z)} of a harmonic Maass-Jacobi
/// form, optionally with the non-holomorphic profile
/// Gamma(3/2 - w, pi (r^2 - 4 m n) v / m).
struct HarmonicTerm {
    double n = 0;
    long r = 0;
    Complex coeff;
};

struct HarmonicExpansion {
    HalfInteger weight;
    int m = 1;
    std::vector<HarmonicTerm> plus;
    std::vector<HarmonicTerm> minus;  // requires r^2 - 4 m n > 0

    void validate() const;
    Complex evaluate_plus(Complex tau, Complex z) const;
    Complex evaluate_minus(Complex tau, Complex z) const;
    Complex evaluate(Complex tau, Complex z) const { return evaluate_plus(tau, z) + evaluate_minus(tau, z); }
    /// H_m^p applied termwise to the holomorphic part:
    /// sum a^+ (4 pi^2 (r^2 - 4 m n))^p e^{2 pi i (n tau + r z)}.
    Complex heat_power_plus(int p, Complex tau, Complex z) const;
};

}  // namespace jacobi
