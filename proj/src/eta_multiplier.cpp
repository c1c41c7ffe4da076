#include "jacobi/eta_multiplier.hpp"

#include <cmath>

#include "jacobi/errors.hpp"

namespace jacobi {

Multiplier Multiplier::power(int i) { return Multiplier{i}; }

bool Multiplier::matches_weight(HalfInteger w) const {
    return ((residue() - w.twice) % 4 + 4) % 4 == 0;
}

Complex dedekind_eta(Complex tau, const PrecisionConfig& cfg) {
    if (!(tau.imag() > 0)) throw InvalidArgument("eta needs Im(tau) > 0");
    if (tau.imag() < 1e-6) throw NonConvergent("Im(tau) too small for the eta series; reduce tau first");
    // eta(tau) = sum_n (-1)^n q^{(6n+1)^2/24}
    const Complex two_pi_i_tau = 2.0 * kPi * kI * tau;
    auto term = [&](long n) -> Complex {
        const double e = static_cast<double>((6 * n + 1) * (6 * n + 1)) / 24.0;
        const Complex v = std::exp(two_pi_i_tau * e);
        return (n % 2 == 0) ? v : -v;
    };
    return series_sum(term, cfg).value;
}

Complex chi_unsnapped(const Multiplier& mult, const GroupElement& g, Complex tau0,
                      const PrecisionConfig& cfg) {
    const int i = mult.residue();
    if (i == 0) return {1, 0};
    const Complex ratio = dedekind_eta(g.act(tau0), cfg) / dedekind_eta(tau0, cfg);
    const Complex j = g.automorphy(tau0);
    return std::pow(ratio, i) / principal_power(j, 0.5 * i);
}

namespace {

Complex probe_for(const GroupElement& g) {
    const Complex tau0{0, 2};
    if (g.act(tau0).imag() >= 0.1) return tau0;
    // Both tau and g tau at height 1/|c|.
    const double c = static_cast<double>(g.c()), d = static_cast<double>(g.d());
    return {-d / c, 1.0 / std::abs(c)};
}

}  // namespace

int chi_exponent48(const Multiplier& mult, const GroupElement& g, const PrecisionConfig& cfg) {
    const Complex raw = chi_unsnapped(mult, g, probe_for(g), cfg);
    double e = std::arg(raw) * 48.0 / (2 * kPi);
    long k = std::lround(e);
    const Complex snapped = root_of_unity(k, 48);
    if (std::abs(raw - snapped) > 1e-6)
        throw SnapFailure("chi(" + g.str() + ") is not within 1e-6 of a 48th root of unity");
    return static_cast<int>(((k % 48) + 48) % 48);
}

Complex chi(const Multiplier& mult, const GroupElement& g, const PrecisionConfig& cfg) {
    return root_of_unity(chi_exponent48(mult, g, cfg), 48);
}

}  // namespace jacobi
