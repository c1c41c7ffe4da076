#include "jacobi/theta_weil.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "jacobi/errors.hpp"

namespace jacobi {

ThetaIndex ThetaIndex::make(int m, int nu) {
    if (m < 1) throw InvalidArgument("theta index m must be positive");
    const int n = 2 * m;
    return {m, ((nu % n) + n) % n};
}

Complex theta_eval(const ThetaIndex& idx, Complex tau, Complex z, const PrecisionConfig& cfg) {
    if (!(tau.imag() > 0)) throw InvalidArgument("theta needs Im(tau) > 0");
    const double a = idx.a();
    const Complex c = 2.0 * kPi * kI * static_cast<double>(idx.m);
    auto term = [&](long lambda) -> Complex {
        const double r = static_cast<double>(lambda) + a;
        return std::exp(c * (r * r * tau + 2.0 * r * z));
    };
    return series_sum(term, cfg).value;
}

Complex theta_combination(int m, const CVector& f, Complex tau, Complex z, const PrecisionConfig& cfg) {
    if (f.size() != 2 * m) throw ShapeMismatch("coefficient vector must have 2m entries");
    CompensatedSum s;
    for (int nu = 0; nu < 2 * m; ++nu)
        if (f[nu] != Complex{}) s += f[nu] * theta_eval(ThetaIndex::make(m, nu), tau, z, cfg);
    return s.value();
}

namespace {

CMatrix s_matrix(int m, const Multiplier& mult, const PrecisionConfig& cfg) {
    const int n = 2 * m;
    const Complex scale = root_of_unity(-1, 8) / std::sqrt(static_cast<double>(n)) /
                          chi(mult, GroupElement::S(), cfg);
    CMatrix r(n, n);
    for (int nu = 0; nu < n; ++nu)
        for (int mu = 0; mu < n; ++mu) r(nu, mu) = scale * root_of_unity(-static_cast<long>(mu) * nu, n);
    return r;
}

CMatrix t_matrix(int m, const Multiplier& mult, long power, const PrecisionConfig& cfg) {
    const int n = 2 * m;
    const Complex inv_chi = 1.0 / chi(mult, GroupElement::T(power), cfg);
    CMatrix r = CMatrix::Zero(n, n);
    for (int nu = 0; nu < n; ++nu)
        r(nu, nu) = inv_chi * root_of_unity(static_cast<long>(nu) * nu * power, 4L * m);
    return r;
}

}  // namespace

CMatrix theta_minus_identity(int m, const Multiplier& mult, const PrecisionConfig& cfg) {
    const int n = 2 * m;
    const Complex scale = -kI / chi(mult, GroupElement::minus_identity(), cfg);
    CMatrix r = CMatrix::Zero(n, n);
    for (int nu = 0; nu < n; ++nu) r(nu, (n - nu) % n) = scale;
    return r;
}

CMatrix theta_token_matrix(int m, const Multiplier& mult, const Token& t, const PrecisionConfig& cfg) {
    switch (t.kind) {
        case Token::Kind::S:
            return s_matrix(m, mult, cfg);
        case Token::Kind::SInv:
            return s_matrix(m, mult, cfg).adjoint();
        case Token::Kind::T:
            return t_matrix(m, mult, t.power, cfg);
    }
    return {};
}

Complex slash_evaluate(const JacobiFunction& F, HalfInteger weight, int m, const Multiplier& mult,
                       const JacobiGroupElement& j, Complex tau, Complex z, const PrecisionConfig& cfg) {
    if (!(tau.imag() > 0)) throw InvalidArgument("tau must lie in the upper half plane");
    const GroupElement& g = j.gamma;
    const double md = static_cast<double>(m);
    auto gamma_slashed = [&](Complex t, Complex w) -> Complex {
        const Complex jt = g.automorphy(t);
        const Complex factor = principal_power(jt, -weight.value()) / chi(mult, g, cfg) *
                               std::exp(-2.0 * kPi * kI * md * static_cast<double>(g.c()) * w * w / jt);
        return factor * F(g.act(t), w / jt);
    };
    const double lam = static_cast<double>(j.lambda), mu = static_cast<double>(j.mu);
    if (j.lambda == 0 && j.mu == 0) return gamma_slashed(tau, z);
    const Complex phase = std::exp(2.0 * kPi * kI * md * (lam * lam * tau + 2.0 * lam * z));
    return phase * gamma_slashed(tau, z + lam * tau + mu);
}

ActionMatrix weil_matrix(int m, HalfInteger weight, const Multiplier& mult, const GroupElement& g,
                         bool verify, const PrecisionConfig& cfg) {
    if (m < 1) throw InvalidArgument("index m must be positive");
    const int n = 2 * m;
    const Word& w = g.word();
    CMatrix r = CMatrix::Identity(n, n);
    for (const Token& t : w.tokens) r = theta_token_matrix(m, mult, t, cfg) * r;
    if (w.negated) r = theta_minus_identity(m, mult, cfg) * r;

    if (verify) {
        std::mt19937_64 rng(0x5eed0001ULL + static_cast<unsigned long long>(n));
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        CVector f(n);
        for (int nu = 0; nu < n; ++nu) f[nu] = Complex(unit(rng), unit(rng));
        const CVector rf = r * f;
        JacobiFunction F = [&](Complex t, Complex zz) { return theta_combination(m, f, t, zz, cfg); };
        for (int trial = 0; trial < 3; ++trial) {
            const Complex tau(0.5 * unit(rng), 1.0 + 0.25 * unit(rng));
            const Complex z(0.5 * unit(rng), 0.2 * unit(rng));
            const Complex direct = slash_evaluate(F, weight, m, mult, {g, 0, 0}, tau, z, cfg);
            const Complex jt = g.automorphy(tau);
            const Complex via = principal_power(jt, 0.5 - weight.value()) * theta_combination(m, rf, tau, z, cfg);
            const double err = std::abs(direct - via) / std::max(std::abs(direct), 1e-300);
            if (!(err <= 1e-8))
                throw VerificationFailure("theta action matrix for " + g.str() +
                                          " disagrees with the direct slash (rel. error " +
                                          std::to_string(err) + ")");
        }
    }
    return {r, weight, mult, g};
}

KappaResult kappa_exponents(int m, const Multiplier& mult, const GroupElement& Q, const PrecisionConfig& cfg) {
    if (Q.c() != 0 || Q.a() != 1) throw NotParabolic("expected T^lambda, got " + Q.str());
    const long lambda = Q.b();
    const long e48 = chi_exponent48(mult, Q, cfg);
    const long den = 48L * m;
    KappaResult out;
    for (int nu = 0; nu < 2 * m; ++nu) {
        // e48/48 - lambda nu^2 / 4m, reduced mod 1
        long num = (e48 * m - 12L * lambda * nu * nu) % den;
        if (num < 0) num += den;
        out.kappa.push_back(static_cast<double>(num) / static_cast<double>(den));
        if (num == 0) out.parabolic.push_back(nu);
    }
    return out;
}

}  // namespace jacobi
