#include "jacobi/diffops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "jacobi/errors.hpp"

namespace jacobi {

DiffPoly DiffPoly::constant(Complex c) {
    DiffPoly p;
    p.add({0, 0, 0, 0}, c);
    return p;
}

// Wirtinger derivatives from the real partials.
DiffPoly DiffPoly::d_tau() {
    DiffPoly p;
    p.add({1, 0, 0, 0}, 0.5);
    p.add({0, 1, 0, 0}, Complex(0, -0.5));
    return p;
}

DiffPoly DiffPoly::d_tau_bar() {
    DiffPoly p;
    p.add({1, 0, 0, 0}, 0.5);
    p.add({0, 1, 0, 0}, Complex(0, 0.5));
    return p;
}

DiffPoly DiffPoly::d_z() {
    DiffPoly p;
    p.add({0, 0, 1, 0}, 0.5);
    p.add({0, 0, 0, 1}, Complex(0, -0.5));
    return p;
}

DiffPoly DiffPoly::d_z_bar() {
    DiffPoly p;
    p.add({0, 0, 1, 0}, 0.5);
    p.add({0, 0, 0, 1}, Complex(0, 0.5));
    return p;
}

void DiffPoly::add(const Key& k, Complex c) {
    if (c == Complex{}) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const { return *this + o * Complex(-1, 0); }

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
    DiffPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add({k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]}, c1 * c2);
    return r;
}

DiffPoly DiffPoly::operator*(Complex c) const {
    DiffPoly r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

DiffPoly DiffPoly::pow(int n) const {
    DiffPoly r = constant(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::vector<double> central_weights(int derivative, int accuracy) {
    if (derivative < 0 || accuracy < 2 || accuracy % 2) throw InvalidArgument("bad stencil request");
    if (derivative == 0) return {1.0};
    const int r = (derivative + accuracy - 1) / 2;
    const int n = 2 * r + 1;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = i - r;
    // Fornberg: c[j][d] = weight of x_j for the d-th derivative at 0.
    std::vector<std::vector<double>> c(n, std::vector<double>(derivative + 1, 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i < n; ++i) {
        double c2 = 1.0;
        const int mn = std::min(i, derivative);
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int d = mn; d >= 1; --d) c[i][d] = c1 * (d * c[i - 1][d - 1] - x[i - 1] * c[i - 1][d]) / c2;
                c[i][0] = -c1 * x[i - 1] * c[i - 1][0] / c2;
            }
            for (int d = mn; d >= 1; --d) c[j][d] = (x[i] * c[j][d] - d * c[j][d - 1]) / c3;
            c[j][0] = x[i] * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][derivative];
    return w;
}

Complex DiffPoly::apply(const SampledFunction& F, Complex tau, Complex z, int accuracy) const {
    if (!(tau.imag() > 0)) throw InvalidArgument("tau must lie in the upper half plane");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::map<std::tuple<double, int, int, int, int>, Complex> cache;
    auto sample = [&](double h, int iu, int iv, int ix, int iy) -> Complex {
        const auto key = std::make_tuple(h, iu, iv, ix, iy);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const Complex t = tau + h * Complex(iu, iv);
        const Complex w = z + h * Complex(ix, iy);
        const Complex val = F.f(t, w);
        cache.emplace(key, val);
        return val;
    };

    CompensatedSum total;
    for (const auto& [key, coeff] : terms_) {
        const int order = key[0] + key[1] + key[2] + key[3];
        if (order == 0) {
            total += coeff * sample(0.0, 0, 0, 0, 0);
            continue;
        }
        const double h = F.step ? *F.step : tau.imag() * std::pow(eps, 1.0 / (order + accuracy));
        std::array<std::vector<double>, 4> w;
        for (int d = 0; d < 4; ++d) w[d] = central_weights(key[d], accuracy);
        const int rv = static_cast<int>(w[1].size() / 2);
        if (tau.imag() - rv * h <= 0)
            throw StencilOutOfDomain("stencil of radius " + std::to_string(rv) + " and step " + std::to_string(h) +
                                     " leaves the upper half plane");
        const int ru = static_cast<int>(w[0].size() / 2), rx = static_cast<int>(w[2].size() / 2),
                  ry = static_cast<int>(w[3].size() / 2);
        CompensatedSum s;
        for (int a = -ru; a <= ru; ++a)
            for (int b = -rv; b <= rv; ++b)
                for (int c = -rx; c <= rx; ++c)
                    for (int d = -ry; d <= ry; ++d) {
                        const double wt = w[0][a + ru] * w[1][b + rv] * w[2][c + rx] * w[3][d + ry];
                        if (wt != 0.0) s += wt * sample(h, a, b, c, d);
                    }
        total += coeff * s.value() / std::pow(h, order);
    }
    return total.value();
}

namespace {

DiffPoly heat_operator(int m) {
    return DiffPoly::d_tau() * Complex(0, 8 * kPi * m) - DiffPoly::d_z() * DiffPoly::d_z();
}

}  // namespace

Complex apply_heat(const SampledFunction& F, int m, Complex tau, Complex z) {
    return heat_operator(m).apply(F, tau, z, 2);
}

Complex apply_heat_power(const SampledFunction& F, int m, int p, Complex tau, Complex z, int accuracy) {
    if (p < 0) throw InvalidArgument("heat power must be non-negative");
    return heat_operator(m).pow(p).apply(F, tau, z, accuracy);
}

Complex apply_casimir(const SampledFunction& F, HalfInteger k, int m, Complex tau, Complex z, int accuracy) {
    using P = DiffPoly;
    const Complex T(0, 2 * tau.imag());  // tau - conj(tau)
    const Complex Z(0, 2 * z.imag());    // z - conj(z)
    const double kk = k.value();
    const Complex c = 1.0 / (4.0 * kPi * kI * static_cast<double>(m));
    const P dt = P::d_tau(), dtb = P::d_tau_bar(), dz = P::d_z(), dzb = P::d_z_bar();
    const P op = dt * dtb * (-2.0 * T * T) + dtb * (-(2 * kk - 1) * T) + dtb * dz * dz * (T * T * c) +
                 dz * dzb * (kk * T * c) + dz * dz * dzb * (T * Z * c) + dt * dzb * (-2.0 * T * Z) +
                 dzb * (kk * Z) + dt * dzb * dzb * (T * T * c) + dzb * dzb * (Z * Z / 2.0 + kk * T * c) +
                 dz * dzb * dzb * (T * Z * c);
    return op.apply(F, tau, z, accuracy);
}

Complex apply_d_minus(const SampledFunction& F, int m, Complex tau, Complex z) {
    using P = DiffPoly;
    const double v = tau.imag(), y = z.imag();
    const P op = (P::d_tau_bar() * Complex(0, -2 * v) + P::d_z_bar() * Complex(0, -2 * y) +
                  P::d_z_bar() * P::d_z_bar() * (v / (4 * kPi * m))) *
                 v;
    return op.apply(F, tau, z, 2);
}

Complex apply_xi(const SampledFunction& F, HalfInteger k, int m, Complex tau, Complex z) {
    return std::pow(tau.imag(), k.value() - 2.5) * apply_d_minus(F, m, tau, z);
}

}  // namespace jacobi
