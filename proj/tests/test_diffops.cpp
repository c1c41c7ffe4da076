#include "doctest.h"
#include "jacobi/diffops.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/jacobi_analysis.hpp"
#include "oracles.hpp"

using namespace jacobi;

namespace {

bool close(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-13) return false;
    return true;
}

Complex expo(double n, double r, Complex t, Complex w) { return std::exp(2.0 * kPi * kI * (n * t + r * w)); }

}  // namespace

TEST_CASE("central difference weights") {
    CHECK(close(central_weights(1, 2), {-0.5, 0, 0.5}));
    CHECK(close(central_weights(2, 2), {1, -2, 1}));
    CHECK(close(central_weights(1, 4), {1.0 / 12, -2.0 / 3, 0, 2.0 / 3, -1.0 / 12}));
    CHECK(close(central_weights(2, 4), {-1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12}));
    CHECK(close(central_weights(3, 2), {-0.5, 1, 0, -1, 0.5}));
    CHECK(close(central_weights(0, 2), {1}));
    CHECK_THROWS_AS(central_weights(1, 3), InvalidArgument);
}

TEST_CASE("Wirtinger algebra") {
    const DiffPoly lap = DiffPoly::d_tau() * DiffPoly::d_tau_bar();
    REQUIRE(lap.terms().size() == 2);
    CHECK(lap.terms().at({2, 0, 0, 0}) == Complex(0.25, 0));
    CHECK(lap.terms().at({0, 2, 0, 0}) == Complex(0.25, 0));
    CHECK((DiffPoly::d_z() - DiffPoly::d_z()).terms().empty());
    CHECK(DiffPoly::d_z().pow(0).terms().at({0, 0, 0, 0}) == Complex(1, 0));
}

TEST_CASE("derivatives of elementary functions") {
    const Complex tau(0.2, 0.8), z(0.1, 0.3);
    SampledFunction F{[](Complex t, Complex w) { return t * t * w + std::conj(t) * w * w; }, {}};
    CHECK(std::abs(DiffPoly::d_tau().apply(F, tau, z) - 2.0 * tau * z) < 1e-8);
    CHECK(std::abs(DiffPoly::d_tau_bar().apply(F, tau, z) - z * z) < 1e-8);
    CHECK(std::abs(DiffPoly::d_z().apply(F, tau, z) - (tau * tau + 2.0 * std::conj(tau) * z)) < 1e-8);
    CHECK(std::abs(DiffPoly::d_z_bar().apply(F, tau, z)) < 1e-8);
}

TEST_CASE("stencils must stay in the upper half plane") {
    SampledFunction F{[](Complex t, Complex) { return t; }, 0.5};
    CHECK_THROWS_AS(apply_heat(F, 1, {0, 0.4}, 0.0), StencilOutOfDomain);
    CHECK_THROWS_AS(apply_heat(F, 1, {0, -1}, 0.0), InvalidArgument);
}

TEST_CASE("heat operator") {
    const Complex tau(0.1, 1.0), z(0.2, 0.1);
    for (int m : {1, 2, 3})
        for (int nu = 0; nu < 2 * m; ++nu) {
            SampledFunction F{[&](Complex t, Complex w) { return oracle::theta_brute(m, nu, t, w); }, {}};
            CHECK(std::abs(apply_heat(F, m, tau, z)) <= 1e-5 * std::abs(F.f(tau, z)));
        }
    for (auto [n, r] : {std::pair{1.0, 1.0}, std::pair{0.25, 2.0}, std::pair{-0.5, 1.0}}) {
        SampledFunction F{[&](Complex t, Complex w) { return expo(n, r, t, w); }, {}};
        const Complex want = 4 * kPi * kPi * (r * r - 4 * n) * expo(n, r, tau, z);
        CHECK(std::abs(apply_heat(F, 1, tau, z) - want) <= 1e-6 * std::abs(want));
    }
    SampledFunction K{[](Complex t, Complex w) { return expo(2, 4, t, w); }, {}};
    CHECK(std::abs(apply_heat(K, 2, tau, z)) <= 1e-6 * std::abs(K.f(tau, z)));
}

TEST_CASE("heat operator converges at second order") {
    const Complex tau(0.1, 1.0), z(0.2, 0.1);
    const int m = 1;
    auto f = [](Complex t, Complex w) { return t.imag() * expo(0.75, 1, t, w); };
    const Complex exact = (4 * kPi * m + 4 * kPi * kPi * (1 - 3.0) * tau.imag()) * expo(0.75, 1, tau, z);
    const double e1 = std::abs(apply_heat({f, 0.02}, m, tau, z) - exact);
    const double e2 = std::abs(apply_heat({f, 0.01}, m, tau, z) - exact);
    CHECK(e1 / e2 >= 3);
    CHECK(e1 / e2 <= 5);
}

TEST_CASE("Casimir operator") {
    const Complex tau(0.3, 1.1), z(0.2, 0.15);
    SampledFunction hol{[](Complex t, Complex w) { return expo(1, 1, t, w); }, {}};
    SampledFunction th{[](Complex t, Complex w) { return (t + 2.0) * oracle::theta_brute(1, 1, t, w); }, {}};
    for (int w2 : {1, -1, -3}) {
        CHECK(std::abs(apply_casimir(hol, HalfInteger{w2}, 1, tau, z)) <= 1e-6);
        CHECK(std::abs(apply_casimir(th, HalfInteger{w2}, 1, tau, z)) <= 1e-6);
        HarmonicExpansion H;
        H.weight = HalfInteger{w2};
        H.minus = {{-1, 1, {1, 0}}, {-0.5, 0, {0.2, 0.3}}};
        SampledFunction F{[&](Complex t, Complex w) { return H.evaluate(t, w); }, {}};
        CHECK(std::abs(apply_casimir(F, H.weight, 1, tau, z)) <= 1e-3 * std::abs(F.f(tau, z)));
    }
    // A profile of the wrong weight is not annihilated.
    HarmonicExpansion H;
    H.weight = HalfInteger{-1};
    H.minus = {{-1, 1, {1, 0}}};
    SampledFunction F{[&](Complex t, Complex w) { return H.evaluate(t, w); }, {}};
    CHECK(std::abs(apply_casimir(F, HalfInteger{-3}, 1, tau, z)) > 1e-2 * std::abs(F.f(tau, z)));
}

TEST_CASE("xi operator") {
    const Complex tau(0.1, 1.0), z(0.2, 0.1);
    SampledFunction hol{[](Complex t, Complex w) { return (t * t + 1.0) * oracle::theta_brute(1, 0, t, w); }, {}};
    CHECK(std::abs(apply_xi(hol, HalfInteger{-3}, 1, tau, z)) < 1e-6);
    // conj(g(tau)) theta with g = tau e^{2 pi i tau / 2}: xi = -2i v^{w - 1/2} conj(g'(tau)) theta
    auto g = [](Complex t) { return t * std::exp(kPi * kI * t); };
    auto gp = [](Complex t) { return std::exp(kPi * kI * t) * (1.0 + kPi * kI * t); };
    auto f = [&](Complex t, Complex w) { return std::conj(g(t)) * oracle::theta_brute(1, 1, t, w); };
    for (int w2 : {1, -3}) {
        const HalfInteger w{w2};
        const Complex want = -2.0 * kI * std::pow(tau.imag(), w.value() - 0.5) * std::conj(gp(tau)) *
                             oracle::theta_brute(1, 1, tau, z);
        CHECK(std::abs(apply_xi({f, {}}, w, 1, tau, z) - want) < 1e-5 * std::abs(want));
        CHECK(std::abs(apply_d_minus({f, {}}, 1, tau, z) * std::pow(tau.imag(), w.value() - 2.5) - want) <
              1e-5 * std::abs(want));
    }
}

TEST_CASE("heat power kills the non-holomorphic part") {
    const Complex tau(0.1, 1.0), z(0.2, 0.1);
    HarmonicExpansion H;
    H.m = 1;
    H.plus = {{0.25, 1, {1, 0}}, {-0.75, 1, {0.5, 0.2}}, {1, 2, {0.3, 0}}};
    H.minus = {{-1, 1, {1, 0}}, {-2, 0, {0.7, 0.1}}};
    for (int k : {2, 3, 4}) {
        H.weight = HalfInteger::from_twice(5 - 2 * k);
        SampledFunction F{[&](Complex t, Complex w) { return H.evaluate(t, w); }, {}};
        const Complex want = H.heat_power_plus(k - 1, tau, z);
        CHECK(std::abs(apply_heat_power(F, 1, k - 1, tau, z) - want) <= 1e-3 * std::abs(want));
    }
    CHECK_THROWS_AS(apply_heat_power({[](Complex t, Complex) { return t; }, {}}, 1, -1, tau, z), InvalidArgument);
}
