#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/jacobi_analysis.hpp"

using namespace jacobi;

namespace {

oracle::RandomSeriesSpec make_spec(std::mt19937_64& rng, int k, int m, int chi = 1) {
    return oracle::random_series(rng, k, m, chi);
}

}  // namespace

TEST_CASE("series JSON round trip and validation") {
    std::mt19937_64 rng(61);
    const SkewFourierSeries F = fixtures::to_series(make_spec(rng, 4, 2, 5));
    const SkewFourierSeries G = SkewFourierSeries::from_json(F.to_json());
    CHECK(G.weight_twice == 9);
    CHECK(G.m == 2);
    CHECK(G.mult.residue() == 5);
    REQUIRE(G.terms.size() == F.terms.size());
    for (std::size_t i = 0; i < F.terms.size(); ++i) CHECK(G.terms[i].D == F.terms[i].D);

    CHECK_THROWS_AS(SkewFourierSeries::from_json("{\"weight_twice\": 8, \"index\": 1, \"chi\": 1, \"terms\": []}"),
                    InvalidArgument);
    CHECK_THROWS_AS(SkewFourierSeries::from_json(
                        "{\"weight_twice\": 5, \"index\": 1, \"chi\": 1, \"terms\": [{\"mu\": 2, \"M_num\": 1, "
                        "\"M_den\": 1, \"re\": 1, \"im\": 0}]}"),
                    InvalidArgument);
    CHECK_THROWS_AS(SkewFourierSeries::from_json(
                        "{\"weight_twice\": 5, \"index\": 1, \"chi\": 1, \"terms\": [{\"mu\": 0, \"M_num\": -1, "
                        "\"M_den\": 1, \"re\": 1, \"im\": 0}]}"),
                    InvalidArgument);
    CHECK_THROWS_AS(SkewFourierSeries::from_json("not json"), InvalidArgument);
}

TEST_CASE("partial L-values") {
    std::mt19937_64 rng(62);
    const auto spec = make_spec(rng, 3, 2);
    const SkewFourierSeries F = fixtures::to_series(spec);
    for (int nu = 0; nu < 4; ++nu) {
        const Complex s(1.5, 0.7);
        Complex want = 0;
        bool any = false;
        for (const auto& t : spec.series.terms)
            if (t.mu == nu) {
                want += t.D * std::pow(t.alpha, -s);
                any = true;
            }
        const LValue L = partial_L(F, ThetaIndex::make(2, nu), s);
        CHECK(L.empty_class == !any);
        CHECK(std::abs(L.value - want) < 1e-13 * std::max(1.0, std::abs(want)));
    }
    CHECK_THROWS_AS(partial_L(F, ThetaIndex::make(1, 0), 2.0), ShapeMismatch);
}

TEST_CASE("Eichler integrals against vertical quadrature") {
    std::mt19937_64 rng(63);
    for (int k : {2, 3, 4, 5}) {
        const auto spec = make_spec(rng, k, 1 + k % 2);
        const SkewFourierSeries F = fixtures::to_series(spec);
        const Complex tau(0.3, 0.6);
        for (int mu = 0; mu < 2 * F.m; ++mu) {
            const Complex h = oracle::eichler_vertical(spec.series, mu, tau);
            const Complex nh = oracle::eichler_vertical_nonholomorphic(spec.series, mu, tau);
            CHECK(std::abs(eichler_component(F, mu, tau) - h) < 1e-10 * std::max(1.0, std::abs(h)));
            CHECK(std::abs(eichler_nonholomorphic_component(F, mu, tau) - nh) < 1e-10 * std::max(1.0, std::abs(nh)));
        }
        const Complex z(0.1, 0.05);
        const EichlerValues E = eichler_integrals(F, tau, z);
        Complex holo = 0, nonholo = 0;
        for (int mu = 0; mu < 2 * F.m; ++mu) {
            holo += oracle::eichler_vertical(spec.series, mu, tau) * oracle::theta_brute(F.m, mu, tau, z);
            nonholo += oracle::eichler_vertical_nonholomorphic(spec.series, mu, tau) * oracle::theta_brute(F.m, mu, tau, z);
        }
        CHECK(std::abs(E.holo - holo) < 1e-9 * std::max(1.0, std::abs(holo)));
        CHECK(std::abs(E.nonholo - nonholo) < 1e-9 * std::max(1.0, std::abs(nonholo)));
    }
}

TEST_CASE("ray periods") {
    std::mt19937_64 rng(64);
    for (int k : {2, 3, 4, 6}) {
        const auto spec = make_spec(rng, k, 2);
        const SkewFourierSeries F = fixtures::to_series(spec);
        const PolyThetaVector P = ray_period_holomorphic(F);
        const PolyThetaVector Q = ray_period_nonholomorphic(F);
        for (Complex tau : {Complex(0.4, 0.2), Complex(-1.0, 2.0)})
            for (int mu = 0; mu < 4; ++mu) {
                const Complex want = oracle::ray_period_at(spec.series, mu, tau);
                CHECK(std::abs(P.component(mu, tau) - want) < 1e-9 * std::max(1.0, std::abs(want)));
            }
        CHECK((conjugate_c(P) - Q).sup_norm() < 1e-10 * std::max(1.0, P.sup_norm()));
    }
}

TEST_CASE("skew slash by translations") {
    std::mt19937_64 rng(65);
    for (int chi : {1, 5, 21}) {
        const auto spec = make_spec(rng, 3, 2, chi);
        const SkewFourierSeries F = fixtures::to_series(spec);
        for (int n : {1, -1, 3}) {
            const SkewFourierSeries FT = skew_slash(F, GroupElement::T(n));
            const Complex t(0.2, 0.9);
            for (int mu = 0; mu < 4; ++mu)
                CHECK(std::abs(FT.component(mu, t) - spec.series.h_translated(mu, t, n)) < 1e-12);
            const Complex tau(0.1, 1.2), z(0.3, -0.1);
            CHECK(std::abs(FT.evaluate(tau, z) - skew_slash_evaluate(F, GroupElement::T(n), tau, z)) < 1e-12);
        }
    }
    const SkewFourierSeries F = fixtures::to_series(make_spec(rng, 3, 1));
    CHECK_THROWS_AS(skew_slash(F, GroupElement::S()), UnsupportedElement);
    SkewFourierSeries G = F;
    G.supplied.push_back({GroupElement::S(), {{1, 3, 1, {2, 0}}}});
    const SkewFourierSeries GS = skew_slash(G, GroupElement::S());
    REQUIRE(GS.terms.size() == 1);
    CHECK(GS.terms[0].mu == 1);
    CHECK(GS.slashed_by.has_value());
}

TEST_CASE("Petersson product against the closed-form fundamental-domain integral") {
    std::mt19937_64 rng(66);
    for (int n = 0; n < 6; ++n) {
        const int k = 2 + n % 3, m = 1 + n % 2;
        const auto a = make_spec(rng, k, m), b = make_spec(rng, k, m);
        const SkewFourierSeries F = fixtures::to_series(a), G = fixtures::to_series(b);
        const Complex want = oracle::petersson_fd(a.series, b.series);
        const Complex got = petersson(F, G);
        CHECK(std::abs(got - want) <= 1e-8 * std::max(std::abs(want), 1e-6));
    }
}

TEST_CASE("Petersson product structure") {
    std::mt19937_64 rng(67);
    const SkewFourierSeries F = fixtures::to_series(make_spec(rng, 4, 1));
    const SkewFourierSeries G = fixtures::to_series(make_spec(rng, 4, 1));
    CHECK(std::abs(petersson(F, G) - std::conj(petersson(G, F))) < 1e-12);
    CHECK(petersson(F, F).real() > 0);
    CHECK(std::abs(petersson(F, F).imag()) < 1e-12);
    const SkewFourierSeries H = fixtures::to_series(make_spec(rng, 3, 1));
    CHECK_THROWS_AS(petersson(F, H), ShapeMismatch);
    const CosetTable two({GroupElement::identity(), GroupElement::S()}, {});
    CHECK_THROWS_AS(petersson(F, G, two), MissingCoset);
}

TEST_CASE("theta functions are orthogonal on the torus") {
    for (Complex tau : {Complex(0, 1), Complex(0.3, 0.8)})
        for (int m : {1, 2})
            for (int a = 0; a < 2 * m; ++a)
                for (int b = 0; b < 2 * m; ++b) {
                    const Complex got = theta_inner_product(m, a, b, tau);
                    const double want = a == b ? std::sqrt(tau.imag() / (4.0 * m)) : 0.0;
                    CHECK(std::abs(got - want) < 1e-6);
                }
}

TEST_CASE("Haberland double-ray side against nested quadrature") {
    std::mt19937_64 rng(68);
    for (int n = 0; n < 6; ++n) {
        const int k = 2 + n % 3, m = 1 + (n / 3) % 2;
        const int chi = std::array{1, 5, 9, 13, 17, 21}[n];
        const auto a = make_spec(rng, k, m, chi), b = make_spec(rng, k, m, chi);
        const Complex want = oracle::haberland_double_ray(a.series, b.series);
        const Complex got = haberland_rhs(fixtures::to_series(a), fixtures::to_series(b));
        CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("harmonic expansions") {
    HarmonicExpansion H;
    H.weight = HalfInteger::from_twice(-1);
    H.m = 1;
    H.minus = {{1, 1, {1, 0}}};
    CHECK_THROWS_AS(H.validate(), InvalidArgument);
    H.minus = {{-1, 1, {1, 0}}};
    CHECK_NOTHROW(H.validate());
    const Complex tau(0.1, 0.9), z(0.2, 0.1);
    // Gamma(3/2 - w, pi (r^2 - 4mn) v / m) e^{2 pi i (n tau + r z)} with w = -1/2
    const double g = oracle::upper_gamma(2.0, kPi * 5.0 * 0.9);
    CHECK(std::abs(H.evaluate_minus(tau, z) - g * std::exp(2.0 * kPi * kI * (-tau + z))) < 1e-14);
}
