#include "jacobi/jacobi_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Complex ipow(int e) {
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[((e % 4) + 4) % 4];
}

double alpha_of(const SkewTerm& t, int m) { return t.M() / (4.0 * m); }

std::vector<SkewTerm> terms_from_json(const nlohmann::json& arr) {
    std::vector<SkewTerm> out;
    for (const auto& t : arr) {
        SkewTerm s;
        s.mu = t.at("mu").get<int>();
        s.M_num = t.at("M_num").get<long>();
        s.M_den = t.contains("M_den") ? t.at("M_den").get<long>() : 1;
        s.D = Complex(t.at("re").get<double>(), t.contains("im") ? t.at("im").get<double>() : 0.0);
        out.push_back(s);
    }
    return out;
}

nlohmann::json terms_to_json(const std::vector<SkewTerm>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms)
        arr.push_back({{"mu", t.mu}, {"M_num", t.M_num}, {"M_den", t.M_den}, {"re", t.D.real()}, {"im", t.D.imag()}});
    return arr;
}

void validate_terms(const std::vector<SkewTerm>& terms, int m) {
    for (const auto& t : terms) {
        if (t.mu < 0 || t.mu >= 2 * m) throw InvalidArgument("term class mu must lie in [0, 2m)");
        if (t.M_den == 0) throw InvalidArgument("term has zero denominator");
        if (!(t.M() > 0)) throw InvalidArgument("cusp form terms need M > 0");
        if (!std::isfinite(t.D.real()) || !std::isfinite(t.D.imag()))
            throw InvalidArgument("term coefficient must be finite");
    }
}

}  // namespace

void SkewFourierSeries::validate() const {
    if (weight_twice % 2 == 0 || weight_twice < 5)
        throw InvalidArgument("weight must be k + 1/2 with k >= 2 (weight_twice odd, >= 5)");
    if (m < 1) throw InvalidArgument("index must be positive");
    validate_terms(terms, m);
    for (const auto& s : supplied) validate_terms(s.second, m);
}

Complex SkewFourierSeries::component(int mu, Complex t) const {
    CompensatedSum s;
    for (const auto& term : terms)
        if (term.mu == mu) s += term.D * std::exp(2.0 * kPi * kI * alpha_of(term, m) * t);
    return s.value();
}

Complex SkewFourierSeries::evaluate(Complex tau, Complex z, const PrecisionConfig& cfg) const {
    CVector f(2 * m);
    for (int mu = 0; mu < 2 * m; ++mu) f[mu] = std::conj(component(mu, tau));
    return theta_combination(m, f, tau, z, cfg);
}

SkewFourierSeries SkewFourierSeries::from_json(const std::string& text) {
    SkewFourierSeries F;
    try {
        const auto j = nlohmann::json::parse(text);
        F.weight_twice = j.at("weight_twice").get<int>();
        F.m = j.at("index").get<int>();
        F.mult = Multiplier::power(j.at("chi").get<int>());
        F.terms = terms_from_json(j.at("terms"));
        if (j.contains("supplied"))
            for (const auto& s : j.at("supplied")) {
                const auto& a = s.at("A");
                if (!a.is_array() || a.size() != 4) throw InvalidArgument("supplied element must be [a, b, c, d]");
                F.supplied.emplace_back(GroupElement(a[0].get<long>(), a[1].get<long>(), a[2].get<long>(), a[3].get<long>()),
                                        terms_from_json(s.at("terms")));
            }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed coefficient file: ") + e.what());
    }
    F.validate();
    return F;
}

std::string SkewFourierSeries::to_json() const {
    nlohmann::json j{{"weight_twice", weight_twice}, {"index", m}, {"chi", mult.residue()}, {"terms", terms_to_json(terms)}};
    if (!supplied.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [A, t] : supplied)
            arr.push_back({{"A", {A.a(), A.b(), A.c(), A.d()}}, {"terms", terms_to_json(t)}});
        j["supplied"] = arr;
    }
    return j.dump();
}

LValue partial_L(const SkewFourierSeries& F, const ThetaIndex& a, Complex s) {
    if (a.m != F.m) throw ShapeMismatch("theta index and series have different m");
    LValue out;
    out.empty_class = true;
    CompensatedSum sum;
    for (const auto& t : F.terms) {
        if (t.mu != a.nu) continue;
        out.empty_class = false;
        sum += t.D * std::exp(-s * std::log(alpha_of(t, F.m)));
    }
    out.value = sum.value();
    return out;
}

Complex eichler_component(const SkewFourierSeries& F, int mu, Complex tau) {
    const int k = F.k();
    const Complex pre = ipow(k - 1) * factorial(k - 2);
    CompensatedSum s;
    for (const auto& t : F.terms) {
        if (t.mu != mu) continue;
        const double al = alpha_of(t, F.m);
        s += t.D * std::exp(2.0 * kPi * kI * al * tau) * pre / std::pow(2 * kPi * al, k - 1);
    }
    return s.value();
}

Complex eichler_nonholomorphic_component(const SkewFourierSeries& F, int mu, Complex tau) {
    const int k = F.k();
    const Complex pre = ipow(-(k - 1));
    const double v = tau.imag();
    CompensatedSum s;
    for (const auto& t : F.terms) {
        if (t.mu != mu) continue;
        const double al = alpha_of(t, F.m);
        const double g = incomplete_gamma(HalfInteger::integer(k - 1), 4 * kPi * al * v);
        s += std::conj(t.D) * pre * std::pow(2 * kPi * al, 1 - k) * g * std::exp(-2.0 * kPi * kI * al * tau);
    }
    return s.value();
}

EichlerValues eichler_integrals(const SkewFourierSeries& F, Complex tau, Complex z, const PrecisionConfig& cfg) {
    if (!(tau.imag() > 0)) throw InvalidArgument("tau must lie in the upper half plane");
    CVector holo(2 * F.m), nonholo(2 * F.m);
    for (int mu = 0; mu < 2 * F.m; ++mu) {
        holo[mu] = eichler_component(F, mu, tau);
        nonholo[mu] = eichler_nonholomorphic_component(F, mu, tau);
    }
    return {theta_combination(F.m, holo, tau, z, cfg), theta_combination(F.m, nonholo, tau, z, cfg)};
}

namespace {

// Fills the polynomial int_0^{i inf} h(t) (t - tau)^{k-2} dt = sum_j binom(k-2, j) (-tau)^j m_{k-2-j}
// from the moments m_n = int_0^{i inf} h(t) t^n dt.
PolyThetaVector period_from_moments(int k, int m, const std::vector<std::vector<Complex>>& moments, bool conjugate) {
    PolyThetaVector P(k, m);
    for (int mu = 0; mu < 2 * m; ++mu)
        for (int j = 0; j <= k - 2; ++j) {
            Complex mom = moments[mu][k - 2 - j];
            if (conjugate) mom = std::conj(mom);
            const double sign = (j % 2) ? -1.0 : 1.0;
            P.at(mu, j) = sign * static_cast<double>(binomial(k - 2, j)) * mom;
        }
    return P;
}

}  // namespace

PolyThetaVector ray_period_holomorphic(const SkewFourierSeries& F) {
    const int k = F.k();
    std::vector<std::vector<Complex>> moments(2 * F.m, std::vector<Complex>(k - 1));
    for (int mu = 0; mu < 2 * F.m; ++mu)
        for (int n = 0; n <= k - 2; ++n) {
            const LValue L = partial_L(F, ThetaIndex::make(F.m, mu), Complex(n + 1, 0));
            moments[mu][n] = ipow(n + 1) * factorial(n) / std::pow(2 * kPi, n + 1) * L.value;
        }
    return period_from_moments(k, F.m, moments, false);
}

PolyThetaVector ray_period_nonholomorphic(const SkewFourierSeries& F, const PrecisionConfig&) {
    const int k = F.k();
    std::vector<std::vector<Complex>> moments(2 * F.m, std::vector<Complex>(k - 1));
    for (int n = 0; n <= k - 2; ++n)
        for (const auto& t : F.terms) {
            const double al = alpha_of(t, F.m);
            // t = i y along the imaginary axis, dt = i dy
            auto integrand = [&](double y) -> Complex {
                return std::exp(-2 * kPi * al * y) * std::pow(y, n) * ipow(n + 1);
            };
            moments[t.mu][n] += t.D * integrate_to_infinity(integrand, 0.0, 1e-14);
        }
    return period_from_moments(k, F.m, moments, true);
}

SkewFourierSeries skew_slash(const SkewFourierSeries& F, const GroupElement& A, const PrecisionConfig& cfg) {
    SkewFourierSeries out = F;
    out.supplied.clear();
    out.slashed_by = F.slashed_by ? (*F.slashed_by * A) : A;
    if (A.c() == 0 && A.a() == 1) {
        const long n = A.b();
        const Complex chi_n = chi(F.mult, A, cfg);
        for (auto& t : out.terms) {
            // e^{2 pi i n (M - mu^2) / 4m}, M = M_num / M_den
            const double frac = static_cast<double>(n) * (t.M() - static_cast<double>(t.mu) * t.mu) / (4.0 * F.m);
            const double reduced = frac - std::floor(frac);
            t.D *= chi_n * std::exp(2.0 * kPi * kI * reduced);
        }
        return out;
    }
    for (const auto& [g, terms] : F.supplied)
        if (g == A) {
            out.terms = terms;
            return out;
        }
    throw UnsupportedElement("no expansion supplied for the slash by " + A.str());
}

Complex skew_slash_evaluate(const SkewFourierSeries& F, const GroupElement& A, Complex tau, Complex z,
                            const PrecisionConfig& cfg) {
    const Complex j = A.automorphy(tau);
    const double k = F.k();
    const Complex factor = principal_power(std::conj(j), 0.5 - k) / std::abs(j) / chi(F.mult, A, cfg) *
                           std::exp(-2.0 * kPi * kI * static_cast<double>(F.m * A.c()) * z * z / j);
    return factor * F.evaluate(A.act(tau), z / j, cfg);
}

namespace {

SkewFourierSeries coset_expansion(const SkewFourierSeries& F, const GroupElement& A, const PrecisionConfig& cfg) {
    if (A == GroupElement::identity()) return F;
    try {
        return skew_slash(F, A, cfg);
    } catch (const UnsupportedElement&) {
        throw MissingCoset("no expansion of the form at coset " + A.str());
    }
}

double min_alpha(const SkewFourierSeries& F) {
    double a = INFINITY;
    for (const auto& t : F.terms) a = std::min(a, alpha_of(t, F.m));
    return a;
}

// int over the standard fundamental domain of sum_a conj(hF_a) hG_a v^{k-2}.
Complex fundamental_domain_integral(const SkewFourierSeries& F, const SkewFourierSeries& G, int u_points,
                                    int v_order, const PrecisionConfig& cfg) {
    const int k = F.k();
    const double rate = 2 * kPi * (min_alpha(F) + min_alpha(G));
    double v_max = 1.0;
    while (std::exp(-rate * (v_max - 1.0)) * std::pow(v_max, k - 2) > cfg.trunc_eps) v_max += 1.0 / rate;

    const QuadratureRule ur = gauss_legendre(u_points, -0.5, 0.5);
    const QuadratureRule base = gauss_legendre(v_order);
    CompensatedSum total;
    for (int iu = 0; iu < u_points; ++iu) {
        const double u = ur.nodes[iu];
        const double v0 = std::sqrt(1.0 - u * u);
        const int panels = std::max(1, static_cast<int>(std::ceil((v_max - v0) * rate / 2.0)));
        const double width = (v_max - v0) / panels;
        CompensatedSum line;
        for (int p = 0; p < panels; ++p) {
            const double lo = v0 + p * width;
            for (int iv = 0; iv < v_order; ++iv) {
                const double v = lo + 0.5 * width * (base.nodes[iv] + 1.0);
                const double wv = 0.5 * width * base.weights[iv];
                const Complex tau(u, v);
                Complex s{};
                for (int mu = 0; mu < 2 * F.m; ++mu) s += std::conj(F.component(mu, tau)) * G.component(mu, tau);
                line += wv * std::pow(v, k - 2) * s;
            }
        }
        total += ur.weights[iu] * line.value();
    }
    return total.value();
}

}  // namespace

Complex petersson(const SkewFourierSeries& F, const SkewFourierSeries& G, const CosetTable& table,
                  const PrecisionConfig& cfg) {
    F.validate();
    G.validate();
    if (F.weight_twice != G.weight_twice || F.m != G.m || F.mult.residue() != G.mult.residue())
        throw ShapeMismatch("Petersson product needs equal weight, index and multiplier");
    if (F.terms.empty() || G.terms.empty()) return {};
    auto run = [&](int u_points, int v_order) {
        CompensatedSum s;
        for (const auto& A : table.representatives())
            s += fundamental_domain_integral(coset_expansion(F, A, cfg), coset_expansion(G, A, cfg), u_points,
                                             v_order, cfg);
        return s.value() / (std::sqrt(4.0 * F.m) * static_cast<double>(table.index()));
    };
    const int v_order = std::max(8, cfg.quad_points / 20);
    const Complex coarse = run(cfg.quad_points, v_order);
    const Complex fine = run(2 * cfg.quad_points, 2 * v_order);
    if (std::abs(fine - coarse) > 1e-4 * std::max(std::abs(fine), 1e-300))
        throw QuadratureNotConverged("Petersson quadrature moved by more than 1e-4 on refinement");
    return fine;
}

Complex theta_inner_product(int m, int nu_a, int nu_b, Complex tau, const PrecisionConfig& cfg) {
    if (!(tau.imag() > 0)) throw InvalidArgument("tau must lie in the upper half plane");
    const ThetaIndex a = ThetaIndex::make(m, nu_a), b = ThetaIndex::make(m, nu_b);
    const double v = tau.imag();
    const int n = cfg.quad_points;
    // z = s + t tau over the unit square; dx dy = v ds dt; the integrand is
    // periodic so the trapezoid rule converges geometrically.
    CompensatedSum total;
    for (int it = 0; it < n; ++it) {
        const double t = static_cast<double>(it) / n;
        const double y = t * v;
        const double gauss = std::exp(-4 * kPi * m * y * y / v);
        CompensatedSum row;
        for (int is = 0; is < n; ++is) {
            const Complex z = static_cast<double>(is) / n + t * tau;
            row += theta_eval(a, tau, z, cfg) * std::conj(theta_eval(b, tau, z, cfg));
        }
        total += gauss * row.value();
    }
    return total.value() * v / (static_cast<double>(n) * n);
}

Complex haberland_rhs(const SkewFourierSeries& F, const SkewFourierSeries& G, const CosetTable& table,
                      const PrecisionConfig& cfg) {
    F.validate();
    G.validate();
    if (F.weight_twice != G.weight_twice || F.m != G.m)
        throw ShapeMismatch("both series need the same weight and index");
    const int k = F.k();
    CompensatedSum total;
    for (const auto& A : table.representatives()) {
        const SkewFourierSeries FA = coset_expansion(F, A, cfg);
        const SkewFourierSeries GA = coset_expansion(G, A, cfg);
        const SkewFourierSeries FT = skew_slash(FA, GroupElement::T(1), cfg);
        const SkewFourierSeries FTi = skew_slash(FA, GroupElement::T(-1), cfg);
        for (int mu = 0; mu < 2 * F.m; ++mu) {
            const ThetaIndex a = ThetaIndex::make(F.m, mu);
            for (int p = 0; p <= k - 2; ++p)
                for (int q = 0; p + q <= k - 2; ++q) {
                    const Complex LG = partial_L(GA, a, Complex(q + 1, 0)).value;
                    if (LG == Complex{}) continue;
                    const Complex LT = std::conj(partial_L(FT, a, Complex(p + 1, 0)).value);
                    const Complex LTi = std::conj(partial_L(FTi, a, Complex(p + 1, 0)).value);
                    const double comb = factorial(k - 2) / factorial(k - 2 - p - q);
                    const Complex c = comb * ipow(p + q + 2) / std::pow(2 * kPi, p + q + 2);
                    const double sign = ((k - 1 - q + p) % 2 == 0) ? 1.0 : -1.0;
                    total += c * LG * (sign * LT + LTi);
                }
        }
    }
    return total.value();
}

void HarmonicExpansion::validate() const {
    if (m < 1) throw InvalidArgument("index must be positive");
    for (const auto& t : minus)
        if (!(static_cast<double>(t.r * t.r) - 4.0 * m * t.n > 0))
            throw InvalidArgument("non-holomorphic terms need r^2 - 4mn > 0");
}

Complex HarmonicExpansion::evaluate_plus(Complex tau, Complex z) const {
    CompensatedSum s;
    for (const auto& t : plus) s += t.coeff * std::exp(2.0 * kPi * kI * (t.n * tau + static_cast<double>(t.r) * z));
    return s.value();
}

Complex HarmonicExpansion::evaluate_minus(Complex tau, Complex z) const {
    const HalfInteger order = HalfInteger::from_twice(3 - weight.twice);
    CompensatedSum s;
    for (const auto& t : minus) {
        const double disc = static_cast<double>(t.r * t.r) - 4.0 * m * t.n;
        const double g = incomplete_gamma(order, kPi * disc * tau.imag() / m);
        s += t.coeff * g * std::exp(2.0 * kPi * kI * (t.n * tau + static_cast<double>(t.r) * z));
    }
    return s.value();
}

Complex HarmonicExpansion::heat_power_plus(int p, Complex tau, Complex z) const {
    CompensatedSum s;
    for (const auto& t : plus) {
        const double disc = static_cast<double>(t.r * t.r) - 4.0 * m * t.n;
        s += t.coeff * std::pow(4 * kPi * kPi * disc, p) *
             std::exp(2.0 * kPi * kI * (t.n * tau + static_cast<double>(t.r) * z));
    }
    return s.value();
}

}  // namespace jacobi
