#include "jacobi/period_module.hpp"

#include <cmath>

#include "json.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

PolyThetaVector::PolyThetaVector(int k, int m) : k_(k), m_(m) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (m < 1) throw InvalidArgument("index m must be positive");
    c_ = CVector::Zero(2 * m * (k - 1));
}

PolyThetaVector::PolyThetaVector(int k, int m, CVector coeffs) : PolyThetaVector(k, m) {
    if (coeffs.size() != c_.size())
        throw ShapeMismatch("expected " + std::to_string(c_.size()) + " coefficients, got " +
                            std::to_string(coeffs.size()));
    c_ = std::move(coeffs);
}

int PolyThetaVector::flat(int nu, int n) const {
    if (nu < 0 || nu >= 2 * m_ || n < 0 || n > k_ - 2) throw InvalidArgument("coefficient index out of range");
    return nu * (k_ - 1) + n;
}

Complex PolyThetaVector::component(int nu, Complex tau) const {
    Complex v{};
    for (int n = k_ - 2; n >= 0; --n) v = v * tau + at(nu, n);
    return v;
}

Complex PolyThetaVector::evaluate(Complex tau, Complex z, const PrecisionConfig& cfg) const {
    CVector f(2 * m_);
    for (int nu = 0; nu < 2 * m_; ++nu) f[nu] = component(nu, tau);
    return theta_combination(m_, f, tau, z, cfg);
}

double PolyThetaVector::sup_norm() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }

PolyThetaVector PolyThetaVector::operator+(const PolyThetaVector& o) const {
    if (!same_shape(o)) throw ShapeMismatch("cannot add vectors of different (k, m)");
    return {k_, m_, c_ + o.c_};
}

PolyThetaVector PolyThetaVector::operator-(const PolyThetaVector& o) const {
    if (!same_shape(o)) throw ShapeMismatch("cannot subtract vectors of different (k, m)");
    return {k_, m_, c_ - o.c_};
}

PolyThetaVector PolyThetaVector::operator*(Complex s) const { return {k_, m_, c_ * s}; }

std::string PolyThetaVector::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int nu = 0; nu < 2 * m_; ++nu) {
        nlohmann::json cs = nlohmann::json::array();
        for (int n = 0; n <= k_ - 2; ++n) cs.push_back({at(nu, n).real(), at(nu, n).imag()});
        rows.push_back({{"nu", nu}, {"coeffs", cs}});
    }
    return nlohmann::json{{"k", k_}, {"m", m_}, {"rows", rows}}.dump();
}

PolyThetaVector PolyThetaVector::from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        PolyThetaVector P(j.at("k").get<int>(), j.at("m").get<int>());
        const auto& rows = j.at("rows");
        if (!rows.is_array() || static_cast<int>(rows.size()) != 2 * P.m())
            throw ShapeMismatch("expected 2m rows");
        std::vector<bool> seen(2 * P.m(), false);
        for (const auto& row : rows) {
            const int nu = row.at("nu").get<int>();
            if (nu < 0 || nu >= 2 * P.m() || seen[nu]) throw ShapeMismatch("bad or repeated nu " + std::to_string(nu));
            seen[nu] = true;
            const auto& cs = row.at("coeffs");
            if (!cs.is_array() || static_cast<int>(cs.size()) != P.row_length())
                throw ShapeMismatch("row " + std::to_string(nu) + " must have k - 1 coefficients");
            for (int n = 0; n < P.row_length(); ++n)
                P.at(nu, n) = Complex(cs[n].at(0).get<double>(), cs[n].at(1).get<double>());
        }
        return P;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed polynomial vector JSON: ") + e.what());
    }
}

long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

namespace {

// Coefficients of (alpha tau + beta)^e as a vector indexed by power.
std::vector<double> linear_power(long alpha, long beta, int e) {
    std::vector<double> out(e + 1, 0.0);
    for (int j = 0; j <= e; ++j)
        out[j] = static_cast<double>(binomial(e, j)) * std::pow(static_cast<double>(alpha), j) *
                 std::pow(static_cast<double>(beta), e - j);
    return out;
}

}  // namespace

CMatrix polynomial_slash_matrix(int k, const GroupElement& g) {
    const int d = k - 1;
    CMatrix p = CMatrix::Zero(d, d);
    for (int n = 0; n <= k - 2; ++n) {
        const auto num = linear_power(g.a(), g.b(), n);
        const auto den = linear_power(g.c(), g.d(), k - 2 - n);
        for (std::size_t i = 0; i < num.size(); ++i)
            for (std::size_t j = 0; j < den.size(); ++j) p(static_cast<int>(i + j), n) += num[i] * den[j];
    }
    return p;
}

CMatrix slash_matrix(int k, int m, const Multiplier& mult, const GroupElement& g, const PrecisionConfig& cfg) {
    const CMatrix r = weil_matrix(m, dual_weight(k), mult, g, false, cfg).entries;
    const CMatrix p = polynomial_slash_matrix(k, g);
    const int d = k - 1, n = 2 * m;
    CMatrix out(n * d, n * d);
    for (int nu = 0; nu < n; ++nu)
        for (int mu = 0; mu < n; ++mu) out.block(nu * d, mu * d, d, d) = r(nu, mu) * p;
    return out;
}

PolyThetaVector slash(const PolyThetaVector& P, HalfInteger weight, const Multiplier& mult,
                      const JacobiGroupElement& j, const PrecisionConfig& cfg) {
    if (weight != dual_weight(P.k()))
        throw WeightMismatch("slash on P_{k-2,m} needs weight 5/2 - k = " + dual_weight(P.k()).str() +
                             ", got " + weight.str());
    return {P.k(), P.m(), slash_matrix(P.k(), P.m(), mult, j.gamma, cfg) * P.coeffs()};
}

namespace {

PolyThetaVector heat_with(const PolyThetaVector& P, Complex scalar) {
    PolyThetaVector out(P.k(), P.m());
    for (int nu = 0; nu < 2 * P.m(); ++nu)
        for (int n = 1; n <= P.degree_bound(); ++n) out.at(nu, n - 1) = scalar * static_cast<double>(n) * P.at(nu, n);
    return out;
}

Complex heat_scalar(int m) { return -16.0 * kPi * kPi * static_cast<double>(m) / (2.0 * kPi * kI); }

}  // namespace

PolyThetaVector heat(const PolyThetaVector& P) { return heat_with(P, heat_scalar(P.m())); }

PolyThetaVector heat_conjugated(const PolyThetaVector& P) { return heat_with(P, std::conj(heat_scalar(P.m()))); }

PolyThetaVector conjugate_c(const PolyThetaVector& P) { return {P.k(), P.m(), P.coeffs().conjugate()}; }

Complex pair(const PolyThetaVector& P, const PolyThetaVector& Q) {
    if (!P.same_shape(Q)) throw ShapeMismatch("pairing needs equal (k, m)");
    const int k = P.k();
    CompensatedSum s;
    for (int nu = 0; nu < 2 * P.m(); ++nu)
        for (int n = 0; n <= k - 2; ++n) {
            const double sign = ((k - 2 - n) % 2) ? -1.0 : 1.0;
            s += sign / static_cast<double>(binomial(k - 2, n)) * P.at(nu, n) * Q.at(nu, k - 2 - n);
        }
    return s.value();
}

}  // namespace jacobi
