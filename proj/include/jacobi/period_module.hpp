#pragma once

#include <string>
#include <vector>

#include "jacobi/theta_weil.hpp"

namespace jacobi {

/// G(tau, z) = sum_a f_a(tau) theta_{m,a}(tau, z) with each f_a a polynomial
/// of degree <= k - 2. Coefficients are stored flat: A_{a,n} sits at
/// nu * (k - 1) + n, where a = nu / 2m and f_a(tau) = sum_n A_{a,n} tau^n.
class PolyThetaVector {
public:
    PolyThetaVector() : PolyThetaVector(2, 1) {}
    /// Zero vector; throws InvalidArgument for k < 2 or m < 1.
    PolyThetaVector(int k, int m);
    /// Throws ShapeMismatch unless coeffs has 2m (k - 1) entries.
    PolyThetaVector(int k, int m, CVector coeffs);

    int k() const { return k_; }
    int m() const { return m_; }
    int degree_bound() const { return k_ - 2; }
    int row_length() const { return k_ - 1; }
    int size() const { return static_cast<int>(c_.size()); }

    Complex& at(int nu, int n) { return c_[flat(nu, n)]; }
    Complex at(int nu, int n) const { return c_[flat(nu, n)]; }
    const CVector& coeffs() const { return c_; }
    CVector& coeffs() { return c_; }

    /// f_a(tau) for a = nu / 2m.
    Complex component(int nu, Complex tau) const;
    /// G(tau, z).
    Complex evaluate(Complex tau, Complex z, const PrecisionConfig& cfg = {}) const;

    double sup_norm() const;
    bool same_shape(const PolyThetaVector& o) const { return k_ == o.k_ && m_ == o.m_; }

    PolyThetaVector operator+(const PolyThetaVector& o) const;
    PolyThetaVector operator-(const PolyThetaVector& o) const;
    PolyThetaVector operator*(Complex s) const;

    /// {"k":..,"m":..,"rows":[{"nu":..,"coeffs":[[re,im],..]},..]}
    std::string to_json() const;
    static PolyThetaVector from_json(const std::string& text);

private:
    int flat(int nu, int n) const;
    int k_ = 2, m_ = 1;
    CVector c_;
};

/// The matrix of P -> P|_{w,m,chi} g on flat coefficient vectors, w = 5/2 - k:
/// the theta-component action tensored with f(tau) -> (c tau + d)^{k-2} f(g tau).
CMatrix slash_matrix(int k, int m, const Multiplier& mult, const GroupElement& g,
                     const PrecisionConfig& cfg = {});

/// Polynomial factor alone: coefficients of sum_n A_n (a tau + b)^n (c tau + d)^{k-2-n}.
CMatrix polynomial_slash_matrix(int k, const GroupElement& g);

/// P|_{w,m,chi}(gamma, X). The lattice part acts trivially on theta
/// expansions. Throws WeightMismatch unless weight = 5/2 - k.
PolyThetaVector slash(const PolyThetaVector& P, HalfInteger weight, const Multiplier& mult,
                      const JacobiGroupElement& j, const PrecisionConfig& cfg = {});

/// Weight 5/2 - k for a given k.
constexpr HalfInteger dual_weight(int k) { return HalfInteger::from_twice(5 - 2 * k); }

/// H_m on coefficients: f_a -> (-16 pi^2 m) (1 / 2 pi i) f_a'. The degree
/// bound k is kept; the top coefficient becomes zero.
PolyThetaVector heat(const PolyThetaVector& P);

/// Same as heat but with the scalar conjugated, so that
/// conjugate_c(heat(P)) = heat_conjugated(conjugate_c(P)).
PolyThetaVector heat_conjugated(const PolyThetaVector& P);

/// Coefficientwise complex conjugation (G -> G^c).
PolyThetaVector conjugate_c(const PolyThetaVector& P);

/// sum_a sum_n (-1)^{k-2-n} binom(k-2, n)^{-1} A_{a,n} B_{a,k-2-n}.
/// Throws ShapeMismatch on differing (k, m).
Complex pair(const PolyThetaVector& P, const PolyThetaVector& Q);

long binomial(int n, int r);

/// The pairing sum over any field type (used with exact rationals in tests).
/// P and Q are indexed [nu][n].
template <class Scalar>
Scalar pairing_sum(int k, const std::vector<std::vector<Scalar>>& P, const std::vector<std::vector<Scalar>>& Q) {
    Scalar total(0);
    for (std::size_t a = 0; a < P.size(); ++a)
        for (int n = 0; n <= k - 2; ++n) {
            Scalar term = P[a][n] * Q[a][k - 2 - n] / Scalar(binomial(k - 2, n));
            if ((k - 2 - n) % 2) term = -term;
            total += term;
        }
    return total;
}

}  // namespace jacobi
