#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "jacobi/eta_multiplier.hpp"
#include "jacobi/modular_group.hpp"
#include "jacobi/numerics.hpp"

namespace jacobi {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// a = nu / 2m in (2m)^-1 Z / Z.
struct ThetaIndex {
    int m = 1;
    int nu = 0;

    /// Reduces nu mod 2m; throws InvalidArgument for m < 1.
    static ThetaIndex make(int m, int nu);
    double a() const { return static_cast<double>(nu) / (2.0 * m); }
    ThetaIndex negated() const { return make(m, -nu); }
};

/// sum over lambda of e^{2 pi i m ((lambda+a)^2 tau + 2 (lambda+a) z)}.
Complex theta_eval(const ThetaIndex& idx, Complex tau, Complex z, const PrecisionConfig& cfg = {});

/// Sum_a f_a theta_{m,a}(tau, z) for a coefficient vector indexed by nu.
Complex theta_combination(int m, const CVector& f, Complex tau, Complex z,
                          const PrecisionConfig& cfg = {});

/// The matrix R with
///   (F |_{w,m,chi} g)(tau, z) = sum_a [(c tau + d)^{1/2 - w} R f(g tau)]_a theta_{m,a}(tau, z)
/// for F = sum_a f_a theta_{m,a}. R does not depend on w; g -> R_g reverses
/// products (R_{g h} = R_h R_g).
struct ActionMatrix {
    CMatrix entries;
    HalfInteger weight;
    Multiplier mult;
    GroupElement g;
};

/// Matrices of the generators; S^-1 and -I included.
CMatrix theta_token_matrix(int m, const Multiplier& mult, const Token& t, const PrecisionConfig& cfg = {});
CMatrix theta_minus_identity(int m, const Multiplier& mult, const PrecisionConfig& cfg = {});

/// Composes generator matrices along g's word. With verify set, the result
/// is checked against the direct slash at three seeded sample points and
/// VerificationFailure is thrown above 1e-8 relative error.
ActionMatrix weil_matrix(int m, HalfInteger weight, const Multiplier& mult, const GroupElement& g,
                         bool verify = true, const PrecisionConfig& cfg = {});

using JacobiFunction = std::function<Complex(Complex tau, Complex z)>;

/// (F |_{w,m,chi} gamma |_m X)(tau, z) straight from the definition:
/// (c tau + d)^{-w} chi(gamma)^{-1} e^{-2 pi i m c z^2 / (c tau + d)} F(gamma tau, z / (c tau + d)),
/// followed by e^{2 pi i m (lambda^2 tau + 2 lambda z)} F(tau, z + lambda tau + mu).
Complex slash_evaluate(const JacobiFunction& F, HalfInteger weight, int m, const Multiplier& mult,
                       const JacobiGroupElement& j, Complex tau, Complex z,
                       const PrecisionConfig& cfg = {});

struct KappaResult {
    std::vector<double> kappa;  // indexed by nu, each in [0, 1)
    std::vector<int> parabolic;  // nu with kappa = 0
};

/// Diagonal phases chi(Q) e^{-2 pi i lambda m a^2} = e^{2 pi i kappa_a} for
/// Q = T^lambda. Throws NotParabolic unless Q is upper triangular with a = 1.
KappaResult kappa_exponents(int m, const Multiplier& mult, const GroupElement& Q,
                            const PrecisionConfig& cfg = {});

}  // namespace jacobi
