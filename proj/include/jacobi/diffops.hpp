#pragma once

#include <array>
#include <map>
#include <optional>

#include "jacobi/theta_weil.hpp"

namespace jacobi {

/// A function on H x C evaluated by finite differences. Without an explicit
/// step, each mixed partial of total order n uses h = Im(tau) eps^{1/(n+p)}
/// for a stencil of accuracy order p, which balances truncation against
/// rounding.
struct SampledFunction {
    JacobiFunction f;
    std::optional<double> step;
};

/// Linear differential operator with constant coefficients in the real
/// coordinates tau = u + iv, z = x + iy. Keys are the derivative orders
/// (d_u, d_v, d_x, d_y).
class DiffPoly {
public:
    using Key = std::array<int, 4>;

    DiffPoly() = default;
    static DiffPoly constant(Complex c);
    static DiffPoly d_tau();
    static DiffPoly d_tau_bar();
    static DiffPoly d_z();
    static DiffPoly d_z_bar();

    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly operator*(Complex c) const;
    DiffPoly pow(int n) const;

    const std::map<Key, Complex>& terms() const { return terms_; }

    /// Applies the operator at (tau, z) with central stencils of the given
    /// accuracy order (2 or 4). Throws StencilOutOfDomain if a stencil point
    /// leaves the upper half plane.
    Complex apply(const SampledFunction& F, Complex tau, Complex z, int accuracy = 2) const;

private:
    void add(const Key& k, Complex c);
    std::map<Key, Complex> terms_;
};

/// Central finite-difference weights for the d-th derivative on the points
/// -r, ..., r (r = (d + p - 1) / 2 for accuracy p), by Fornberg's recursion.
std::vector<double> central_weights(int derivative, int accuracy);

/// H_m = 8 pi i m d_tau - d_zz.
Complex apply_heat(const SampledFunction& F, int m, Complex tau, Complex z);

/// H_m^p, expanded into a single operator before differencing.
Complex apply_heat_power(const SampledFunction& F, int m, int p, Complex tau, Complex z, int accuracy = 4);

/// C^{k,m} with k the weight of the form (all ten summands).
Complex apply_casimir(const SampledFunction& F, HalfInteger k, int m, Complex tau, Complex z, int accuracy = 6);

/// D_-^{(m)} = v(-(tau - conj tau) d_taubar - (z - conj z) d_zbar + (v / 4 pi m) d_zbar zbar).
Complex apply_d_minus(const SampledFunction& F, int m, Complex tau, Complex z);

/// xi_{k,m} = v^{k - 5/2} D_-^{(m)}.
Complex apply_xi(const SampledFunction& F, HalfInteger k, int m, Complex tau, Complex z);

}  // namespace jacobi
