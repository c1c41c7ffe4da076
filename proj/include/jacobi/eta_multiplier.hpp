#pragma once

#include "jacobi/modular_group.hpp"
#include "jacobi/numerics.hpp"

namespace jacobi {

/// The multiplier system chi_i of eta^i, i taken mod 24.
struct Multiplier {
    int i = 24;

    static Multiplier power(int i);
    int residue() const { return ((i % 24) + 24) % 24; }
    bool trivial() const { return residue() == 0; }

    /// Whether chi_i belongs to weight w under i = 2w (mod 4).
    bool matches_weight(HalfInteger w) const;
};

/// q^{1/24} prod (1 - q^n) via the pentagonal-number series. Throws
/// InvalidArgument for Im(tau) <= 0 and NonConvergent for Im(tau) < 1e-6.
Complex dedekind_eta(Complex tau, const PrecisionConfig& cfg = {});

/// eta^i(g tau0) / ((c tau0 + d)^{i/2} eta^i(tau0)) at the given probe point,
/// principal branch, without snapping.
Complex chi_unsnapped(const Multiplier& mult, const GroupElement& g, Complex tau0,
                      const PrecisionConfig& cfg = {});

/// chi_i(g), evaluated at a probe point and snapped to the nearest 48th root
/// of unity. Throws SnapFailure if the raw value is more than 1e-6 away.
Complex chi(const Multiplier& mult, const GroupElement& g, const PrecisionConfig& cfg = {});

/// Exponent e with chi(g) = exp(2 pi i e / 48), 0 <= e < 48.
int chi_exponent48(const Multiplier& mult, const GroupElement& g, const PrecisionConfig& cfg = {});

}  // namespace jacobi
