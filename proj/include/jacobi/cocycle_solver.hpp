#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jacobi/period_module.hpp"

namespace jacobi {

struct WSpaceBasis {
    int k = 2;
    int m = 1;
    Multiplier mult;
    std::vector<PolyThetaVector> basis;
    /// max(|P|(1+S)|, |P|(1+U+U^2)|) per basis element, recomputed from
    /// slash matrices built independently of the solver's.
    std::vector<double> residuals;
    /// Singular values of the stacked relation matrix, descending.
    std::vector<double> singular_values;

    int dim() const { return static_cast<int>(basis.size()); }
    double smallest_singular_value() const { return singular_values.empty() ? 0.0 : singular_values.back(); }
};

/// Nullspace of the stacked relations (1 + S) and (1 + U + U^2), U = TS, on
/// P_{k-2,m} at weight 5/2 - k. Singular values below 1e-8 span the
/// nullspace; RankAmbiguous is thrown if one falls in [1e-9, 1e-7]. Each
/// basis vector is scaled so that the designated coefficient (nu = 2m - 1,
/// constant term, then moving backwards) equals 1, with the other basis
/// vectors cleared at that position.
/// Throws InadmissibleMultiplier for even i (no half-integral weight).
WSpaceBasis solve_w_space(int k, int m, const Multiplier& mult, const PrecisionConfig& cfg = {});

/// max(|P|(1+S)|_inf, |P|(1+U+U^2)|_inf).
double relation_residual(const PolyThetaVector& P, const Multiplier& mult, const PrecisionConfig& cfg = {});

/// Coefficients in table order: for nu = 0, 1, ..., 2m-1 the coefficients
/// A_{nu,k-2}, ..., A_{nu,0}. For m = 1 this is (a_{k-2},...,a_0,b_{k-2},...,b_0).
std::vector<Complex> table_row(const PolyThetaVector& P);

/// Maps an element A gamma^-1 to the index of its coset representative.
using CosetResolver = std::function<std::size_t(const GroupElement&)>;

/// An element of the induced module: one value per coset representative.
struct CosetFunction {
    CosetTable table;
    std::vector<PolyThetaVector> values;

    /// Throws ShapeMismatch if the value count differs from the index or the
    /// values disagree in (k, m).
    CosetFunction(CosetTable table, std::vector<PolyThetaVector> values);
    /// Single-coset function for the full modular group.
    static CosetFunction constant(const PolyThetaVector& P);

    int k() const { return values.front().k(); }
    int m() const { return values.front().m(); }
};

/// (P || gamma)(A) = P(A gamma^-1) | gamma. A resolver is required for
/// tables with more than one coset; MissingCoset otherwise.
CosetFunction induced_slash(const CosetFunction& P, const Multiplier& mult, const JacobiGroupElement& j,
                            const CosetResolver& resolve = {}, const PrecisionConfig& cfg = {});

CosetFunction operator-(const CosetFunction& a, const CosetFunction& b);

/// (1 / index) sum_A pair(P(A), Q(A)). Throws TableMismatch.
Complex induced_pair(const CosetFunction& P, const CosetFunction& Q);

/// << P || ((T^-1, 0) - (T, 0)), Q^c >>.
Complex mock_pairing(const CosetFunction& P, const CosetFunction& Q, const Multiplier& mult,
                     const CosetResolver& resolve = {}, const PrecisionConfig& cfg = {});

/// -6 sqrt(4m) (2i)^{k-1} index.
Complex haberland_constant(int k, int m, std::size_t index = 1);

}  // namespace jacobi
