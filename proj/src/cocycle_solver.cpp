#include "jacobi/cocycle_solver.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "jacobi/errors.hpp"

namespace jacobi {

namespace {

constexpr double kNullThreshold = 1e-8;
constexpr double kAmbiguousLow = 1e-9;
constexpr double kAmbiguousHigh = 1e-7;

GroupElement u_element() { return GroupElement::T() * GroupElement::S(); }

// Indices in the order the tables read them backwards: last row first,
// constant term first.
std::vector<int> normalization_order(int k, int m) {
    std::vector<int> order;
    for (int nu = 2 * m - 1; nu >= 0; --nu)
        for (int n = 0; n <= k - 2; ++n) order.push_back(nu * (k - 1) + n);
    return order;
}

// Column-reduce N so that each column has a 1 at its own pivot and zeros at
// the other columns' pivots.
CMatrix normalize_basis(CMatrix N, const std::vector<int>& order) {
    const int r = static_cast<int>(N.cols());
    std::vector<bool> used(N.rows(), false);
    for (int s = 0; s < r; ++s) {
        int pivot_row = -1, pivot_col = -1;
        for (int idx : order) {
            if (used[idx]) continue;
            double best = 1e-6;
            for (int c = s; c < r; ++c)
                if (std::abs(N(idx, c)) > best) {
                    best = std::abs(N(idx, c));
                    pivot_col = c;
                }
            if (pivot_col >= 0) {
                pivot_row = idx;
                break;
            }
        }
        if (pivot_row < 0) throw NumericalError("nullspace basis is numerically degenerate");
        used[pivot_row] = true;
        N.col(s).swap(N.col(pivot_col));
        N.col(s) /= N(pivot_row, s);
        for (int c = 0; c < r; ++c)
            if (c != s) N.col(c) -= N(pivot_row, c) * N.col(s);
    }
    return N;
}

}  // namespace

double relation_residual(const PolyThetaVector& P, const Multiplier& mult, const PrecisionConfig& cfg) {
    const HalfInteger w = dual_weight(P.k());
    const GroupElement U = u_element();
    const PolyThetaVector s_rel = P + slash(P, w, mult, {GroupElement::S(), 0, 0}, cfg);
    const PolyThetaVector u_rel =
        P + slash(P, w, mult, {U, 0, 0}, cfg) + slash(P, w, mult, {U * U, 0, 0}, cfg);
    return std::max(s_rel.sup_norm(), u_rel.sup_norm());
}

WSpaceBasis solve_w_space(int k, int m, const Multiplier& mult, const PrecisionConfig& cfg) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (m < 1) throw InvalidArgument("index m must be positive");
    if (mult.residue() % 2 == 0)
        throw InadmissibleMultiplier("chi_" + std::to_string(mult.residue()) +
                                     " has integral weight; W needs half-integral weight 5/2 - k");

    const CMatrix MS = slash_matrix(k, m, mult, GroupElement::S(), cfg);
    const CMatrix MT = slash_matrix(k, m, mult, GroupElement::T(), cfg);
    const CMatrix MU = MS * MT;  // slash by TS is slash by T, then by S
    const int D = static_cast<int>(MS.rows());
    const CMatrix I = CMatrix::Identity(D, D);

    CMatrix A(2 * D, D);
    A.topRows(D) = I + MS;
    A.bottomRows(D) = I + MU + MU * MU;

    Eigen::JacobiSVD<CMatrix> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();

    WSpaceBasis out;
    out.k = k;
    out.m = m;
    out.mult = mult;
    std::vector<int> null_cols;
    for (int i = 0; i < sv.size(); ++i) {
        out.singular_values.push_back(sv[i]);
        if (sv[i] >= kAmbiguousLow && sv[i] <= kAmbiguousHigh)
            throw RankAmbiguous("singular value " + std::to_string(sv[i]) + " is too close to the threshold");
        if (sv[i] < kNullThreshold) null_cols.push_back(i);
    }
    if (null_cols.empty()) return out;

    CMatrix N(D, static_cast<int>(null_cols.size()));
    for (std::size_t c = 0; c < null_cols.size(); ++c) N.col(static_cast<int>(c)) = svd.matrixV().col(null_cols[c]);
    N = normalize_basis(N, normalization_order(k, m));

    for (int c = 0; c < N.cols(); ++c) {
        PolyThetaVector P(k, m, N.col(c));
        out.residuals.push_back(relation_residual(P, mult, cfg));
        out.basis.push_back(std::move(P));
    }
    return out;
}

std::vector<Complex> table_row(const PolyThetaVector& P) {
    std::vector<Complex> row;
    for (int nu = 0; nu < 2 * P.m(); ++nu)
        for (int n = P.degree_bound(); n >= 0; --n) row.push_back(P.at(nu, n));
    return row;
}

CosetFunction::CosetFunction(CosetTable t, std::vector<PolyThetaVector> v)
    : table(std::move(t)), values(std::move(v)) {
    if (values.size() != table.index())
        throw ShapeMismatch("one value per coset representative is required");
    for (const auto& P : values)
        if (!P.same_shape(values.front())) throw ShapeMismatch("coset values must share (k, m)");
}

CosetFunction CosetFunction::constant(const PolyThetaVector& P) { return CosetFunction(CosetTable(), {P}); }

CosetFunction induced_slash(const CosetFunction& P, const Multiplier& mult, const JacobiGroupElement& j,
                            const CosetResolver& resolve, const PrecisionConfig& cfg) {
    const std::size_t n = P.table.index();
    if (n > 1 && !resolve) throw MissingCoset("a coset resolver is needed for tables of index > 1");
    const CMatrix M = slash_matrix(P.k(), P.m(), mult, j.gamma, cfg);
    const GroupElement g_inv = j.gamma.inverse();
    std::vector<PolyThetaVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = 0;
        if (n > 1) {
            src = resolve(P.table.representatives()[i] * g_inv);
            if (src >= n) throw MissingCoset("resolver returned an index outside the table");
        }
        const PolyThetaVector& v = P.values[src];
        out.emplace_back(v.k(), v.m(), M * v.coeffs());
    }
    return CosetFunction(P.table, std::move(out));
}

CosetFunction operator-(const CosetFunction& a, const CosetFunction& b) {
    if (!(a.table == b.table)) throw TableMismatch("coset tables differ");
    std::vector<PolyThetaVector> out;
    for (std::size_t i = 0; i < a.values.size(); ++i) out.push_back(a.values[i] - b.values[i]);
    return CosetFunction(a.table, std::move(out));
}

Complex induced_pair(const CosetFunction& P, const CosetFunction& Q) {
    if (!(P.table == Q.table)) throw TableMismatch("coset tables differ");
    CompensatedSum s;
    for (std::size_t i = 0; i < P.values.size(); ++i) s += pair(P.values[i], Q.values[i]);
    return s.value() / static_cast<double>(P.table.index());
}

Complex mock_pairing(const CosetFunction& P, const CosetFunction& Q, const Multiplier& mult,
                     const CosetResolver& resolve, const PrecisionConfig& cfg) {
    const CosetFunction diff = induced_slash(P, mult, {GroupElement::T(-1), 0, 0}, resolve, cfg) -
                               induced_slash(P, mult, {GroupElement::T(1), 0, 0}, resolve, cfg);
    std::vector<PolyThetaVector> conj;
    for (const auto& v : Q.values) conj.push_back(conjugate_c(v));
    return induced_pair(diff, CosetFunction(Q.table, std::move(conj)));
}

Complex haberland_constant(int k, int m, std::size_t index) {
    Complex p{1, 0};
    for (int e = 0; e < k - 1; ++e) p *= Complex(0, 2);
    return -6.0 * std::sqrt(4.0 * m) * p * static_cast<double>(index);
}

}  // namespace jacobi
