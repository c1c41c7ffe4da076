#pragma once

#include <random>

#include "jacobi/jacobi_analysis.hpp"
#include "oracles.hpp"

namespace fixtures {

inline jacobi::SkewFourierSeries to_series(const oracle::RandomSeriesSpec& spec) {
    jacobi::SkewFourierSeries F;
    F.weight_twice = 2 * spec.series.k + 1;
    F.m = spec.series.m;
    F.mult = jacobi::Multiplier::power(spec.series.chi);
    for (std::size_t i = 0; i < spec.M.size(); ++i)
        F.terms.push_back({spec.series.terms[i].mu, spec.M[i].first, spec.M[i].second, spec.series.terms[i].D});
    F.validate();
    return F;
}

inline jacobi::PolyThetaVector random_vector(std::mt19937_64& rng, int k, int m) {
    std::normal_distribution<double> N;
    jacobi::PolyThetaVector P(k, m);
    for (auto& c : P.coeffs()) c = {N(rng), N(rng)};
    return P;
}

/// A product of 1..max_len generators S^{+-1}, T^{+-1}.
inline jacobi::GroupElement random_element(std::mt19937_64& rng, int max_len) {
    using jacobi::GroupElement;
    std::uniform_int_distribution<int> len(1, max_len), pick(0, 3);
    GroupElement g;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (pick(rng)) {
            case 0: g = g * GroupElement::S(); break;
            case 1: g = g * GroupElement::S().inverse(); break;
            case 2: g = g * GroupElement::T(1); break;
            default: g = g * GroupElement::T(-1); break;
        }
    }
    return g;
}

/// eta^i(g tau0) / ((c tau0 + d)^{i/2} eta^i(tau0)) from the product formula.
inline std::complex<double> chi_from_product(int i, const jacobi::GroupElement& g, std::complex<double> tau0) {
    const std::complex<double> j = static_cast<double>(g.c()) * tau0 + static_cast<double>(g.d());
    const std::complex<double> gt = (static_cast<double>(g.a()) * tau0 + static_cast<double>(g.b())) / j;
    const auto ratio = oracle::eta_product(gt) / oracle::eta_product(tau0);
    // eta^i and the automorphy power taken through logarithms of the pieces
    // to stay on the principal branch of (c tau + d)^{i/2}.
    return std::pow(ratio, i) / std::exp(0.5 * i * std::log(j));
}

}  // namespace fixtures
