#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/modular_group.hpp"

using namespace jacobi;

TEST_CASE("determinant is checked") {
    CHECK_THROWS_AS(GroupElement(1, 2, 3, 4), InvalidArgument);
    CHECK_THROWS_AS(GroupElement(13, 5, -18, -7), InvalidArgument);
    CHECK_NOTHROW(GroupElement(-13, 5, 18, -7));
}

TEST_CASE("generators") {
    const GroupElement S = GroupElement::S(), T = GroupElement::T();
    CHECK(S * S == GroupElement::minus_identity());
    CHECK((S * T) * (S * T) * (S * T) == GroupElement::minus_identity());
    CHECK(T * T.inverse() == GroupElement::identity());
    CHECK(-GroupElement::identity() == GroupElement::minus_identity());
}

TEST_CASE("word decomposition multiplies back") {
    for (const GroupElement& g : {GroupElement(1, 0, 1, 1), GroupElement(-13, 5, 18, -7), GroupElement::S(),
                                  GroupElement::T(-5), GroupElement::minus_identity(), GroupElement(2, 1, 1, 1),
                                  GroupElement(5, -2, -12, 5)}) {
        const Word w = decompose(g);
        CHECK(evaluate(w) == g);
        CHECK(evaluate({w.tokens, false}) == (w.negated ? -g : g));
    }
}

TEST_CASE("decomposition of random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const GroupElement g = fixtures::random_element(rng, 14);
        const Word& w = g.word();
        GroupElement prod;
        for (const auto& t : w.tokens) prod = prod * token_matrix(t);
        CHECK(prod == (w.negated ? -g : g));
    }
}

TEST_CASE("Moebius action is a group action") {
    std::mt19937_64 rng(12);
    const Complex tau(0.21, 0.87);
    for (int i = 0; i < 50; ++i) {
        const GroupElement g = fixtures::random_element(rng, 6), h = fixtures::random_element(rng, 6);
        const Complex lhs = (g * h).act(tau), rhs = g.act(h.act(tau));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        const Complex jl = (g * h).automorphy(tau), jr = g.automorphy(h.act(tau)) * h.automorphy(tau);
        CHECK(std::abs(jl - jr) <= 1e-12 * std::max(1.0, std::abs(jl)));
    }
    CHECK_THROWS_AS(GroupElement(1, 0, 2, 1).automorphy(Complex(-0.5, 0)), DegeneratePoint);
}

TEST_CASE("Jacobi group product and action") {
    const JacobiGroupElement j1{GroupElement(2, 1, 1, 1), 1, -2}, j2{GroupElement::S(), 3, 1};
    const HZPoint p{{0.1, 1.3}, {0.4, -0.2}};
    const HZPoint lhs = act(j1 * j2, p), rhs = act(j1, act(j2, p));
    CHECK(std::abs(lhs.tau - rhs.tau) < 1e-13);
    CHECK(std::abs(lhs.z - rhs.z) < 1e-13);
    CHECK_THROWS_AS(act(j1, {{0.1, -1.0}, {0, 0}}), InvalidArgument);
}

TEST_CASE("coset tables") {
    const CosetTable trivial;
    CHECK(trivial.index() == 1);
    auto gamma0_2 = [](const GroupElement& g) { return g.c() % 2 == 0; };
    const CosetTable t({GroupElement::identity(), GroupElement::S(), GroupElement::S() * GroupElement::T()}, gamma0_2);
    CHECK(t.index() == 3);
    CHECK(CosetTable::from_json(t.to_json()) == t);
    CHECK_THROWS_AS(CosetTable({GroupElement::identity(), GroupElement::T()}, gamma0_2), InvalidArgument);
    CHECK_THROWS_AS(CosetTable::from_json("[[1,2,3]]"), InvalidArgument);
    CHECK_THROWS_AS(CosetTable::from_json("[[1,2,3,4]]"), InvalidArgument);
}
