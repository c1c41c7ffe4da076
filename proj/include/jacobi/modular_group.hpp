#pragma once

#include <array>
#include <optional>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/numerics.hpp"

namespace jacobi {

struct Token {
    enum class Kind { S, SInv, T };
    Kind kind = Kind::T;
    long power = 1;  // exponent for T tokens, ignored otherwise

    static Token s() { return {Kind::S, 1}; }
    static Token s_inv() { return {Kind::SInv, 1}; }
    static Token t(long n) { return {Kind::T, n}; }

    bool operator==(const Token&) const = default;
    std::string str() const;
};

/// A word in S, S^-1, T^n together with the sign it differs from the target
/// matrix by: product(tokens) = (negated ? -1 : 1) * g.
struct Word {
    std::vector<Token> tokens;
    bool negated = false;

    std::string str() const;
};

class GroupElement {
public:
    GroupElement() = default;
    /// Throws InvalidArgument unless ad - bc = 1.
    GroupElement(long a, long b, long c, long d);

    static GroupElement identity() { return {}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
    static GroupElement T(long n = 1) { return {1, n, 0, 1}; }
    static GroupElement minus_identity() { return {-1, 0, 0, -1}; }

    long a() const { return m_[0]; }
    long b() const { return m_[1]; }
    long c() const { return m_[2]; }
    long d() const { return m_[3]; }
    std::array<long, 4> entries() const { return m_; }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement operator-() const;
    bool operator==(const GroupElement& o) const { return m_ == o.m_; }

    /// Cached decomposition into S, T tokens.
    const Word& word() const;

    /// Moebius action on the upper half plane.
    Complex act(Complex tau) const;
    /// c tau + d; throws DegeneratePoint if it vanishes.
    Complex automorphy(Complex tau) const;

    std::string str() const;

private:
    std::array<long, 4> m_{1, 0, 0, 1};
    mutable std::optional<Word> word_;
};

/// Euclidean decomposition on the bottom row. Never fails for det 1.
Word decompose(const GroupElement& g);

/// Integer product of the tokens (including the recorded sign).
GroupElement evaluate(const Word& w);

GroupElement token_matrix(const Token& t);

struct JacobiGroupElement {
    GroupElement gamma;
    long lambda = 0;
    long mu = 0;

    /// (g1, X1)(g2, X2) = (g1 g2, X1 g2 + X2).
    JacobiGroupElement operator*(const JacobiGroupElement& o) const;
};

struct HZPoint {
    Complex tau;
    Complex z;
};

/// (gamma tau, (z + lambda tau + mu) / (c tau + d)). Throws InvalidArgument
/// for Im(tau) <= 0.
HZPoint act(const JacobiGroupElement& j, const HZPoint& p);

/// Representatives of the right cosets of a finite-index subgroup of SL2(Z).
class CosetTable {
public:
    /// The trivial table {I} for the full modular group.
    CosetTable();

    /// When a membership test for the subgroup is given, representatives are
    /// checked to lie in pairwise distinct cosets (r_i r_j^-1 not in the
    /// subgroup); throws InvalidArgument otherwise.
    explicit CosetTable(std::vector<GroupElement> reps,
                        const std::function<bool(const GroupElement&)>& member = {});

    std::size_t index() const { return reps_.size(); }
    const std::vector<GroupElement>& representatives() const { return reps_; }

    /// JSON list of [a, b, c, d] integer tuples.
    static CosetTable from_json(const std::string& text);
    std::string to_json() const;

    bool operator==(const CosetTable& o) const { return reps_ == o.reps_; }

private:
    std::vector<GroupElement> reps_;
};

}  // namespace jacobi
