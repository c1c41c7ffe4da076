#include "jacobi/modular_group.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "jacobi/errors.hpp"

namespace jacobi {

std::string Token::str() const {
    switch (kind) {
        case Kind::S:
            return "S";
        case Kind::SInv:
            return "S^-1";
        case Kind::T:
            return power == 1 ? "T" : "T^" + std::to_string(power);
    }
    return "?";
}

std::string Word::str() const {
    std::string out = negated ? "-" : "";
    if (tokens.empty()) return out + "I";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += " ";
        out += tokens[i].str();
    }
    return out;
}

GroupElement::GroupElement(long a, long b, long c, long d) : m_{a, b, c, d} {
    if (a * d - b * c != 1) throw InvalidArgument("matrix " + str() + " does not have determinant 1");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return {a() * o.a() + b() * o.c(), a() * o.b() + b() * o.d(), c() * o.a() + d() * o.c(),
            c() * o.b() + d() * o.d()};
}

GroupElement GroupElement::inverse() const { return {d(), -b(), -c(), a()}; }

GroupElement GroupElement::operator-() const { return {-a(), -b(), -c(), -d()}; }

const Word& GroupElement::word() const {
    if (!word_) word_ = decompose(*this);
    return *word_;
}

Complex GroupElement::automorphy(Complex tau) const {
    const Complex j = static_cast<double>(c()) * tau + static_cast<double>(d());
    if (std::abs(j) < 1e-300) throw DegeneratePoint("c tau + d vanishes");
    return j;
}

Complex GroupElement::act(Complex tau) const {
    return (static_cast<double>(a()) * tau + static_cast<double>(b())) / automorphy(tau);
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
    return os.str();
}

GroupElement token_matrix(const Token& t) {
    switch (t.kind) {
        case Token::Kind::S:
            return GroupElement::S();
        case Token::Kind::SInv:
            return GroupElement::S().inverse();
        case Token::Kind::T:
            return GroupElement::T(t.power);
    }
    return {};
}

namespace {

long round_div(long p, long q) {
    // nearest integer to p/q, q != 0
    return static_cast<long>(std::floor(static_cast<double>(p) / static_cast<double>(q) + 0.5));
}

}  // namespace

Word decompose(const GroupElement& g) {
    // Peel g = T^n S g' with g' = S^-1 T^-n g until the bottom-left entry is 0.
    Word w;
    GroupElement cur = g;
    while (cur.c() != 0) {
        const long n = round_div(cur.a(), cur.c());
        if (n != 0) w.tokens.push_back(Token::t(n));
        w.tokens.push_back(Token::s());
        cur = GroupElement::S().inverse() * GroupElement::T(-n) * cur;
    }
    // cur = +-T^b
    if (cur.a() == 1) {
        if (cur.b() != 0) w.tokens.push_back(Token::t(cur.b()));
    } else {
        w.negated = true;
        if (cur.b() != 0) w.tokens.push_back(Token::t(-cur.b()));
    }
    return w;
}

GroupElement evaluate(const Word& w) {
    GroupElement g;
    for (const Token& t : w.tokens) g = g * token_matrix(t);
    return w.negated ? -g : g;
}

JacobiGroupElement JacobiGroupElement::operator*(const JacobiGroupElement& o) const {
    const GroupElement& g = o.gamma;
    return {gamma * g, lambda * g.a() + mu * g.c() + o.lambda, lambda * g.b() + mu * g.d() + o.mu};
}

HZPoint act(const JacobiGroupElement& j, const HZPoint& p) {
    if (!(p.tau.imag() > 0)) throw InvalidArgument("tau must lie in the upper half plane");
    const Complex j_tau = j.gamma.automorphy(p.tau);
    const Complex z = (p.z + static_cast<double>(j.lambda) * p.tau + static_cast<double>(j.mu)) / j_tau;
    return {j.gamma.act(p.tau), z};
}

CosetTable::CosetTable() : reps_{GroupElement::identity()} {}

CosetTable::CosetTable(std::vector<GroupElement> reps,
                       const std::function<bool(const GroupElement&)>& member)
    : reps_(std::move(reps)) {
    if (reps_.empty()) throw InvalidArgument("coset table needs at least one representative");
    if (member) {
        for (std::size_t i = 0; i < reps_.size(); ++i)
            for (std::size_t j = i + 1; j < reps_.size(); ++j)
                if (member(reps_[i] * reps_[j].inverse()))
                    throw InvalidArgument("representatives " + std::to_string(i) + " and " +
                                          std::to_string(j) + " lie in the same coset");
    }
}

CosetTable CosetTable::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("coset table is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw InvalidArgument("coset table must be a JSON list");
    std::vector<GroupElement> reps;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4)
            throw InvalidArgument("coset representative must be [a, b, c, d]");
        for (const auto& e : row)
            if (!e.is_number_integer()) throw InvalidArgument("coset entries must be integers");
        reps.emplace_back(row[0].get<long>(), row[1].get<long>(), row[2].get<long>(), row[3].get<long>());
    }
    return CosetTable(std::move(reps));
}

std::string CosetTable::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : reps_) j.push_back({g.a(), g.b(), g.c(), g.d()});
    return j.dump();
}

}  // namespace jacobi
