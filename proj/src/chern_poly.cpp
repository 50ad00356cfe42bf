#include "schurkit/chern_poly.hpp"

namespace schurkit {

ChernPoly::ChernPoly(int rank) : rank_(rank) {
    if (rank < 1)
        throw UsageError("ChernPoly rank must be positive");
}

ChernPoly ChernPoly::one(int rank) {
    return constant(rank, Rational(1));
}

ChernPoly ChernPoly::constant(int rank, const Rational& value) {
    ChernPoly p(rank);
    if (value != 0)
        p.terms_.emplace(ChernMonomial{std::vector<int>(rank, 0)}, value);
    return p;
}

ChernPoly ChernPoly::chern_variable(int i, int rank) {
    if (i == 0)
        return one(rank);
    if (i < 0 || i > rank)
        return zero(rank);
    ChernPoly p(rank);
    std::vector<int> e(rank, 0);
    e[i - 1] = 1;
    p.terms_.emplace(ChernMonomial{std::move(e)}, Rational(1));
    return p;
}

Rational ChernPoly::coefficient(const ChernMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChernPoly::add_term(const ChernMonomial& m, const Rational& coeff) {
    if (static_cast<int>(m.exponents.size()) != rank_)
        throw UsageError("monomial exponent count does not match rank");
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    } else if (coeff == 0) {
        terms_.erase(it);
    }
}

void ChernPoly::check_same_rank(const ChernPoly& other) const {
    if (rank_ != other.rank_)
        throw UsageError("ChernPoly rank mismatch (" + std::to_string(rank_) + " vs " +
                         std::to_string(other.rank_) + ")");
}

ChernPoly ChernPoly::operator+(const ChernPoly& other) const {
    ChernPoly result = *this;
    result += other;
    return result;
}

ChernPoly& ChernPoly::operator+=(const ChernPoly& other) {
    check_same_rank(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

ChernPoly ChernPoly::operator-(const ChernPoly& other) const {
    ChernPoly result = *this;
    result -= other;
    return result;
}

ChernPoly& ChernPoly::operator-=(const ChernPoly& other) {
    check_same_rank(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

ChernPoly ChernPoly::operator-() const {
    ChernPoly result(rank_);
    for (const auto& [m, c] : terms_)
        result.terms_.emplace(m, -c);
    return result;
}

ChernPoly ChernPoly::operator*(const ChernPoly& other) const {
    check_same_rank(other);
    ChernPoly result(rank_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            ChernMonomial m{ma.exponents};
            for (int i = 0; i < rank_; ++i)
                m.exponents[i] += mb.exponents[i];
            result.add_term(m, ca * cb);
        }
    }
    return result;
}

ChernPoly ChernPoly::operator*(const Rational& scalar) const {
    ChernPoly result(rank_);
    if (scalar == 0)
        return result;
    for (const auto& [m, c] : terms_)
        result.terms_.emplace(m, c * scalar);
    return result;
}

ChernPoly ChernPoly::degree_part(int k) const {
    ChernPoly result(rank_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree() == k)
            result.terms_.emplace(m, c);
    return result;
}

bool ChernPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int dm = m.weighted_degree();
        if (d == -1)
            d = dm;
        else if (d != dm)
            return false;
    }
    return true;
}

int ChernPoly::homogeneous_degree() const {
    if (is_zero())
        throw UsageError("zero polynomial has no homogeneous degree");
    if (!is_homogeneous())
        throw UsageError("polynomial is not weighted-homogeneous");
    return terms_.begin()->first.weighted_degree();
}

int ChernPoly::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.weighted_degree());
    }
    return d;
}

Rational ChernPoly::evaluate_at(const std::vector<Rational>& values) const {
    return evaluate<Rational>(values, Rational(0), Rational(1));
}

std::string ChernPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        bool first = s.empty();
        if (c > 0 && !first)
            s += " + ";
        else if (c < 0)
            s += first ? "-" : " - ";
        Rational a = abs(c);
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            if (m.exponents[i] == 0)
                continue;
            if (!mono.empty()) mono += "*";
            mono += "c" + std::to_string(i + 1);
            if (m.exponents[i] > 1)
                mono += "^" + std::to_string(m.exponents[i]);
        }
        if (mono.empty()) {
            s += rational_to_string(a);
        } else {
            if (a != 1)
                s += rational_to_string(a) + "*";
            s += mono;
        }
    }
    return s;
}

} // namespace schurkit
