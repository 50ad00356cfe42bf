#include "schurkit/twist_series.hpp"

namespace schurkit {

TwistSeries::TwistSeries(int rank) : rank_(rank) {
    if (rank < 1)
        throw UsageError("TwistSeries rank must be positive");
}

TwistSeries TwistSeries::one(int rank) {
    return from_poly(ChernPoly::one(rank));
}

TwistSeries TwistSeries::from_poly(const ChernPoly& p) {
    TwistSeries s(p.rank());
    if (!p.is_zero())
        s.coeffs_.emplace(0, p);
    return s;
}

TwistSeries TwistSeries::delta_power(int rank, int i) {
    if (i < 0)
        throw UsageError("delta power must be nonnegative");
    TwistSeries s(rank);
    s.coeffs_.emplace(i, ChernPoly::one(rank));
    return s;
}

ChernPoly TwistSeries::delta_coefficient(int i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? ChernPoly::zero(rank_) : it->second;
}

int TwistSeries::max_delta_power() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

void TwistSeries::add_term(int delta_power, const ChernPoly& poly) {
    if (delta_power < 0)
        throw UsageError("delta power must be nonnegative");
    if (poly.rank() != rank_)
        throw UsageError("TwistSeries rank mismatch");
    if (poly.is_zero())
        return;
    auto [it, inserted] = coeffs_.emplace(delta_power, poly);
    if (!inserted) {
        it->second += poly;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

TwistSeries TwistSeries::operator+(const TwistSeries& other) const {
    if (rank_ != other.rank_)
        throw UsageError("TwistSeries rank mismatch");
    TwistSeries result = *this;
    for (const auto& [i, p] : other.coeffs_)
        result.add_term(i, p);
    return result;
}

TwistSeries TwistSeries::operator-(const TwistSeries& other) const {
    if (rank_ != other.rank_)
        throw UsageError("TwistSeries rank mismatch");
    TwistSeries result = *this;
    for (const auto& [i, p] : other.coeffs_)
        result.add_term(i, -p);
    return result;
}

TwistSeries TwistSeries::operator*(const TwistSeries& other) const {
    if (rank_ != other.rank_)
        throw UsageError("TwistSeries rank mismatch");
    TwistSeries result(rank_);
    for (const auto& [i, p] : coeffs_)
        for (const auto& [j, q] : other.coeffs_)
            result.add_term(i + j, p * q);
    return result;
}

TwistSeries TwistSeries::operator*(const Rational& scalar) const {
    TwistSeries result(rank_);
    if (scalar == 0)
        return result;
    for (const auto& [i, p] : coeffs_)
        result.coeffs_.emplace(i, p * scalar);
    return result;
}

ChernPoly TwistSeries::substitute_delta(const Rational& value) const {
    ChernPoly total = ChernPoly::zero(rank_);
    Rational power(1);
    int prev = 0;
    for (const auto& [i, p] : coeffs_) {
        for (int j = prev; j < i; ++j)
            power *= value;
        prev = i;
        total += p * power;
    }
    return total;
}

bool TwistSeries::is_homogeneous_of_weight(int k) const {
    for (const auto& [i, p] : coeffs_) {
        if (!p.is_homogeneous() || p.is_zero())
            return p.is_zero();
        if (p.homogeneous_degree() != k - i)
            return false;
    }
    return true;
}

std::string TwistSeries::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (const auto& [i, p] : coeffs_) {
        if (!s.empty())
            s += " + ";
        s += "(" + p.to_string() + ")";
        if (i == 1)
            s += "*d";
        else if (i > 1)
            s += "*d^" + std::to_string(i);
    }
    return s;
}

} // namespace schurkit
