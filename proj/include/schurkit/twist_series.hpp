#ifndef SCHURKIT_TWIST_SERIES_HPP
#define SCHURKIT_TWIST_SERIES_HPP

#include "schurkit/chern_poly.hpp"

#include <map>

namespace schurkit {

// Finite series sum_i P_i * delta^i with ChernPoly coefficients, where delta
// is the formal (1,1) twist class. For a series of total weight k the delta^i
// coefficient has weighted degree k - i.
class TwistSeries {
public:
    explicit TwistSeries(int rank);

    static TwistSeries zero(int rank) { return TwistSeries(rank); }
    static TwistSeries one(int rank);
    static TwistSeries from_poly(const ChernPoly& p); // delta^0 coefficient
    static TwistSeries delta_power(int rank, int i);  // delta^i

    int rank() const { return rank_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Zero polynomial when the power is absent.
    ChernPoly delta_coefficient(int i) const;
    const std::map<int, ChernPoly>& coefficients() const { return coeffs_; }
    int max_delta_power() const; // -1 for the zero series

    void add_term(int delta_power, const ChernPoly& poly);

    TwistSeries operator+(const TwistSeries& other) const;
    TwistSeries operator-(const TwistSeries& other) const;
    TwistSeries operator*(const TwistSeries& other) const;
    TwistSeries operator*(const Rational& scalar) const;

    friend bool operator==(const TwistSeries& a, const TwistSeries& b) {
        return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
    }

    // Substitutes a rational value for delta, collapsing to a polynomial.
    ChernPoly substitute_delta(const Rational& value) const;

    // True when every delta^i coefficient is homogeneous of degree k - i.
    bool is_homogeneous_of_weight(int k) const;

    std::string to_string() const;

private:
    int rank_;
    std::map<int, ChernPoly> coeffs_; // delta power -> nonzero polynomial
};

inline TwistSeries scale(const TwistSeries& s, const Rational& c) { return s * c; }

} // namespace schurkit

#endif
