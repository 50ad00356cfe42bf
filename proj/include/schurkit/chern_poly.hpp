#ifndef SCHURKIT_CHERN_POLY_HPP
#define SCHURKIT_CHERN_POLY_HPP

#include "schurkit/errors.hpp"
#include "schurkit/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace schurkit {

// Monomial c_1^{e_1} ... c_r^{e_r}; the variable c_i carries weight i.
struct ChernMonomial {
    std::vector<int> exponents; // length r

    int weighted_degree() const {
        int d = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            d += static_cast<int>(i + 1) * exponents[i];
        return d;
    }

    friend bool operator==(const ChernMonomial&, const ChernMonomial&) = default;
};

// Graded lexicographic term order: weighted degree first, then the exponent
// vector. This is the canonical order used for serialization.
struct GradedLexLess {
    bool operator()(const ChernMonomial& a, const ChernMonomial& b) const {
        int da = a.weighted_degree(), db = b.weighted_degree();
        if (da != db) return da < db;
        return a.exponents < b.exponents;
    }
};

inline Rational scale(const Rational& x, const Rational& c) { return x * c; }

// Polynomial in Q[c_1,...,c_r] with the weighted grading. Exact rational
// coefficients; zero coefficients are never stored.
class ChernPoly {
public:
    using TermMap = std::map<ChernMonomial, Rational, GradedLexLess>;

    explicit ChernPoly(int rank);

    static ChernPoly zero(int rank) { return ChernPoly(rank); }
    static ChernPoly one(int rank);
    static ChernPoly constant(int rank, const Rational& value);
    // c_i for 1 <= i <= rank; i == 0 gives 1; any other i gives 0
    // (the c_0 = 1, c_i = 0 outside [0, r] convention).
    static ChernPoly chern_variable(int i, int rank);

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const ChernMonomial& m) const;
    void add_term(const ChernMonomial& m, const Rational& coeff);

    ChernPoly operator+(const ChernPoly& other) const;
    ChernPoly operator-(const ChernPoly& other) const;
    ChernPoly operator-() const;
    ChernPoly operator*(const ChernPoly& other) const;
    ChernPoly operator*(const Rational& scalar) const;

    ChernPoly& operator+=(const ChernPoly& other);
    ChernPoly& operator-=(const ChernPoly& other);

    friend bool operator==(const ChernPoly& a, const ChernPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    // Homogeneous component of weighted degree k.
    ChernPoly degree_part(int k) const;
    bool is_homogeneous() const;
    // Weighted degree of a nonzero homogeneous polynomial; throws otherwise.
    int homogeneous_degree() const;
    int max_degree() const; // 0 for the zero polynomial

    // Substitutes ring elements for c_1..c_r. R needs +, *, and
    // scale(R, Rational); `one` is the ring unit.
    template <typename R>
    R evaluate(const std::vector<R>& values, const R& zero, const R& one) const {
        if (static_cast<int>(values.size()) != rank_)
            throw UsageError("evaluate: expected one value per Chern variable");
        R total = zero;
        for (const auto& [mono, coeff] : terms_) {
            R term = one;
            for (int i = 0; i < rank_; ++i)
                for (int e = 0; e < mono.exponents[i]; ++e)
                    term = term * values[i];
            total = total + scale(term, coeff);
        }
        return total;
    }

    // Substitutes rational values for the variables.
    Rational evaluate_at(const std::vector<Rational>& values) const;

    std::string to_string() const; // human-readable, canonical term order

private:
    void check_same_rank(const ChernPoly& other) const;

    int rank_;
    TermMap terms_;
};

inline ChernPoly scale(const ChernPoly& p, const Rational& c) { return p * c; }

} // namespace schurkit

#endif
