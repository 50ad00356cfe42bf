#include "schurkit/schur.hpp"

#include "schurkit/errors.hpp"

#include <algorithm>

namespace schurkit {

namespace {

void require_parts_bounded(const Partition& lambda, int rank) {
    if (lambda.max_part() > rank)
        throw UsageError("invalid partition: part " + std::to_string(lambda.max_part()) +
                         " > rank " + std::to_string(rank));
}

// Monomial c_{lambda_1} * c_{lambda_2} * ... — the diagonal term of the
// Jacobi-Trudi determinant, and the pivot of the decomposition.
ChernMonomial diagonal_monomial(const Partition& lambda, int rank) {
    ChernMonomial m{std::vector<int>(rank, 0)};
    for (int p : lambda.parts())
        ++m.exponents[p - 1];
    return m;
}

} // namespace

ChernPoly schur_poly(const Partition& lambda, int rank) {
    if (rank < 1)
        throw UsageError("rank must be positive");
    require_parts_bounded(lambda, rank);
    const int n = lambda.length();
    if (n == 0)
        return ChernPoly::one(rank);
    std::vector<std::vector<ChernPoly>> m(n, std::vector<ChernPoly>(n, ChernPoly::zero(rank)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m[j][k] = ChernPoly::chern_variable(lambda.part(j) - j + k, rank);
    return ring_determinant(m, ChernPoly::zero(rank), ChernPoly::one(rank));
}

std::map<Partition, Rational> schur_decompose(const ChernPoly& P) {
    const int rank = P.rank();
    std::map<Partition, Rational> coeffs;
    if (P.is_zero())
        return coeffs;
    if (!P.is_homogeneous())
        throw UsageError("schur_decompose requires a weighted-homogeneous polynomial");
    const int degree = P.homogeneous_degree();

    // Lexicographically increasing order is compatible with dominance from
    // below, so each pivot monomial is touched exactly once.
    std::vector<Partition> order = Partition::enumerate(degree, rank);
    std::reverse(order.begin(), order.end());

    ChernPoly residual = P;
    for (const Partition& lambda : order) {
        Rational a = residual.coefficient(diagonal_monomial(lambda, rank));
        if (a == 0)
            continue;
        residual -= schur_poly(lambda, rank) * a;
        coeffs.emplace(lambda, a);
    }
    if (!residual.is_zero())
        throw UsageError("schur_decompose: input is not in the span of the Schur basis");
    return coeffs;
}

bool is_numerically_positive(const ChernPoly& P) {
    if (P.is_zero())
        return false;
    for (const auto& [lambda, a] : schur_decompose(P))
        if (a < 0)
            return false;
    return true;
}

TwistSeries twisted_chern(int k, int rank) {
    if (rank < 1)
        throw UsageError("rank must be positive");
    TwistSeries s(rank);
    if (k < 0 || k > rank)
        return s; // c_k = 0 outside [0, r], twisted or not
    for (int i = 0; i <= k; ++i) {
        Rational b(binomial(rank - i, k - i));
        s.add_term(k - i, ChernPoly::chern_variable(i, rank) * b);
    }
    return s;
}

TwistSeries twisted_schur(const Partition& lambda, int rank) {
    if (rank < 1)
        throw UsageError("rank must be positive");
    require_parts_bounded(lambda, rank);
    const int n = lambda.length();
    if (n == 0)
        return TwistSeries::one(rank);
    std::vector<std::vector<TwistSeries>> m(n, std::vector<TwistSeries>(n, TwistSeries::zero(rank)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m[j][k] = twisted_chern(lambda.part(j) - j + k, rank);
    return ring_determinant(m, TwistSeries::zero(rank), TwistSeries::one(rank));
}

ChernPoly derived_schur(const Partition& lambda, int i, int rank) {
    if (i < 0)
        throw UsageError("derived Schur index must be nonnegative");
    if (i > lambda.weight())
        return ChernPoly::zero(rank);
    return twisted_schur(lambda, rank).delta_coefficient(i);
}

namespace {

// Series in two formal twist classes: first twist delta, second twist
// epsilon. Only used to verify the derived-class composition identity.
class BiTwistSeries {
public:
    explicit BiTwistSeries(int rank) : rank_(rank) {}

    static BiTwistSeries one(int rank) {
        BiTwistSeries s(rank);
        s.coeffs_.emplace(std::pair{0, 0}, ChernPoly::one(rank));
        return s;
    }

    void add_term(int d, int e, const ChernPoly& p) {
        if (p.is_zero())
            return;
        auto [it, inserted] = coeffs_.emplace(std::pair{d, e}, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    BiTwistSeries operator+(const BiTwistSeries& o) const {
        BiTwistSeries r = *this;
        for (const auto& [k, p] : o.coeffs_)
            r.add_term(k.first, k.second, p);
        return r;
    }

    BiTwistSeries operator*(const BiTwistSeries& o) const {
        BiTwistSeries r(rank_);
        for (const auto& [ka, pa] : coeffs_)
            for (const auto& [kb, pb] : o.coeffs_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, pa * pb);
        return r;
    }

    // epsilon^i coefficient as a series in delta
    TwistSeries epsilon_coefficient(int i) const {
        TwistSeries s(rank_);
        for (const auto& [k, p] : coeffs_)
            if (k.second == i)
                s.add_term(k.first, p);
        return s;
    }

    int rank() const { return rank_; }

private:
    friend BiTwistSeries scale(const BiTwistSeries& s, const Rational& c);
    int rank_;
    std::map<std::pair<int, int>, ChernPoly> coeffs_;
};

BiTwistSeries scale(const BiTwistSeries& s, const Rational& c) {
    BiTwistSeries r(s.rank_);
    if (c == 0)
        return r;
    for (const auto& [k, p] : s.coeffs_)
        r.add_term(k.first, k.second, p * c);
    return r;
}

// c_a((E<delta>)<epsilon>): the twisted-Chern identity applied with the
// already-twisted classes as input.
BiTwistSeries doubly_twisted_chern(int a, int rank) {
    BiTwistSeries s(rank);
    if (a < 0 || a > rank)
        return s;
    for (int m = 0; m <= a; ++m) {
        Rational b(binomial(rank - m, a - m));
        TwistSeries inner = twisted_chern(m, rank);
        for (const auto& [d, p] : inner.coefficients())
            s.add_term(d, a - m, p * b);
    }
    return s;
}

} // namespace

bool derived_twist_identity_check(const Partition& lambda, int rank, int i,
                                  const std::optional<Rational>& delta_value) {
    require_parts_bounded(lambda, rank);
    if (i < 0)
        throw UsageError("derived Schur index must be nonnegative");

    // Left side: expand s_lambda((E<delta>)<epsilon>) as a determinant of
    // doubly twisted entries, then take the epsilon^i coefficient.
    const int n = lambda.length();
    BiTwistSeries det = BiTwistSeries::one(rank);
    if (n > 0) {
        std::vector<std::vector<BiTwistSeries>> m(n, std::vector<BiTwistSeries>(n, BiTwistSeries(rank)));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                m[j][k] = doubly_twisted_chern(lambda.part(j) - j + k, rank);
        det = ring_determinant(m, BiTwistSeries(rank), BiTwistSeries::one(rank));
    }
    TwistSeries lhs = det.epsilon_coefficient(i);

    // Right side: binomial re-expansion of the single-twist series.
    TwistSeries single = twisted_schur(lambda, rank);
    TwistSeries rhs(rank);
    for (int k = i; k <= lambda.weight(); ++k)
        rhs.add_term(k - i, single.delta_coefficient(k) * Rational(binomial(k, i)));

    if (!(lhs == rhs))
        return false;
    if (delta_value)
        return lhs.substitute_delta(*delta_value) == rhs.substitute_delta(*delta_value);
    return true;
}

ChernPoly segre_poly(int k, int rank) {
    if (k < 0)
        throw UsageError("Segre degree must be nonnegative");
    if (rank < 1)
        throw UsageError("rank must be positive");
    // Inverse power series: S_0 = 1, S_j = sum_{i>=1} (-1)^{i+1} c_i S_{j-i}.
    std::vector<ChernPoly> S;
    S.push_back(ChernPoly::one(rank));
    for (int j = 1; j <= k; ++j) {
        ChernPoly next = ChernPoly::zero(rank);
        for (int i = 1; i <= std::min(j, rank); ++i) {
            ChernPoly term = ChernPoly::chern_variable(i, rank) * S[j - i];
            if (i % 2 == 0)
                next -= term;
            else
                next += term;
        }
        S.push_back(next);
    }
    return S[k];
}

} // namespace schurkit
