#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurkit/chern_poly.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/rational.hpp"
#include "schurkit/twist_series.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace schurkit;

namespace {

ChernPoly c(int i, int rank) { return ChernPoly::chern_variable(i, rank); }

// small random polynomial for the ring-axiom properties
ChernPoly random_poly(std::mt19937_64& gen, int rank, int max_terms) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    ChernPoly p(rank);
    int terms = nterms(gen);
    for (int t = 0; t < terms; ++t) {
        ChernMonomial m{std::vector<int>(rank, 0)};
        for (int i = 0; i < rank; ++i)
            m.exponents[i] = exp(gen);
        int denominator = 1 + std::abs(num(gen));
        p.add_term(m, Rational(num(gen), denominator));
    }
    return p;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(Rational(6)) == "6");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_from_string("7/2") == Rational(7, 2));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("partition basics and enumeration order") {
    Partition p({2, 1});
    CHECK(p.weight() == 3);
    CHECK(p.length() == 2);
    CHECK(p.part(0) == 2);
    CHECK(p.part(5) == 0);

    CHECK(Partition({3, 0, 0}) == Partition({3})); // trailing zeros stripped
    CHECK_THROWS_AS(Partition({1, 2}), UsageError);
    CHECK_THROWS_AS(Partition({-1}), UsageError);

    auto p22 = Partition::enumerate(2, 2);
    REQUIRE(p22.size() == 2);
    CHECK(p22[0] == Partition({2}));
    CHECK(p22[1] == Partition({1, 1}));

    auto p33 = Partition::enumerate(3, 3);
    REQUIRE(p33.size() == 3);
    CHECK(p33[0] == Partition({3}));
    CHECK(p33[1] == Partition({2, 1}));
    CHECK(p33[2] == Partition({1, 1, 1}));

    auto p05 = Partition::enumerate(0, 5);
    REQUIRE(p05.size() == 1);
    CHECK(p05[0].empty());
}

TEST_CASE("partition counts match the recurrence oracle") {
    for (int k = 0; k <= 9; ++k)
        for (int r = 1; r <= 6; ++r)
            CHECK(static_cast<long>(Partition::enumerate(k, r).size()) ==
                  testing::partition_count_oracle(k, r));
}

TEST_CASE("conjugation") {
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    for (int k = 0; k <= 8; ++k)
        for (const Partition& l : Partition::enumerate(k, k == 0 ? 1 : k))
            CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("polynomial arithmetic golden cases") {
    const int r = 3;
    CHECK(c(1, r) * c(1, r) == [&] {
        ChernPoly p(r);
        p.add_term(ChernMonomial{{2, 0, 0}}, Rational(1));
        return p;
    }());

    // degree_part picks out the weighted-homogeneous piece
    ChernPoly mixed = c(1, r) * c(1, r) + c(2, r) + c(1, r);
    CHECK(mixed.degree_part(2) == c(1, r) * c(1, r) + c(2, r));
    CHECK(mixed.degree_part(1) == c(1, r));
    CHECK(!mixed.is_homogeneous());

    CHECK((c(1, r) + c(2, r)) * (c(1, r) - c(2, r)) ==
          c(1, r) * c(1, r) - c(2, r) * c(2, r));

    // c_0 is 1 and out-of-range variables vanish
    CHECK(c(0, r) == ChernPoly::one(r));
    CHECK(c(4, r).is_zero());
    CHECK(c(-1, r).is_zero());

    ChernPoly q(2);
    CHECK_THROWS_AS(c(1, 3) * q, UsageError);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 gen(431);
    for (int trial = 0; trial < 60; ++trial) {
        int rank = 1 + static_cast<int>(gen() % 3);
        ChernPoly a = random_poly(gen, rank, 4);
        ChernPoly b = random_poly(gen, rank, 4);
        ChernPoly d = random_poly(gen, rank, 4);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("polynomial evaluation at rationals") {
    const int r = 2;
    ChernPoly p = c(1, r) * c(1, r) - c(2, r);
    CHECK(p.evaluate_at({Rational(3), Rational(1)}) == Rational(8));
    CHECK(p.evaluate_at({Rational(1, 2), Rational(1, 3)}) == Rational(-1, 12));
}

TEST_CASE("canonical term order is graded lex") {
    const int r = 2;
    ChernPoly p = c(2, r) + c(1, r) * c(1, r) + c(1, r);
    std::vector<std::vector<int>> seen;
    for (const auto& [m, coeff] : p.terms()) {
        (void)coeff;
        seen.push_back(m.exponents);
    }
    // degree 1 first, then degree-2 monomials ordered by exponent vector
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == std::vector<int>{1, 0});
    CHECK(seen[1] == std::vector<int>{0, 1});
    CHECK(seen[2] == std::vector<int>{2, 0});
}

TEST_CASE("twist series arithmetic") {
    const int r = 2;
    TwistSeries a = TwistSeries::from_poly(c(1, r)) +
                    TwistSeries::delta_power(r, 1) * Rational(r);
    // (c_1 + 2 d)^2 = c_1^2 + 4 c_1 d + 4 d^2
    TwistSeries sq = a * a;
    CHECK(sq.delta_coefficient(0) == c(1, r) * c(1, r));
    CHECK(sq.delta_coefficient(1) == c(1, r) * Rational(4));
    CHECK(sq.delta_coefficient(2) == ChernPoly::constant(r, Rational(4)));
    CHECK(sq.delta_coefficient(3).is_zero());
    CHECK(sq.max_delta_power() == 2);
    CHECK(sq.is_homogeneous_of_weight(2));

    CHECK(sq.substitute_delta(Rational(0)) == c(1, r) * c(1, r));
    // substitute d = 1/2 into (c_1 + 2 d)^2
    ChernPoly at_half = sq.substitute_delta(Rational(1, 2));
    CHECK(at_half == c(1, r) * c(1, r) + c(1, r) * Rational(2) +
                         ChernPoly::constant(r, Rational(1)));
}
