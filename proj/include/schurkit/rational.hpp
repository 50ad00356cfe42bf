#ifndef SCHURKIT_RATIONAL_HPP
#define SCHURKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace schurkit {

// Exact arithmetic backbone of the symbolic modules. cpp_rational keeps
// values in lowest terms with a positive denominator, which is exactly the
// invariant the rest of the library relies on.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

// Accepts "p" and "p/q" with optional leading '-'. Throws ParseError.
Rational rational_from_string(std::string_view text);

// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

inline int sign_of(const Rational& q) {
    return q.sign();
}

} // namespace schurkit

#endif
