#include "schurkit/rational.hpp"

#include "schurkit/errors.hpp"

namespace schurkit {

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(std::string_view text) {
    auto parse_int = [&](std::string_view s, std::size_t offset) -> BigInt {
        if (s.empty())
            throw ParseError("empty integer", offset);
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw ParseError("sign without digits", offset);
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw ParseError(std::string("unexpected character '") + s[j] + "' in number",
                                 offset + j);
        return BigInt(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, 0));
    BigInt num = parse_int(text.substr(0, slash), 0);
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0)
        throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

} // namespace schurkit
