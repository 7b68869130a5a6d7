#include "gmlie/rational.hpp"

#include "gmlie/errors.hpp"

#include <cctype>

namespace gmlie {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw UsageError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw UsageError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (negative)
        n = -n;
    return make_rational(n, d);
}

Rational factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

} // namespace gmlie
