#include "stsys/rational.hpp"

#include <cctype>
#include <sstream>

namespace stsys {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    Integer v{std::string(s)};
    return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty())
        throw InputError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)), s);
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!den_text.empty() && den_text.front() == '+')
            den_text.remove_prefix(1);
        if (!all_digits(den_text))
            throw InputError("not a rational number: '" + std::string(s) + "'");
        Integer den(std::string{den_text});
        if (den == 0)
            throw InputError("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
            int_part.remove_prefix(1);
        if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part))
            throw InputError("not a rational number: '" + std::string(s) + "'");
        std::string digits = std::string(int_part) + std::string(frac_part);
        Integer num(digits);
        Integer den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i)
            den *= 10;
        Rational q(num, den);
        return negative ? Rational(-q) : q;
    }

    return Rational(parse_integer(s, s));
}

std::string to_string(const Rational& q)
{
    return q.str();
}

std::string to_decimal(const Rational& q, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << q.convert_to<double>();
    return os.str();
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    std::string_view rest = trim(text);
    if (rest.empty())
        return out;
    while (true) {
        auto comma = rest.find(',');
        out.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

Rational pow(const Rational& q, int e)
{
    Rational base = q;
    if (e < 0) {
        if (q == 0)
            throw InputError("zero raised to a negative power");
        base = 1 / q;
        e = -e;
    }
    Rational r = 1;
    while (e > 0) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace stsys
