#include "nct/rational.hpp"

#include <cctype>
#include <ostream>

namespace nct {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    auto read_int = [&](const std::string& s) {
        if (s.empty()) throw InputError("malformed rational literal: " + text);
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InputError("malformed rational literal: " + text);
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw InputError("malformed rational literal: " + text);
        return Integer(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(read_int(text));
    Integer n = read_int(text.substr(0, slash));
    Integer d = read_int(text.substr(slash + 1));
    if (d == 0) throw InputError("rational with zero denominator: " + text);
    return {n, d};
}

std::string Rational::to_string() const {
    std::string s = num().get_str();
    if (!is_integer()) {
        s += '/';
        s += den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer integer_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2), reduced.
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    Integer num = integer_gcd(a.num() * b.den(), b.num() * a.den());
    return {num, a.den() * b.den()};
}

} // namespace nct
