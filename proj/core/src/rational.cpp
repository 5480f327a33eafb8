#include "zetafree/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace zetafree {

std::ostream& operator<<(std::ostream& os, const BigInt& z) { return os << z.to_string(); }

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.sign() == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational Rational::parse(std::string_view sv) {
    std::string s(sv);
    // strip whitespace
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("Rational: empty string");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        BigInt n(t.substr(0, slash)), d(t.substr(slash + 1));
        return Rational(n, d);
    }
    // decimal with optional exponent: [-]ddd[.ddd][e[-]dd]
    auto epos = t.find_first_of("eE");
    long expo = 0;
    std::string mant = t;
    if (epos != std::string::npos) {
        expo = std::stol(t.substr(epos + 1));
        mant = t.substr(0, epos);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        expo -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    BigInt n(digits);
    Rational r(n, BigInt(1));
    BigInt ten(10);
    if (expo >= 0)
        return Rational(n * BigInt::pow(ten, static_cast<unsigned long>(expo)), BigInt(1));
    return Rational(n, BigInt::pow(ten, static_cast<unsigned long>(-expo)));
}

Rational Rational::pow(unsigned long e) const {
    Rational r(1);
    Rational base(*this);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return num().to_string();
    return num().to_string() + "/" + den().to_string();
}

std::string Rational::to_decimal(int digits) const {
    if (sign() == 0) return "0";
    // long division to the requested number of fractional digits, truncated
    BigInt n = num().abs(), d = den();
    BigInt ip;
    mpz_fdiv_q(ip.raw(), n.raw(), d.raw());
    BigInt rem = n - ip * d;
    std::string out = (sign() < 0 ? "-" : "") + ip.to_string();
    if (rem.sign() == 0) return out;
    out += ".";
    BigInt ten(10);
    for (int i = 0; i < digits && rem.sign() != 0; ++i) {
        rem = rem * ten;
        BigInt q;
        mpz_fdiv_q(q.raw(), rem.raw(), d.raw());
        out += q.to_string();
        rem = rem - q * d;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace zetafree
