#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetafree {

// Arbitrary-size integer, thin RAII wrapper over GMP's mpz_t.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    explicit BigInt(const std::string& s, int base = 10) {
        if (mpz_init_set_str(z_, s.c_str(), base) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: cannot parse \"" + s + "\"");
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept { mpz_init(z_); mpz_swap(z_, o.z_); }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        if (this != &o) mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { BigInt r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { BigInt r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { BigInt r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    BigInt operator-() const { BigInt r; mpz_neg(r.z_, z_); return r; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    int sign() const { return mpz_sgn(z_); }
    BigInt abs() const { BigInt r; mpz_abs(r.z_, z_); return r; }
    bool fits_long() const { return mpz_fits_slong_p(z_); }
    long to_long() const { return mpz_get_si(z_); }

    static BigInt gcd(const BigInt& a, const BigInt& b) { BigInt r; mpz_gcd(r.z_, a.z_, b.z_); return r; }
    static BigInt lcm(const BigInt& a, const BigInt& b) { BigInt r; mpz_lcm(r.z_, a.z_, b.z_); return r; }
    static BigInt pow(const BigInt& a, unsigned long e) { BigInt r; mpz_pow_ui(r.z_, a.z_, e); return r; }

    // Exact division; throws if b does not divide a.
    static BigInt divexact(const BigInt& a, const BigInt& b) {
        if (b.sign() == 0) throw std::domain_error("BigInt: division by zero");
        if (!mpz_divisible_p(a.z_, b.z_)) throw std::domain_error("BigInt: inexact division");
        BigInt r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& z);

// Exact rational number in canonical form: denominator > 0, gcd(|num|, den) = 1.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Parses "p/q", integers, and decimal literals ("0.23416332", "4.1e-7").
    static Rational parse(std::string_view s);
    static Rational from_decimal(std::string_view s) { return parse(s); }

    const mpq_t& raw() const { return q_; }

    BigInt num() const { BigInt r; mpz_set(r.raw(), mpq_numref(q_)); return r; }
    BigInt den() const { BigInt r; mpz_set(r.raw(), mpq_denref(q_)); return r; }

    friend Rational operator+(const Rational& a, const Rational& b) { Rational r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rational operator-(const Rational& a, const Rational& b) { Rational r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rational operator*(const Rational& a, const Rational& b) { Rational r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const { Rational r; mpq_neg(r.q_, q_); return r; }
    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    int sign() const { return mpq_sgn(q_); }
    Rational abs() const { Rational r; mpq_abs(r.q_, q_); return r; }
    Rational inverse() const {
        if (sign() == 0) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    Rational pow(unsigned long e) const;

    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    double to_double() const { return mpq_get_d(q_); }

    std::string to_string() const;          // "p/q" or "p"
    std::string to_decimal(int digits) const;  // approximate decimal rendering

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace zetafree
