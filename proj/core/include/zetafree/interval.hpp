#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "zetafree/rational.hpp"

namespace zetafree {

// Raised when an elementary function is evaluated outside its domain
// (log of a nonpositive interval, tan across a pole, ...). Domain problems
// are always reported explicitly, never absorbed into a wide interval.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A closed interval [lo, hi] of MPFR floats with outward rounding:
// every operation returns an interval containing the exact image of its
// inputs. Values are immutable after construction; all functions are pure.
class Interval {
public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    explicit Interval(mpfr_prec_t prec = kDefaultPrec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval point(long v, mpfr_prec_t prec = kDefaultPrec);
    static Interval point_double(double v, mpfr_prec_t prec = kDefaultPrec);
    static Interval from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
    static Interval from_endpoints(const Rational& lo, const Rational& hi,
                                   mpfr_prec_t prec = kDefaultPrec);
    static Interval hull(const Interval& a, const Interval& b);
    // [min(a.lo,b.lo), max(a.hi,b.hi)] even if a, b are disjoint.

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    // mutable endpoint access for the arithmetic kernels
    mpfr_ptr mlo() { return lo_; }
    mpfr_ptr mhi() { return hi_; }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    bool contains(const Interval& o) const;  // o subseteq this
    bool is_positive() const;                // lo > 0
    bool is_negative() const;                // hi < 0
    bool is_nonnegative() const;             // lo >= 0

    // Definite comparisons: true only when provable from the endpoints.
    bool definitely_less(const Rational& q) const;     // hi < q
    bool definitely_greater(const Rational& q) const;  // lo > q
    bool definitely_less(const Interval& o) const;     // hi < o.lo

    Interval width() const;     // hi - lo, rounded up (point interval at same prec)
    Interval midpoint() const;  // point interval at the midpoint
    Interval abs() const;
    Interval lower_half() const;  // [lo, lo]
    Interval upper_half() const;  // [hi, hi]

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;

    friend Interval operator+(const Interval& a, const Rational& q);
    friend Interval operator-(const Interval& a, const Rational& q);
    friend Interval operator*(const Interval& a, const Rational& q);
    friend Interval operator/(const Interval& a, const Rational& q);
    friend Interval operator+(const Rational& q, const Interval& a) { return a + q; }
    friend Interval operator*(const Rational& q, const Interval& a) { return a * q; }
    friend Interval operator-(const Rational& q, const Interval& a) { return -(a - q); }

    Interval square() const;
    Interval pow_int(long n) const;
    Interval inverse() const;  // throws DomainError if 0 in interval

    std::string to_string(int digits = 20) const;  // "[lo, hi]" outward-rounded decimals
    std::string lo_string(int digits = 20) const;
    std::string hi_string(int digits = 20) const;

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    friend Interval make_interval(mpfr_prec_t);
};

// Certified elementary functions. All enclose the exact image; log/sqrt/tan/
// cot/sec/csc throw DomainError when the argument touches a singularity or
// leaves the domain.
Interval iv_exp(const Interval& x);
Interval iv_log(const Interval& x);
Interval iv_sqrt(const Interval& x);
Interval iv_sin(const Interval& x);
Interval iv_cos(const Interval& x);
Interval iv_tan(const Interval& x);
Interval iv_cot(const Interval& x);
Interval iv_sec(const Interval& x);
Interval iv_csc(const Interval& x);
Interval iv_atan(const Interval& x);
// b^e for b > 0, via exp(e log b).
Interval iv_pow(const Interval& base, const Interval& expo);
Interval iv_pi(mpfr_prec_t prec = Interval::kDefaultPrec);
Interval iv_log2(mpfr_prec_t prec = Interval::kDefaultPrec);
Interval iv_euler(mpfr_prec_t prec = Interval::kDefaultPrec);  // Euler-Mascheroni

enum class ElementaryFn { Exp, Log, Sin, Cos, Tan, Cot, Sec, Csc, Atan, Sqrt, Power };
Interval iv_eval_elementary(ElementaryFn fn, const Interval& x, mpfr_prec_t prec);

// Rectangle in the complex plane, used where the proofs touch complex
// quantities through their real and imaginary parts only.
struct Rect {
    Interval re, im;
    friend Rect operator+(const Rect& a, const Rect& b) { return {a.re + b.re, a.im + b.im}; }
    friend Rect operator-(const Rect& a, const Rect& b) { return {a.re - b.re, a.im - b.im}; }
    friend Rect operator*(const Rect& a, const Rect& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Rect inverse() const {
        Interval d = re.square() + im.square();
        return {re / d, -(im / d)};
    }
    Interval abs2() const { return re.square() + im.square(); }
    Interval log_abs() const { return iv_log(abs2()) * Rational(1, 2); }
    Rect pow_int(long n) const;
};

// Tri-state outcome of an attempted strict decision.
enum class Decision { True, False, Indeterminate };

// Precision escalation: all certification entry points start at `start` bits
// and double up to `ceiling` while the attempt reports Indeterminate.
struct PrecisionPolicy {
    mpfr_prec_t start = 128;
    mpfr_prec_t ceiling = 2048;
};

template <typename Attempt>
Decision decide_with_escalation(const PrecisionPolicy& policy, Attempt&& attempt) {
    for (mpfr_prec_t p = policy.start;; p *= 2) {
        Decision d = attempt(p);
        if (d != Decision::Indeterminate) return d;
        if (p >= policy.ceiling) return Decision::Indeterminate;
        if (p * 2 > policy.ceiling) p = policy.ceiling / 2;
    }
}

}  // namespace zetafree
