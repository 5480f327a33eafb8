#pragma once

#include <functional>

#include "zetafree/interval.hpp"

namespace zetafree {

// Second-order jet: enclosures of f, f', f'' over a common argument range.
// Gives rigorous midpoint-rule remainders without hand-derived derivatives.
struct Jet2 {
    Interval v, d1, d2;

    static Jet2 variable(const Interval& x) {
        mpfr_prec_t p = x.precision();
        return {x, Interval::point(1, p), Interval::point(0, p)};
    }
    static Jet2 constant(const Interval& c) {
        mpfr_prec_t p = c.precision();
        return {c, Interval::point(0, p), Interval::point(0, p)};
    }
    static Jet2 constant(const Rational& c, mpfr_prec_t p) {
        return constant(Interval::from_rational(c, p));
    }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
    }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) {
        return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
    }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
                a.d2 * b.v + a.d1 * b.d1 * Rational(2) + a.v * b.d2};
    }
    Jet2 operator-() const { return {-v, -d1, -d2}; }
    Jet2 scaled(const Rational& s) const { return {v * s, d1 * s, d2 * s}; }
};

Jet2 jet_exp(const Jet2& x);
Jet2 jet_sin(const Jet2& x);
Jet2 jet_cos(const Jet2& x);

// Integrand over a bounded or right-infinite domain. `value` must enclose f
// over its interval argument. `jet`, when given, encloses (f, f', f'') and
// enables the second-order midpoint rule. For right-infinite domains,
// `tail_majorant(T)` must enclose integral_T^inf |f|.
struct Integrand {
    std::function<Interval(const Interval&)> value;
    std::function<Jet2(const Interval&)> jet;                // optional
    std::function<Interval(const Interval&)> tail_majorant;  // optional
};

struct QuadOptions {
    mpfr_prec_t prec = Interval::kDefaultPrec;
    Rational target_width = Rational(1, 1000000000);  // absolute enclosure width goal
    long max_cells = 4000000;
    int max_depth = 64;
};

struct QuadResult {
    Interval value;
    bool indeterminate = false;  // refinement gave out before reaching the target
    long cells = 0;
};

QuadResult integrate_enclosure(const Integrand& f, const Rational& a, const Rational& b,
                               const QuadOptions& opts = {});

// Semi-infinite integral: truncates where the tail majorant contributes less
// than a thousandth of the target width, then integrates the bounded part.
// Throws if no tail majorant is supplied.
QuadResult integrate_to_infinity(const Integrand& f, const Rational& a,
                                 const QuadOptions& opts = {});

// Closed-form tail families used by the zero-sum estimates, for cross-checking
// the adaptive integrator and for the tail bounds themselves.
enum class TailKind {
    // exact value of integral_{T0}^inf (x^-2 + (x+2kt)^-2) log((kt+x)/2pi) dx
    ZeroSumLogIntegral,
    // (1/T0^2 + 1/(2H+T0)^2) * log(kt + T0)
    PhiAtTzeroLogT,
    // exact value of integral_{T0}^inf (x^-2 + (2H+x)^-2) / x dx
    InverseCubeSum,
    // upper bound for integral_T^inf log(y + c) / y^3 dy  (returns [0, bound])
    LogShiftOverCube,
};

struct TailParams {
    Interval kt;      // k*t (ZeroSumLogIntegral, PhiAtTzeroLogT)
    Rational T0;      // lower limit / shift
    Rational H;       // height parameter (InverseCubeSum, PhiAtTzeroLogT)
    Interval T;       // lower limit (LogShiftOverCube)
    Rational shift;   // the c in log(y + c)
};

Interval closed_form_tail(TailKind kind, const TailParams& p,
                          mpfr_prec_t prec = Interval::kDefaultPrec);

// Enclosure of the antiderivative sum for integral u^j e^{zu} du evaluated
// between interval endpoints: integral_{lo}^{hi} u^j e^{zu} du for complex
// rectangle z != 0. Used by the direct Laplace-transform evaluations.
Rect integral_uj_exp(int j, const Rect& z, const Interval& lo, const Interval& hi);

}  // namespace zetafree
