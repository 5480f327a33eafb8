#include "zetafree/quadrature.hpp"

#include <vector>

namespace zetafree {

Jet2 jet_exp(const Jet2& x) {
    Interval e = iv_exp(x.v);
    return {e, e * x.d1, e * (x.d1.square() + x.d2)};
}

Jet2 jet_sin(const Jet2& x) {
    Interval s = iv_sin(x.v), c = iv_cos(x.v);
    return {s, c * x.d1, -s * x.d1.square() + c * x.d2};
}

Jet2 jet_cos(const Jet2& x) {
    Interval s = iv_sin(x.v), c = iv_cos(x.v);
    return {c, -s * x.d1, -c * x.d1.square() - s * x.d2};
}

namespace {

// One midpoint cell: f(m)*h + f''(cell) * h^3/24 when a jet is available,
// else f(cell)*h.
Interval cell_rule(const Integrand& f, const Interval& cell, mpfr_prec_t prec) {
    Interval h = cell.width();
    if (f.jet) {
        Interval m = cell.midpoint();
        Jet2 at_point = f.jet(m);
        Jet2 over_cell = f.jet(cell);
        Interval h3 = h.pow_int(3) / Rational(24);
        Interval rem = Interval::hull(-h3, h3) * over_cell.d2;
        return at_point.v * h + rem;
    }
    return f.value(cell) * h;
}

}  // namespace

QuadResult integrate_enclosure(const Integrand& f, const Rational& a, const Rational& b,
                               const QuadOptions& opts) {
    if (a > b) throw std::invalid_argument("integrate_enclosure: a > b");
    QuadResult res;
    res.value = Interval::point(0, opts.prec);
    if (a == b) return res;

    struct Cell {
        Interval x;
        Rational budget;  // width budget for this cell
        int depth;
    };
    Interval whole = Interval::from_endpoints(a, b, opts.prec);
    std::vector<Cell> stack{{whole, opts.target_width, 0}};
    Interval acc = Interval::point(0, opts.prec);
    bool indeterminate = false;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        Interval enc = cell_rule(f, c.x, opts.prec);
        bool good = enc.width().definitely_less(c.budget);
        if (good || c.depth >= opts.max_depth || res.cells >= opts.max_cells) {
            if (!good) indeterminate = true;
            acc = acc + enc;
            ++res.cells;
            continue;
        }
        Interval m = c.x.midpoint();
        Interval left(opts.prec), right(opts.prec);
        mpfr_set(left.mlo(), c.x.lo(), MPFR_RNDD);
        mpfr_set(left.mhi(), m.hi(), MPFR_RNDU);
        mpfr_set(right.mlo(), m.lo(), MPFR_RNDD);
        mpfr_set(right.mhi(), c.x.hi(), MPFR_RNDU);
        Rational half = c.budget / Rational(2);
        stack.push_back({left, half, c.depth + 1});
        stack.push_back({right, half, c.depth + 1});
    }
    res.value = acc;
    res.indeterminate = indeterminate;
    return res;
}

QuadResult integrate_to_infinity(const Integrand& f, const Rational& a, const QuadOptions& opts) {
    if (!f.tail_majorant)
        throw std::invalid_argument("integrate_to_infinity: tail majorant required on a semi-infinite domain");
    // push the truncation point out until the tail is < target/1000
    Rational T = a + Rational(1);
    Rational tail_goal = opts.target_width / Rational(1000);
    Interval tail(opts.prec);
    for (int i = 0; i < 4000; ++i) {
        tail = f.tail_majorant(Interval::from_rational(T, opts.prec));
        if (tail.definitely_less(tail_goal)) break;
        T = T * Rational(2);
    }
    if (!tail.definitely_less(tail_goal)) {
        QuadResult r;
        r.indeterminate = true;
        r.value = Interval::from_endpoints(Rational(-1), Rational(1), opts.prec);
        return r;
    }
    QuadResult core = integrate_enclosure(f, a, T, opts);
    Interval pm = Interval::hull(-tail, tail);
    core.value = core.value + pm;
    return core;
}

Interval closed_form_tail(TailKind kind, const TailParams& p, mpfr_prec_t prec) {
    switch (kind) {
        case TailKind::ZeroSumLogIntegral: {
            // (1/T0)L + L/(2kt+T0) + log(2kt+T0)/(kt) - log(T0)/(kt),
            // L = log((kt+T0)/2pi)
            Interval kt = p.kt;
            Interval twoPi = iv_pi(prec) * Rational(2);
            Interval L = iv_log((kt + p.T0) / twoPi);
            Interval t1 = L / p.T0;
            Interval t2 = L / (kt * Rational(2) + p.T0);
            Interval t3 = iv_log(kt * Rational(2) + p.T0) / kt;
            Interval t4 = iv_log(Interval::from_rational(p.T0, prec)) / kt;
            return t1 + t2 + t3 - t4;
        }
        case TailKind::PhiAtTzeroLogT: {
            Rational coef = Rational(1) / (p.T0 * p.T0) +
                            Rational(1) / ((Rational(2) * p.H + p.T0) * (Rational(2) * p.H + p.T0));
            return iv_log(p.kt + p.T0) * coef;
        }
        case TailKind::InverseCubeSum: {
            // 1/(2 T0^2) + (1/(4H^2)) log((2H+T0)/T0) - 1/(2H(2H+T0))
            Rational twoH = Rational(2) * p.H;
            Interval logterm = iv_log(Interval::from_rational((twoH + p.T0) / p.T0, prec));
            Interval r = Interval::from_rational(Rational(1) / (Rational(2) * p.T0 * p.T0), prec);
            r = r + logterm / (Rational(4) * p.H * p.H);
            r = r - Interval::from_rational(Rational(1) / (twoH * (twoH + p.T0)), prec);
            return r;
        }
        case TailKind::LogShiftOverCube: {
            // log(y+c) <= log y + c/y, so the tail is at most
            // (2 log T + 1)/(4 T^2) + c/(3 T^3)
            Interval T = p.T;
            Interval b = (iv_log(T) * Rational(2) + Rational(1)) / (T.square() * Rational(4));
            b = b + Interval::from_rational(p.shift, prec) / (T.pow_int(3) * Rational(3));
            Interval r(prec);
            mpfr_set_zero(r.mlo(), 1);
            mpfr_set(r.mhi(), b.hi(), MPFR_RNDU);
            return r;
        }
    }
    throw std::logic_error("closed_form_tail: unknown kind");
}

Rect integral_uj_exp(int j, const Rect& z, const Interval& lo, const Interval& hi) {
    // antiderivative of u^j e^{zu}: e^{zu} sum_{i=0..j} (-1)^i j!/(j-i)! u^{j-i} / z^{i+1}
    mpfr_prec_t prec = lo.precision();
    auto antider = [&](const Interval& u) {
        Rect zinv = z.inverse();
        Rect acc{Interval::point(0, prec), Interval::point(0, prec)};
        Rect zpow = zinv;  // z^{-(i+1)}
        Rational fact(1);
        for (int i = 0; i <= j; ++i) {
            // (-1)^i j!/(j-i)! u^{j-i} z^{-(i+1)}
            Interval up = u.pow_int(j - i);
            Rational coef = fact;
            if (i % 2 == 1) coef = -coef;
            acc = acc + Rect{zpow.re * up * coef, zpow.im * up * coef};
            fact = fact * Rational(j - i);
            zpow = zpow * zinv;
        }
        Interval eru = iv_exp(Rect{u * z.re, u * z.im}.re);  // e^{Re(z) u}
        Interval imzu = z.im * u;
        Rect eiu{eru * iv_cos(imzu), eru * iv_sin(imzu)};
        return eiu * acc;
    };
    Rect at_hi = antider(hi), at_lo = antider(lo);
    return at_hi - at_lo;
}

}  // namespace zetafree
