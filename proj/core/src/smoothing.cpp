#include "zetafree/smoothing.hpp"

#include <algorithm>
#include <chrono>

namespace zetafree {

namespace {

// w in the linear-trig normal form w(u) = P1(u) + P2(u) cos(tau u) + p3 sin(tau u)
// with P1, P2 linear and p3 constant; tau = tan theta.
struct WeightForm {
    Interval p1a, p1b;  // P1 = p1a + p1b u
    Interval p2a, p2b;  // P2 = p2a + p2b u
    Interval p3;
    Interval tau;
    Interval support_end;
    Interval w0;
};

WeightForm weight_form(const SmoothingSpec& spec, mpfr_prec_t prec) {
    const ThetaConstants& tc = ThetaConstants::get(spec.theta, prec);
    WeightForm f;
    f.tau = tc.tan_theta;
    f.support_end = tc.support_end;
    f.w0 = tc.w0;
    // s2 [ s2 (tc - u/2) cos + (2tc - u) + sin(2th - tau u) csc2th - 2 - 2 sin(th - tau u) cscth ]
    // cos coefficient: s2 [s2 tc - 1 - (s2/2) u]; sin coefficient: s2 [2 cot th - cot 2th]
    Interval s2 = tc.sec2;
    f.p1a = s2 * (tc.theta_cot_theta * Rational(2) - Rational(2));
    f.p1b = -s2;
    f.p2a = s2 * (s2 * tc.theta_cot_theta - Rational(1));
    f.p2b = -(s2 * s2) * Rational(1, 2);
    Interval cot_th = iv_cot(tc.theta);
    Interval cot_2th = iv_cot(tc.theta * Rational(2));
    f.p3 = s2 * (cot_th * Rational(2) - cot_2th);
    return f;
}

Interval w_formula(const Interval& u, const WeightForm& f) {
    Interval tu = f.tau * u;
    return (f.p1a + f.p1b * u) + (f.p2a + f.p2b * u) * iv_cos(tu) + f.p3 * iv_sin(tu);
}

Jet2 w_formula_jet(const Jet2& u, const WeightForm& f, mpfr_prec_t prec) {
    Jet2 tu{f.tau * u.v, f.tau * u.d1, f.tau * u.d2};
    Jet2 p1{f.p1a + f.p1b * u.v, f.p1b * u.d1, f.p1b * u.d2};
    Jet2 p2{f.p2a + f.p2b * u.v, f.p2b * u.d1, f.p2b * u.d2};
    Jet2 c = jet_cos(tu);
    Jet2 s = jet_sin(tu);
    Jet2 r = p1 + p2 * c + Jet2{f.p3 * s.v, f.p3 * s.d1, f.p3 * s.d2};
    (void)prec;
    return r;
}

Rational rational_from_mpfr(const mpfr_t& x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rational r(0);
    mpq_set(const_cast<mpq_ptr>(r.raw()), q);
    mpq_clear(q);
    return r;
}

// a rational point inside the support-end enclosure (essentially 2 theta cot theta)
Rational support_end_rational(const SmoothingSpec& spec, mpfr_prec_t prec) {
    const ThetaConstants& tc = ThetaConstants::get(spec.theta, prec);
    return rational_from_mpfr(tc.support_end.midpoint().lo());
}

}  // namespace

Interval eval_w(const Interval& u, const SmoothingSpec& spec, mpfr_prec_t prec) {
    WeightForm f = weight_form(spec, prec);
    Interval zero = Interval::point(0, prec);
    // entirely outside the support
    if (mpfr_sgn(u.hi()) < 0) return zero;
    if (mpfr_cmp(u.lo(), f.support_end.hi()) > 0) return zero;
    bool inside = mpfr_sgn(u.lo()) >= 0 && mpfr_cmp(u.hi(), f.support_end.lo()) <= 0;
    // clip to [0, support_end.hi]
    Interval clipped(prec);
    mpfr_max(clipped.mlo(), u.lo(), zero.lo(), MPFR_RNDD);
    mpfr_min(clipped.mhi(), u.hi(), f.support_end.hi(), MPFR_RNDU);
    Interval v = w_formula(clipped, f);
    return inside ? v : Interval::hull(v, zero);
}

Jet2 eval_w_formula_jet(const Jet2& u, const SmoothingSpec& spec, mpfr_prec_t prec) {
    return w_formula_jet(u, weight_form(spec, prec), prec);
}

Interval eval_W_real(const Interval& x, const SmoothingSpec& spec, mpfr_prec_t prec,
                     const Rational& target_width) {
    WeightForm f = weight_form(spec, prec);
    Rational B = support_end_rational(spec, prec);
    Integrand g;
    g.jet = [&f, &x, prec](const Interval& u) {
        Jet2 uj = Jet2::variable(u);
        Jet2 expo{-(x * u), -x, Interval::point(0, prec)};
        return jet_exp(expo) * w_formula_jet(uj, f, prec);
    };
    g.value = [&g](const Interval& u) { return g.jet(u).v; };
    QuadOptions opts;
    opts.prec = prec;
    opts.target_width = target_width;
    QuadResult r = integrate_enclosure(g, Rational(0), B, opts);
    // correction for the gap between the rational cutoff and the true support end
    Interval gap = (f.support_end - B).abs();
    Interval wband = w_formula(Interval::hull(Interval::from_rational(B, prec), f.support_end), f);
    Interval eband = iv_exp(x.abs() * f.support_end);
    Interval err = (wband.abs() * eband * gap).upper_half();
    return r.value + Interval::hull(-err, err);
}

Interval ford_C(const Interval& nu, const Interval& r, const SmoothingSpec& spec,
                mpfr_prec_t prec) {
    const ThetaConstants& tc = ThetaConstants::get(spec.theta, prec);
    if (mpfr_cmp(r.lo(), tc.tan_theta.hi()) <= 0)
        throw DomainError("ford_C: requires r > tan(theta)");
    Interval ex = iv_exp(-(nu * tc.theta_cot_theta * Rational(2))) + Rational(1);
    Interval numer = tc.ford_c2 * (r + Rational(1)).square() * ex + tc.ford_c1 * r +
                     tc.ford_c3 * r.pow_int(3);
    Interval denom = (r.square() - tc.tan_theta.square()).square();
    return tc.ford_c0 * r * numer / denom;
}

std::vector<Rational> b_coefficients(const SmoothingSpec& spec) {
    std::vector<Rational> b(spec.kappa.size() + 1, Rational(0));
    for (size_t m = 0; m < spec.kappa.size(); ++m) {
        b[m] += spec.kappa[m];
        b[m + 1] += spec.kappa[m];
    }
    return b;
}

const PrintedBPolynomials& printed_B_polynomials() {
    static const PrintedBPolynomials printed = [] {
        PrintedBPolynomials p;
        p.p_even_coeffs = {
            BigInt("112359769561546903428467326544"),
            BigInt("-229732179325278720034298507440"),
            BigInt("135673322742635307737680349343"),
            BigInt("-4484512641017853031179075270"),
            BigInt("-104378137212291977844887868"),
            BigInt("4077560173170236734684710"),
            BigInt("4061245152630328137981"),
        };
        p.q_leading = BigInt("4012454647232553285540000");
        return p;
    }();
    return printed;
}

Certificate build_B_certificate(const ProofParams& params, const SmoothingSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    const mpfr_prec_t prec = 192;
    Certificate cert;
    cert.id = "lemma-3.3-boundary";
    cert.claim = "B(y) = p(y)/q(y) > 0 for all real y (non-negativity on Re z = 0)";
    cert.precision_used = prec;

    const Rational eps0(1, 2000);
    const Rational slab_c0(151, 153);

    // kappa_0 term is dropped against Re W(iy/eta) >= 0, which needs b_0 >= 0
    cert.add_check("b0-nonnegative", spec.kappa[0].sign() >= 0,
                   "b_0 = kappa_0 = " + spec.kappa[0].to_string());

    // slab constant sits below 2 sigma_0 - 1
    Interval ts1 = params.two_sigma0_minus_1(prec);
    cert.add_check("slab-constant", ts1.definitely_greater(slab_c0),
                   "151/153 < 2 sigma0 - 1 = " + ts1.to_string(12));

    // |z| >= (2 sigma0 - 1)/eta0 > 138, then eps0 = 1/2000 absorbs the tail
    Interval zmin = ts1 / params.eta0(prec);
    cert.add_check("z-lower-bound", zmin.definitely_greater(Rational(138)),
                   "(2 sigma0 - 1)/eta0 = " + zmin.to_string(10));
    Interval C138 = ford_C(Interval::point(138, prec), Interval::point(138, prec), spec, prec);
    const ThetaConstants& tc = ThetaConstants::get(spec.theta, prec);
    Interval eps_val = params.eta0(prec).square() * C138 / (ts1.square() * tc.w0);
    cert.add_enclosure("C(138,138)", C138);
    cert.add_enclosure("eps0_value", eps_val);
    cert.add_check("eps0", eps_val.definitely_less(eps0),
                   "eta0^2 C(138,138) / ((2 sigma0-1)^2 w(0)) < 1/2000");

    // B(y) = sum_{m>=1} b_m n_m / (s_m + y^2); build p, q in t = y^2 exactly
    std::vector<Rational> b = b_coefficients(spec);
    struct Term {
        Rational coef, s;
    };
    std::vector<Term> terms;
    for (size_t m = 1; m < b.size(); ++m) {
        if (b[m].sign() == 0) continue;
        Rational mm(static_cast<long>(m));
        Rational n, s;
        if (b[m].sign() > 0) {
            n = mm - eps0 / mm;
            s = mm * mm;
        } else {
            n = mm + eps0 / mm;
            s = slab_c0 * slab_c0 * mm * mm;
        }
        terms.push_back({b[m] * n, s});
    }
    PolyQ den = PolyQ::constant(Rational(1));
    for (const auto& t : terms) den = den * PolyQ({t.s, Rational(1)});
    PolyQ num;
    for (size_t i = 0; i < terms.size(); ++i) {
        PolyQ prod = PolyQ::constant(terms[i].coef);
        for (size_t j = 0; j < terms.size(); ++j)
            if (j != i) prod = prod * PolyQ({terms[j].s, Rational(1)});
        num = num + prod;
    }
    if (num.is_zero()) {
        cert.add_check("nontrivial", false, "numerator vanishes identically");
        cert.settle();
        return cert;
    }

    // canonical integer pair: clear denominators jointly, divide joint content
    BigInt lcm(1);
    for (const auto& c : num.coeffs()) lcm = BigInt::lcm(lcm, c.den());
    for (const auto& c : den.coeffs()) lcm = BigInt::lcm(lcm, c.den());
    auto scale_to_int = [&lcm](const PolyQ& p) {
        std::vector<BigInt> out;
        for (const auto& c : p.coeffs()) out.push_back(c.num() * BigInt::divexact(lcm, c.den()));
        return out;
    };
    std::vector<BigInt> pz = scale_to_int(num), qz = scale_to_int(den);
    BigInt content(0);
    for (const auto& c : pz) content = BigInt::gcd(content, c);
    for (const auto& c : qz) content = BigInt::gcd(content, c);
    if (content > BigInt(1)) {
        for (auto& c : pz) c = BigInt::divexact(c, content);
        for (auto& c : qz) c = BigInt::divexact(c, content);
    }
    if (qz.back().sign() < 0) {
        for (auto& c : pz) c = -c;
        for (auto& c : qz) c = -c;
    }

    bool is_paper_kappa = spec.kappa == SmoothingSpec::paper().kappa;
    if (is_paper_kappa) {
        const PrintedBPolynomials& printed = printed_B_polynomials();
        bool coeffs_ok = pz.size() == printed.p_even_coeffs.size();
        if (coeffs_ok)
            for (size_t i = 0; i < pz.size(); ++i)
                if (pz[i] != printed.p_even_coeffs[i]) coeffs_ok = false;
        cert.add_check("printed-p-coefficients", coeffs_ok,
                       "computed p(y) matches all 7 printed coefficients");
        cert.add_check("printed-q-leading", qz.back() == printed.q_leading,
                       "computed q leading = " + qz.back().to_string());
        cert.witness["p_leading"] = pz.back().to_string();
        cert.witness["p_constant"] = pz.front().to_string();
    }

    // q > 0 on R: even-power structure (every s_m > 0) plus a root-count certificate
    bool all_s_positive = true;
    for (const auto& t : terms) all_s_positive = all_s_positive && t.s.sign() > 0;
    std::vector<Rational> qq;
    for (const auto& c : qz) qq.emplace_back(c, BigInt(1));
    PolyQ Q(qq);
    int q_roots = sturm_root_count(Q, DomainEnd::at(Rational(0)), DomainEnd::plus_inf());
    cert.add_check("q-positive", all_s_positive && q_roots == 0 && Q.eval(Rational(0)).sign() > 0,
                   "factored q has positive shifts; no roots for t = y^2 >= 0");

    // p has zero real roots in y, i.e. P(t) has none for t >= 0, and p(0) > 0
    std::vector<Rational> pq;
    for (const auto& c : pz) pq.emplace_back(c, BigInt(1));
    PolyQ P(pq);
    int p_roots_nonneg =
        (P.eval(Rational(0)).sign() == 0 ? 1 : 0) +
        sturm_root_count(P, DomainEnd::at(Rational(0)), DomainEnd::plus_inf());
    int p_roots_total = sturm_root_count_real_line(P);
    cert.witness["p_root_count_t_nonneg"] = std::to_string(p_roots_nonneg);
    cert.witness["p_root_count_t_line"] = std::to_string(p_roots_total);
    cert.add_check("p-free-of-real-roots", p_roots_nonneg == 0,
                   "p(y) has no real roots (no roots of P(t) with t >= 0)");
    cert.add_check("p-positive-at-0", P.eval(Rational(0)).sign() > 0,
                   "p(0) = " + P.eval(Rational(0)).to_string());

    cert.settle();
    cert.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

Certificate certify_tail_bound_44(const ProofParams& params, const SmoothingSpec& spec) {
    const mpfr_prec_t prec = 128;
    Certificate cert;
    cert.id = "lemma-3.3-tail";
    cert.claim = "Re F(z) + Re F(2 sigma - 1 - conj z) > -44 eta / (Im z)^2 for |Im z| >= T0";
    cert.precision_used = prec;
    const ThetaConstants& tc = ThetaConstants::get(spec.theta, prec);
    Interval eta0 = params.eta0(prec);
    Interval r = Interval::from_rational(params.T0, prec) / eta0;
    Interval Cm1 = ford_C(Interval::point(-1, prec), r, spec, prec);
    Interval C0 = ford_C(Interval::point(0, prec), r, spec, prec);
    Interval bracket = tc.w0 + (Cm1 + C0) * eta0.square() / params.T0;
    cert.add_enclosure("C(-1,T0/eta0)", Cm1);
    cert.add_enclosure("C(0,T0/eta0)", C0);
    cert.add_enclosure("bracket", bracket);
    cert.add_check("bracket-below-5.7", bracket.definitely_less(Rational(57, 10)),
                   "w(0) + (C(-1,.)+C(0,.)) eta0^2/T0 < 5.7");
    Interval total = bracket * Rational(2) * spec.kappa_abs_sum();
    cert.add_enclosure("tail_factor", total);
    cert.add_check("tail-below-44", total.definitely_less(Rational(44)),
                   "2 * 5.7-bracket * sum|kappa_m| <= 44");
    cert.settle();
    return cert;
}

Certificate certify_kappa_polynomial(const SmoothingSpec& spec) {
    Certificate cert;
    cert.id = "lemma-f-nonneg";
    cert.claim = "sum kappa_m x^m > 0 on (0, 1]";
    PolyQ p(spec.kappa);
    if (p.is_zero()) {
        cert.add_check("nonzero", false, "zero polynomial");
        cert.settle();
        return cert;
    }
    PositivityCertificate pos =
        certify_positive(p, Rational(0), Rational(1), BoundaryMode::Open, BoundaryMode::Closed);
    cert.witness["interior_root_count"] = std::to_string(pos.interior_root_count);
    cert.witness["p_at_1"] = p.eval(Rational(1)).to_string();
    cert.add_check("positive-on-(0,1]", pos.pass, pos.pass ? "" : pos.failure);
    cert.add_check("value-at-1", p.eval(Rational(1)).sign() > 0,
                   "p(1) = " + p.eval(Rational(1)).to_string());
    cert.settle();
    return cert;
}

Certificate certify_f_lower_bound(const ProofParams& params, const SmoothingSpec& spec,
                                  const PrecisionPolicy& policy) {
    auto t0 = std::chrono::steady_clock::now();
    Certificate cert;
    cert.id = "lemma-4.2";
    cert.claim = "-kappa w(0) + w(eta0 u) sum kappa_m e^{-d_m u} >= 0 on [0, 59]";

    const Rational u_star(1);  // derivative certificate on [0, 1], value cert on [1, 59]
    const Rational u_end(59);
    Rational kappa = spec.kappa_sum();

    auto attempt = [&](mpfr_prec_t prec) -> Decision {
        cert.checks.clear();
        cert.enclosures.clear();
        cert.precision_used = prec;
        WeightForm f = weight_form(spec, prec);
        Interval eta0 = params.eta0(prec);
        Interval ts1 = params.two_sigma0_minus_1(prec);
        // d_m = (2 sigma0 - 1) m for kappa_m < 0, m otherwise
        std::vector<Interval> d;
        for (int m = 0; m <= spec.M(); ++m) {
            if (spec.kappa[m].sign() < 0)
                d.push_back(ts1 * Rational(m));
            else
                d.push_back(Interval::point(m, prec));
        }
        auto phi_jet = [&](const Interval& u) {
            Jet2 uj = Jet2::variable(u);
            Jet2 wj = w_formula_jet(Jet2{eta0 * u, eta0, Interval::point(0, prec)}, f, prec);
            Jet2 g{Interval::point(0, prec), Interval::point(0, prec), Interval::point(0, prec)};
            for (int m = 0; m <= spec.M(); ++m) {
                Jet2 e = jet_exp(Jet2{-(d[m] * u), -d[m], Interval::point(0, prec)});
                g = g + e.scaled(spec.kappa[m]);
            }
            Jet2 r = wj * g;
            r.v = r.v - kappa * f.w0;
            (void)uj;
            return r;
        };
        // phase 1: phi' > 0 on [0, u_star] (phi(0) = 0 exactly by construction)
        {
            struct Seg {
                Rational a, b;
                int depth;
            };
            std::vector<Seg> stack{{Rational(0), u_star, 0}};
            while (!stack.empty()) {
                Seg s = stack.back();
                stack.pop_back();
                Interval cell = Interval::from_endpoints(s.a, s.b, prec);
                Jet2 j = phi_jet(cell);
                if (j.d1.is_positive()) continue;
                if (s.depth >= 40) return Decision::Indeterminate;
                Rational mid = (s.a + s.b) / Rational(2);
                stack.push_back({s.a, mid, s.depth + 1});
                stack.push_back({mid, s.b, s.depth + 1});
            }
            cert.add_check("derivative-positive-on-initial-segment", true,
                           "phi' > 0 on [0, " + u_star.to_string() + "], phi(0) = 0 exactly");
        }
        // phase 2: phi > 0 on [u_star, 59]
        {
            struct Seg {
                Rational a, b;
                int depth;
            };
            std::vector<Seg> stack{{u_star, u_end, 0}};
            long cells = 0;
            while (!stack.empty()) {
                Seg s = stack.back();
                stack.pop_back();
                Interval cell = Interval::from_endpoints(s.a, s.b, prec);
                Interval v = phi_jet(cell).v;
                ++cells;
                if (v.is_positive()) continue;
                if (v.is_negative()) {
                    cert.add_check("positive-on-main-segment", false,
                                   "phi < 0 near u in [" + s.a.to_string() + ", " + s.b.to_string() + "]");
                    return Decision::False;
                }
                if (s.depth >= 48) return Decision::Indeterminate;
                Rational mid = (s.a + s.b) / Rational(2);
                stack.push_back({s.a, mid, s.depth + 1});
                stack.push_back({mid, s.b, s.depth + 1});
            }
            cert.witness["main_segment_cells"] = std::to_string(cells);
            cert.add_check("positive-on-main-segment", true, "");
        }
        Interval at59 = phi_jet(Interval::point(59, prec)).v;
        cert.add_enclosure("phi(59)", at59);
        cert.add_check("value-at-59", at59.is_positive(), "phi(59) > 0");
        return Decision::True;
    };

    Decision d = decide_with_escalation(policy, attempt);
    if (d == Decision::Indeterminate) {
        cert.add_check_status("subdivision", CertStatus::Indeterminate,
                              "could not separate from zero at the precision ceiling");
    }
    cert.settle();
    cert.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

Rational efficiency_constant(const SmoothingSpec& spec) {
    Rational s = spec.kappa_sum();
    if (s.sign() == 0) throw std::domain_error("efficiency_constant: sum of kappa vanishes");
    return s.inverse();
}

namespace {

// integral_{lo}^{hi} u^n e^{-su} (alpha + beta u) du for the trig-free part;
// s in {0, 1}.
Interval plain_piece(int n, int s, const Interval& alpha, const Interval& beta, const Interval& lo,
                     const Interval& hi, mpfr_prec_t prec) {
    if (s == 0) {
        Interval hn1 = hi.pow_int(n + 1) - lo.pow_int(n + 1);
        Interval hn2 = hi.pow_int(n + 2) - lo.pow_int(n + 2);
        return alpha * hn1 / Rational(n + 1) + beta * hn2 / Rational(n + 2);
    }
    Rect zeta{Interval::point(-s, prec), Interval::point(0, prec)};
    Rect a = integral_uj_exp(n, zeta, lo, hi);
    Rect b = integral_uj_exp(n + 1, zeta, lo, hi);
    return alpha * a.re + beta * b.re;
}

// integral u^n e^{-su} (alpha + beta u) cos(tau u) du and the sin analogue
Interval trig_piece(int n, int s, bool sine, const Interval& alpha, const Interval& beta,
                    const Interval& tau, const Interval& lo, const Interval& hi,
                    mpfr_prec_t prec) {
    Rect zeta{Interval::point(-s, prec), tau};
    Rect a = integral_uj_exp(n, zeta, lo, hi);
    Rect b = integral_uj_exp(n + 1, zeta, lo, hi);
    // e^{-su} cos(tau u) = Re e^{zeta u}; sin = Im
    if (!sine) return alpha * a.re + beta * b.re;
    return alpha * a.im + beta * b.im;
}

// integral_{lo}^{hi} u^n e^{-su} w(u) du via antiderivatives
Interval moment_piece(int n, int s, const WeightForm& f, const Interval& lo, const Interval& hi,
                      mpfr_prec_t prec) {
    Interval r = plain_piece(n, s, f.p1a, f.p1b, lo, hi, prec);
    r = r + trig_piece(n, s, false, f.p2a, f.p2b, f.tau, lo, hi, prec);
    Interval zero = Interval::point(0, prec);
    r = r + trig_piece(n, s, true, f.p3, zero, f.tau, lo, hi, prec);
    return r;
}

}  // namespace

Interval weight_moment_exact(int n, int s, const SmoothingSpec& spec, mpfr_prec_t prec) {
    WeightForm f = weight_form(spec, prec);
    Interval lo = Interval::point(0, prec);
    return moment_piece(n, s, f, lo, f.support_end, prec);
}

MomentConstants moment_constants(const Rational& a0, const Rational& a1,
                                 const SmoothingSpec& spec, mpfr_prec_t prec) {
    WeightForm f = weight_form(spec, prec);
    Interval zero = Interval::point(0, prec);
    MomentConstants mc;
    auto c_n = [&](int n) {
        return moment_piece(n, 1, f, zero, f.support_end, prec) * a1 -
               moment_piece(n, 0, f, zero, f.support_end, prec) * a0;
    };
    mc.c0 = c_n(0);
    mc.c1 = c_n(1);
    mc.c2 = c_n(2);
    mc.c3 = c_n(3);
    // c* = integral u^3 |a1 e^{-u} - a0| w du; the factor changes sign once at
    // u* = log(a1/a0): c* = 2 F(u*) - F(0) - F(L) for the antiderivative F of
    // the signed integrand.
    Interval ustar = iv_log(Interval::from_rational(a1 / a0, prec));
    auto F_diff = [&](const Interval& from, const Interval& to) {
        return moment_piece(3, 1, f, from, to, prec) * a1 -
               moment_piece(3, 0, f, from, to, prec) * a0;
    };
    mc.cstar = F_diff(zero, ustar) - F_diff(ustar, f.support_end);
    return mc;
}

Interval main_term_difference(const Interval& mu, const Rational& a0, const Rational& a1,
                              const SmoothingSpec& spec, mpfr_prec_t prec,
                              const Rational& target_width) {
    WeightForm f = weight_form(spec, prec);
    Rational B = support_end_rational(spec, prec);
    Integrand g;
    g.jet = [&](const Interval& u) {
        Jet2 uj = Jet2::variable(u);
        Jet2 emu = jet_exp(Jet2{mu * u, mu, Interval::point(0, prec)});
        Jet2 em = jet_exp(Jet2{-u, Interval::point(-1, prec), Interval::point(0, prec)});
        Jet2 factor = em.scaled(a1);
        factor.v = factor.v - a0;
        return emu * factor * w_formula_jet(uj, f, prec);
    };
    g.value = [&g](const Interval& u) { return g.jet(u).v; };
    QuadOptions opts;
    opts.prec = prec;
    opts.target_width = target_width;
    QuadResult r = integrate_enclosure(g, Rational(0), B, opts);
    Interval gap = (f.support_end - B).abs();
    Interval wband = w_formula(Interval::hull(Interval::from_rational(B, prec), f.support_end), f);
    Interval scale = iv_exp(mu.abs() * f.support_end) * Rational(3);
    Interval err = (wband.abs() * scale * gap).upper_half();
    return r.value + Interval::hull(-err, err);
}

Interval eval_W_real_closed_form(const Interval& x, const SmoothingSpec& spec, mpfr_prec_t prec) {
    if (!x.abs().definitely_greater(Rational(1, 2)))
        throw DomainError("eval_W_real_closed_form: |x| >= 1/2 required");
    WeightForm f = weight_form(spec, prec);
    Interval lo = Interval::point(0, prec);
    const Interval& hi = f.support_end;
    Rect zeta_plain{-x, Interval::point(0, prec)};
    Rect a = integral_uj_exp(0, zeta_plain, lo, hi);
    Rect b = integral_uj_exp(1, zeta_plain, lo, hi);
    Interval r = f.p1a * a.re + f.p1b * b.re;
    Rect zeta_trig{-x, f.tau};
    Rect at = integral_uj_exp(0, zeta_trig, lo, hi);
    Rect bt = integral_uj_exp(1, zeta_trig, lo, hi);
    r = r + f.p2a * at.re + f.p2b * bt.re;
    r = r + f.p3 * at.im;
    return r;
}

}  // namespace zetafree
