#pragma once

#include "zetafree/certificate.hpp"
#include "zetafree/params.hpp"
#include "zetafree/polynomial.hpp"
#include "zetafree/quadrature.hpp"

namespace zetafree {

// Compactly supported weight w on [0, 2 theta cot theta], zero elsewhere.
// Straddling inputs take the interval hull with 0.
Interval eval_w(const Interval& u, const SmoothingSpec& spec,
                mpfr_prec_t prec = Interval::kDefaultPrec);

// The closed-form branch of w (valid as a smooth formula for any u), with
// first and second derivatives. Callers are responsible for staying inside
// the support when using it as w.
Jet2 eval_w_formula_jet(const Jet2& u, const SmoothingSpec& spec, mpfr_prec_t prec);

// W(x) = integral_0^inf e^{-xu} w(u) du for real x, by adaptive quadrature.
Interval eval_W_real(const Interval& x, const SmoothingSpec& spec,
                     mpfr_prec_t prec = Interval::kDefaultPrec,
                     const Rational& target_width = Rational(1, 10000000000L));

// Same quantity through the exact antiderivative; |x| >= 1/2 required (the
// plain-exponential part degenerates near x = 0). Used as an independent
// cross-check of the quadrature route.
Interval eval_W_real_closed_form(const Interval& x, const SmoothingSpec& spec,
                                 mpfr_prec_t prec = Interval::kDefaultPrec);

// Ford's tail-bound constant C(nu, r); requires r > tan theta.
Interval ford_C(const Interval& nu, const Interval& r, const SmoothingSpec& spec,
                mpfr_prec_t prec = Interval::kDefaultPrec);

// Convolution coefficients: (1 + x) sum kappa_m x^m = sum b_m x^m.
std::vector<Rational> b_coefficients(const SmoothingSpec& spec);

// Printed certificate polynomial for the paper's kappa vector.
struct PrintedBPolynomials {
    std::vector<BigInt> p_even_coeffs;  // coefficients of p in t = y^2, ascending
    BigInt q_leading;                   // scalar in front of the factored q
};
const PrintedBPolynomials& printed_B_polynomials();

// Non-negativity certificate on the boundary line Re z = 0: builds B(y) from
// the sign-split slab bounds, clears denominators into exact p, q, certifies
// q > 0 on R and p root-free with p(0) > 0; for the paper's kappa vector also
// matches the printed coefficients exactly.
Certificate build_B_certificate(const ProofParams& params, const SmoothingSpec& spec);

// Far-zero tail bound on |Im z| >= T0: certifies the bracket
// w(0) + (C(-1,T0/eta0) + C(0,T0/eta0)) eta0^2/T0 < 5.7 and 2*5.7*sum|kappa| <= 44.
Certificate certify_tail_bound_44(const ProofParams& params, const SmoothingSpec& spec);

// sum kappa_m x^m > 0 on (0, 1].
Certificate certify_kappa_polynomial(const SmoothingSpec& spec);

// -kappa w(0) + w(eta0 u) sum kappa_m e^{-d_m u} >= 0 for u in [0, 59]:
// tangency at u = 0 handled by a derivative certificate on an initial segment,
// adaptive subdivision on the rest.
Certificate certify_f_lower_bound(const ProofParams& params, const SmoothingSpec& spec,
                                  const PrecisionPolicy& policy = {});

// Leading efficiency constant 1 / sum kappa_m.
Rational efficiency_constant(const SmoothingSpec& spec);

// Moment integrals of the weighted kernel (Lemma "C_1" machinery):
//   c_n = integral u^n (a1 e^{-u} - a0) w(u) du,  n = 0..3
//   c*  = integral u^3 |a1 e^{-u} - a0| w(u) du
// computed through exact antiderivatives (enclosure width ~ rounding only).
struct MomentConstants {
    Interval c0, c1, c2, c3, cstar;
};
MomentConstants moment_constants(const Rational& a0, const Rational& a1,
                                 const SmoothingSpec& spec,
                                 mpfr_prec_t prec = Interval::kDefaultPrec);

// integral_0^L u^n e^{-su} w(u) du by antiderivatives, s in {0, 1} scaled by
// `a` — the building block behind moment_constants, exposed for tests.
Interval weight_moment_exact(int n, int s, const SmoothingSpec& spec, mpfr_prec_t prec);

// a1 W(1-mu) - a0 W(-mu) = integral e^{mu u}(a1 e^{-u} - a0) w(u) du as a
// function of an interval mu, via quadrature (used for the C1 domination).
Interval main_term_difference(const Interval& mu, const Rational& a0, const Rational& a1,
                              const SmoothingSpec& spec, mpfr_prec_t prec,
                              const Rational& target_width);

}  // namespace zetafree
