#pragma once

#include <map>

#include "zetafree/certificate.hpp"
#include "zetafree/params.hpp"
#include "zetafree/polynomial.hpp"

namespace zetafree {

// Non-negative cosine polynomial P(x) = sum a_k cos(kx) in modulus-squared
// form: P = |sum c_k e^{ikx}|^2 / normalizer.
struct TrigPoly {
    std::vector<long> c;
    long normalizer = 0;
    std::vector<Rational> a;  // derived autocorrelation coefficients

    static TrigPoly paper();  // K = 16, normalizer 14912370
    int K() const { return static_cast<int>(c.size()) - 1; }
    Rational a_sum() const;  // a = sum_{k>=1} a_k
    // exact power-basis polynomial P(y) with y = cos x
    PolyQ chebyshev_form() const;
    void validate() const;  // a0 = 1, a1 > a0, a_k >= 0
};

// Exact autocorrelation a_k = (2 - [k=0]) sum_j c_j c_{j+k} / normalizer.
// Throws if a0 = 1 is asserted but sum c_k^2 != normalizer.
std::vector<Rational> derive_a_coefficients(const std::vector<long>& c, long normalizer);

// Per-prime partial sum G_p(sigma, x) = sum_{l<=15K} b_l(sigma) cos(l x).
struct GpPoly {
    long p = 0;
    std::vector<Rational> cheb_at_1;                     // b_l(1), l = 0..15K, exact
    std::vector<std::vector<std::pair<int, int>>> divs;  // per l: (k, l/k) pairs
    const TrigPoly* poly = nullptr;

    Rational b_at_1(int ell) const { return cheb_at_1[ell]; }
    Interval b_at_sigma(int ell, const Interval& sigma, mpfr_prec_t prec) const;
};
GpPoly build_Gp(long p, const ProofParams& params, const TrigPoly& poly);

// Printed Table-1 lower bounds m_p as exact decimal rationals.
const std::map<long, Rational>& printed_mp_table();

// Certified lower bound for min_x G_p(1, x): re-certifies the printed m_p via
// P_p(y) - m_p > 0 on [-1, 1] and computes the artifact's own certified
// minimum enclosure (which may be sharper than the printed truncation).
struct MpResult {
    long p = 0;
    Rational printed;
    Certificate cert;      // the P_p - m_p > 0 certificate for the printed value
    Interval own_min;      // certified enclosure of the true minimum
    Rational own_bound;    // own_min.lo truncated down to 8 decimals
    bool printed_valid() const { return cert.passed(); }
};
MpResult certify_mp(long p, const TrigPoly& poly, const PrecisionPolicy& policy = {});

// dG_p/dsigma < 0 on [sigma0, 1] x [0, 2pi]: by the exact reindexing
// -dG_p/dsigma = log p * sum_m m p^{-m sigma} P(m x) and strict positivity of P.
Certificate certify_dGp_dsigma_negative(long p, const ProofParams& params, const TrigPoly& poly);

// sum_{p<100} (log p) m_p > 0.23545 and 0.23545 kappa > 0.1186, using the
// certified per-prime lower bounds (printed values where valid, the artifact's
// own certified bounds otherwise).
Certificate lemma_4_1_constant(const TrigPoly& poly, const ProofParams& params,
                               const SmoothingSpec& spec, const std::vector<MpResult>& mp);

// Soundness of discarding p > 100 and m > 15: every discarded term is
// nonnegative (strict positivity of P), the worst-case discarded mass of the
// m > 15 terms fits inside the Lemma 4.1 margin, and the wholly-discarded
// prime tail is enclosed by a Chebyshev-psi style majorant.
Certificate discard_tail_bounds(const ProofParams& params, const TrigPoly& poly,
                                const SmoothingSpec& spec);

// Clenshaw evaluation of sum coeffs[l] T_l(y) with interval coefficients.
Interval cheb_series_eval(const std::vector<Interval>& coeffs, const Interval& y);
// T-basis coefficients of the derivative series, exact.
std::vector<Rational> cheb_series_derivative(const std::vector<Rational>& coeffs);
// Enclosure of min over [-1, 1] of an exact-coefficient Chebyshev series.
Interval cheb_series_min_enclosure(const std::vector<Rational>& coeffs, mpfr_prec_t prec,
                                   const Rational& tol, int max_depth = 60);

}  // namespace zetafree
