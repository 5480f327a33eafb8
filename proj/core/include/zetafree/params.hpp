#pragma once

#include <vector>

#include "zetafree/interval.hpp"
#include "zetafree/rational.hpp"

namespace zetafree {

// Weight-function parameters: the opening angle theta and the coefficient
// vector of the exponential-sum factor. Fully determines w, f, W, F.
struct SmoothingSpec {
    Rational theta = Rational(5669, 5000);  // 1.1338 rad
    std::vector<Rational> kappa;            // kappa_0 .. kappa_M

    SmoothingSpec();
    static SmoothingSpec paper();
    static SmoothingSpec with_kappa(std::vector<Rational> kappa);

    int M() const { return static_cast<int>(kappa.size()) - 1; }
    Rational kappa_sum() const;             // kappa = sum kappa_m
    Rational kappa_abs_sum() const;         // sum |kappa_m| over all m
    Rational kappa_abs_sum_tail() const;    // sum |kappa_m| over m >= 1
    void validate() const;                  // 0 < theta < pi/2, kappa_0 = 1, sum > 0
};

// Constants derived from theta alone, cached per (theta, precision).
struct ThetaConstants {
    Interval theta;
    Interval tan_theta;
    Interval sec2;             // sec^2 theta
    Interval theta_cot_theta;  // theta cot theta
    Interval support_end;      // 2 theta cot theta, right end of supp w
    Interval csc_theta;
    Interval csc_2theta;
    Interval w0;  // w(0) = sec^2(theta) (theta tan theta + 3 theta cot theta - 3)
    // Ford's tail-bound constants (distinct from the slab constant 151/153 and
    // the moment integrals c_n)
    Interval ford_c0, ford_c1, ford_c2, ford_c3;

    static const ThetaConstants& get(const Rational& theta, mpfr_prec_t prec);
};

enum class Variant { Lemma21, Lemma22 };

// Proof-wide parameters. A0 is the zero-free-region constant under iteration;
// eta0, sigma0, mu0, x0 are derived interval quantities.
struct ProofParams {
    Rational A0;
    Rational H = Rational(3) * Rational(10).pow(12);
    Rational T0 = Rational(10).pow(10);
    long K = 16;
    long prime_cutoff = 100;
    long power_cutoff = 15;
    Rational epsilon = Rational(1) / Rational(10).pow(100);
    Rational log_t_max = Rational(7647, 100);  // 76.47
    Rational log_N = Rational(59);             // discard n > N = e^59
    Variant variant = Variant::Lemma21;

    static ProofParams lemma21();  // A0 = 1/4.896, endpoint 76.47
    static ProofParams lemma22();  // A0 = 1/4.8594, endpoint 56.693
    static ProofParams with_A0(const Rational& A0);

    Interval log_H(mpfr_prec_t prec) const;
    Interval log_KH_T0(mpfr_prec_t prec) const;  // log(K H + T0)
    Interval eta0(mpfr_prec_t prec) const;       // A0 / log H
    Interval sigma0(mpfr_prec_t prec) const;     // 1 - A0 / log(K H + T0)
    Interval two_sigma0_minus_1(mpfr_prec_t prec) const;
    Interval mu0(mpfr_prec_t prec) const;  // (1 - sigma0)/eta0 - 1e-10
    Interval x0(mpfr_prec_t prec) const;   // sigma0 - 1/2
    void validate(mpfr_prec_t prec = Interval::kDefaultPrec) const;

    std::string canonical_string() const;  // for the certificate-store digest
};

}  // namespace zetafree
