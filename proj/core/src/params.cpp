#include "zetafree/params.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace zetafree {

namespace {

std::vector<Rational> paper_kappa() {
    return {Rational(1),        Rational(-851, 859), Rational(780, 859), Rational(-525, 859),
            Rational(171, 859), Rational(28, 859),   Rational(-29, 859)};
}

}  // namespace

SmoothingSpec::SmoothingSpec() : kappa(paper_kappa()) {}

SmoothingSpec SmoothingSpec::paper() { return SmoothingSpec(); }

SmoothingSpec SmoothingSpec::with_kappa(std::vector<Rational> k) {
    SmoothingSpec s;
    s.kappa = std::move(k);
    return s;
}

Rational SmoothingSpec::kappa_sum() const {
    Rational s(0);
    for (const auto& k : kappa) s += k;
    return s;
}

Rational SmoothingSpec::kappa_abs_sum() const {
    Rational s(0);
    for (const auto& k : kappa) s += k.abs();
    return s;
}

Rational SmoothingSpec::kappa_abs_sum_tail() const {
    Rational s(0);
    for (size_t m = 1; m < kappa.size(); ++m) s += kappa[m].abs();
    return s;
}

void SmoothingSpec::validate() const {
    if (kappa.empty()) throw std::invalid_argument("SmoothingSpec: empty kappa vector");
    if (theta.sign() <= 0) throw std::invalid_argument("SmoothingSpec: theta must be positive");
    Interval th = Interval::from_rational(theta, 64);
    if (!th.definitely_less(iv_pi(64) * Rational(1, 2)))
        throw std::invalid_argument("SmoothingSpec: theta must be < pi/2");
    if (kappa_sum().sign() <= 0)
        throw std::invalid_argument("SmoothingSpec: sum of kappa must be positive");
}

const ThetaConstants& ThetaConstants::get(const Rational& theta, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<std::string, long>, ThetaConstants> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(theta.to_string(), static_cast<long>(prec));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ThetaConstants tc;
    Interval th = Interval::from_rational(theta, prec);
    tc.theta = th;
    tc.tan_theta = iv_tan(th);
    Interval sec_th = iv_sec(th);
    tc.sec2 = sec_th.square();
    Interval cot_th = iv_cot(th);
    tc.theta_cot_theta = th * cot_th;
    tc.support_end = tc.theta_cot_theta * Rational(2);
    tc.csc_theta = iv_csc(th);
    tc.csc_2theta = iv_csc(th * Rational(2));
    tc.w0 = tc.sec2 * (th * tc.tan_theta + tc.theta_cot_theta * Rational(3) - Rational(3));
    Interval sincos = iv_sin(th) * iv_cos(th);
    tc.ford_c0 = tc.csc_theta * tc.sec2;
    tc.ford_c1 = (th - sincos) * tc.tan_theta.pow_int(4);
    tc.ford_c2 = tc.tan_theta.pow_int(3) * iv_sin(th).square();
    tc.ford_c3 = (th - sincos) * tc.tan_theta.square();
    auto [pos, inserted] = cache.emplace(key, std::move(tc));
    return pos->second;
}

ProofParams ProofParams::lemma21() {
    ProofParams p;
    p.A0 = Rational(1000, 4896);
    p.log_t_max = Rational(7647, 100);
    p.variant = Variant::Lemma21;
    return p;
}

ProofParams ProofParams::lemma22() {
    ProofParams p;
    p.A0 = Rational(10000, 48594);
    p.log_t_max = Rational(56693, 1000);
    p.variant = Variant::Lemma22;
    return p;
}

ProofParams ProofParams::with_A0(const Rational& A0) {
    ProofParams p = lemma21();
    p.A0 = A0;
    return p;
}

Interval ProofParams::log_H(mpfr_prec_t prec) const {
    return iv_log(Interval::from_rational(H, prec));
}

Interval ProofParams::log_KH_T0(mpfr_prec_t prec) const {
    return iv_log(Interval::from_rational(Rational(K) * H + T0, prec));
}

Interval ProofParams::eta0(mpfr_prec_t prec) const {
    return Interval::from_rational(A0, prec) / log_H(prec);
}

Interval ProofParams::sigma0(mpfr_prec_t prec) const {
    return Rational(1) - Interval::from_rational(A0, prec) / log_KH_T0(prec);
}

Interval ProofParams::two_sigma0_minus_1(mpfr_prec_t prec) const {
    return sigma0(prec) * Rational(2) - Rational(1);
}

Interval ProofParams::mu0(mpfr_prec_t prec) const {
    return (Rational(1) - sigma0(prec)) / eta0(prec) - Rational(1, 10000000000L);
}

Interval ProofParams::x0(mpfr_prec_t prec) const {
    return sigma0(prec) - Rational(1, 2);
}

void ProofParams::validate(mpfr_prec_t prec) const {
    if (!(A0 > Rational(1, 6)) || !(A0 <= Rational(100, 485)))
        throw std::invalid_argument("ProofParams: need 1/6 < A0 <= 1/4.85");
    if (!eta0(prec).definitely_less(Rational(8, 1000)))
        throw std::invalid_argument("ProofParams: eta0 must be < 0.008");
    if (!sigma0(prec).definitely_greater(Rational(99, 100)))
        throw std::invalid_argument("ProofParams: sigma0 must be > 0.99");
    Interval m = mu0(prec);
    if (!m.definitely_greater(Rational(9, 10)) || !m.definitely_less(Rational(1)))
        throw std::invalid_argument("ProofParams: mu0 must lie in (0.9, 1)");
}

std::string ProofParams::canonical_string() const {
    std::ostringstream os;
    os << "A0=" << A0 << ";H=" << H << ";T0=" << T0 << ";K=" << K << ";pc=" << prime_cutoff
       << ";mc=" << power_cutoff << ";ltm=" << log_t_max << ";lN=" << log_N
       << ";v=" << (variant == Variant::Lemma21 ? "2.1" : "2.2");
    return os.str();
}

}  // namespace zetafree
