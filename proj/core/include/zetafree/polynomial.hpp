#pragma once

#include <optional>
#include <vector>

#include "zetafree/interval.hpp"
#include "zetafree/rational.hpp"

namespace zetafree {

// Dense univariate polynomial with exact rational coefficients, ascending
// degree order. Normalized: no trailing zero coefficients (the zero
// polynomial has an empty coefficient list).
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);
    static PolyQ constant(const Rational& c);
    static PolyQ monomial(const Rational& c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ operator-() const;
    PolyQ scaled(const Rational& s) const;

    PolyQ derivative() const;
    Rational eval(const Rational& x) const;
    Interval eval_iv(const Interval& x) const;  // Horner with outward rounding

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void normalize();
};

// Endpoint of a root-counting domain: finite rational or +/- infinity.
struct DomainEnd {
    enum Kind { MinusInf, Finite, PlusInf } kind = Finite;
    Rational value;
    static DomainEnd minus_inf() { return {MinusInf, Rational(0)}; }
    static DomainEnd plus_inf() { return {PlusInf, Rational(0)}; }
    static DomainEnd at(const Rational& v) { return {Finite, v}; }
};

// Number of distinct real roots of p in (a, b], by Sturm's theorem on the
// square-free part (exact gcd, primitive-part reduction at every chain step).
// Throws on the zero polynomial.
int sturm_root_count(const PolyQ& p, const DomainEnd& a, const DomainEnd& b);
int sturm_root_count_real_line(const PolyQ& p);

// Disjoint isolating intervals, one per distinct real root in (a, b].
struct RootIsolation {
    PolyQ polynomial;
    std::vector<std::pair<Rational, Rational>> intervals;  // (lo, hi], or exact [r, r]
    int total_real_root_count = 0;
};
RootIsolation isolate_real_roots(const PolyQ& p, const Rational& a, const Rational& b);
RootIsolation isolate_real_roots(const PolyQ& p);  // whole line, via a Cauchy bound

enum class BoundaryMode { Open, Closed };

struct PositivityCertificate {
    bool pass = false;
    int interior_root_count = -1;
    Rational sample_point;
    Rational sample_value;
    std::string failure;  // empty on pass
};

// PASS iff p > 0 on the open interior of [a, b] and, for each Closed end,
// p(end) > 0 as well. The witness records the interior root count and one
// exact sample evaluation.
PositivityCertificate certify_positive(const PolyQ& p, const Rational& a, const Rational& b,
                                       BoundaryMode left, BoundaryMode right);

// Degree-ell Chebyshev polynomial of the first kind, exact integer
// coefficients via T_l = 2 y T_{l-1} - T_{l-2}. Cached; ell <= 240.
const PolyQ& chebyshev_expand(int ell);

// Interval guaranteed to contain min_{x in [a,b]} p(x): isolates the critical
// points of p and evaluates p on refined enclosures and at the endpoints.
Interval poly_min_enclosure(const PolyQ& p, const Rational& a, const Rational& b,
                            mpfr_prec_t prec = Interval::kDefaultPrec);

// Square-free part p / gcd(p, p'), used by the root-counting machinery and
// exposed for tests.
PolyQ square_free_part(const PolyQ& p);

}  // namespace zetafree
