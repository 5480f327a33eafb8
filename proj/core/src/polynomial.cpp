#include "zetafree/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace zetafree {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void PolyQ::normalize() {
    while (!c_.empty() && c_.back().sign() == 0) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return PolyQ(std::move(v));
}

Rational PolyQ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

const Rational& PolyQ::leading() const {
    if (c_.empty()) throw std::logic_error("PolyQ: leading coefficient of zero polynomial");
    return c_.back();
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return PolyQ(std::move(r));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return PolyQ(std::move(r));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::scaled(const Rational& s) const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rational> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
    return PolyQ(std::move(r));
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval PolyQ::eval_iv(const Interval& x) const {
    Interval acc = Interval::point(0, x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].sign() == 0) continue;
        if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        Rational a = c_[i].abs();
        if (i == 0 || a != Rational(1)) os << a.to_string();
        if (i > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Integer primitive form and Sturm chains
// ---------------------------------------------------------------------------

namespace {

// integer polynomial, ascending coefficients, used internally for the chains
using PolyZ = std::vector<BigInt>;

void znormalize(PolyZ& p) {
    while (!p.empty() && p.back().sign() == 0) p.pop_back();
}

BigInt zcontent(const PolyZ& p) {
    BigInt g(0);
    for (const auto& c : p) g = BigInt::gcd(g, c);
    return g;
}

void make_primitive(PolyZ& p) {
    znormalize(p);
    if (p.empty()) return;
    BigInt g = zcontent(p);
    if (g > BigInt(1))
        for (auto& c : p) c = BigInt::divexact(c, g);
}

PolyZ to_integer_primitive(const PolyQ& p) {
    BigInt l(1);
    for (const auto& c : p.coeffs()) l = BigInt::lcm(l, c.den());
    PolyZ r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(c.num() * BigInt::divexact(l, c.den()));
    make_primitive(r);
    return r;
}

PolyZ zderivative(const PolyZ& p) {
    PolyZ r;
    if (p.size() <= 1) return r;
    r.reserve(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * BigInt(static_cast<long>(i)));
    return r;
}

// Pseudo-remainder of a by b with the sign of the true remainder preserved
// (the multiplier lc(b)^(da-db+1) is forced positive).
PolyZ true_sign_prem(PolyZ a, const PolyZ& b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    if (db < 0) throw std::logic_error("prem: division by zero polynomial");
    const BigInt& lb = b.back();
    int steps = da - db + 1;
    bool flip = (lb.sign() < 0) && (steps % 2 == 1);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int d = static_cast<int>(a.size()) - 1 - db;
        BigInt la = a.back();
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) a[d + i] = a[d + i] - la * b[i];
        znormalize(a);
    }
    if (flip)
        for (auto& c : a) c = -c;
    return a;
}

PolyZ zgcd(PolyZ a, PolyZ b) {
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        PolyZ r = true_sign_prem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back().sign() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Exact division of integer polynomials (b must divide a).
PolyZ zdivexact(const PolyZ& a, const PolyZ& b) {
    if (b.empty()) throw std::logic_error("zdivexact: zero divisor");
    PolyZ rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        int d = static_cast<int>(rem.size()) - 1 - db;
        BigInt qc = BigInt::divexact(rem.back(), b.back());
        q[d] = qc;
        for (int i = 0; i <= db; ++i) rem[d + i] = rem[d + i] - qc * b[i];
        znormalize(rem);
    }
    if (!rem.empty()) throw std::logic_error("zdivexact: inexact polynomial division");
    return q;
}

struct SturmChain {
    std::vector<PolyZ> seq;
};

SturmChain sturm_chain_squarefree(const PolyQ& p) {
    PolyZ p0 = to_integer_primitive(p);
    if (p0.empty()) throw std::invalid_argument("sturm: zero polynomial");
    PolyZ d = zderivative(p0);
    if (!d.empty()) {
        PolyZ g = zgcd(p0, d);
        if (g.size() > 1) p0 = zdivexact(p0, g);  // square-free part
        make_primitive(p0);
    }
    SturmChain ch;
    ch.seq.push_back(p0);
    PolyZ p1 = zderivative(p0);
    make_primitive(p1);
    if (p1.empty()) return ch;
    ch.seq.push_back(p1);
    while (true) {
        const PolyZ& a = ch.seq[ch.seq.size() - 2];
        const PolyZ& b = ch.seq[ch.seq.size() - 1];
        if (b.size() <= 1) break;  // constant: chain ends
        PolyZ r = true_sign_prem(a, b);
        if (r.empty()) break;  // should not happen for square-free input
        make_primitive(r);
        for (auto& c : r) c = -c;
        ch.seq.push_back(std::move(r));
    }
    return ch;
}

int sign_at(const PolyZ& p, const DomainEnd& e) {
    if (p.empty()) return 0;
    switch (e.kind) {
        case DomainEnd::PlusInf:
            return p.back().sign();
        case DomainEnd::MinusInf: {
            int s = p.back().sign();
            return (p.size() - 1) % 2 == 0 ? s : -s;
        }
        case DomainEnd::Finite: {
            Rational acc(0);
            for (auto it = p.rbegin(); it != p.rend(); ++it)
                acc = acc * e.value + Rational(*it, BigInt(1));
            return acc.sign();
        }
    }
    return 0;
}

int sign_variations(const SturmChain& ch, const DomainEnd& e) {
    int v = 0, prev = 0;
    for (const auto& p : ch.seq) {
        int s = sign_at(p, e);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

PolyQ square_free_part(const PolyQ& p) {
    PolyZ z = to_integer_primitive(p);
    if (z.empty()) return PolyQ();
    PolyZ d = zderivative(z);
    if (!d.empty()) {
        PolyZ g = zgcd(z, d);
        if (g.size() > 1) z = zdivexact(z, g);
    }
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& x : z) c.emplace_back(x, BigInt(1));
    return PolyQ(std::move(c));
}

int sturm_root_count(const PolyQ& p, const DomainEnd& a, const DomainEnd& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    SturmChain ch = sturm_chain_squarefree(p);
    return sign_variations(ch, a) - sign_variations(ch, b);
}

int sturm_root_count_real_line(const PolyQ& p) {
    return sturm_root_count(p, DomainEnd::minus_inf(), DomainEnd::plus_inf());
}

namespace {

Rational cauchy_root_bound(const PolyQ& p) {
    // all real roots lie in (-B, B) with B = 1 + max |c_i| / |lead|
    Rational m(0);
    Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = p.coeff(i).abs() / lead;
        if (a > m) m = a;
    }
    return m + Rational(1);
}

}  // namespace

RootIsolation isolate_real_roots(const PolyQ& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    RootIsolation out;
    out.polynomial = p;
    PolyQ sf = square_free_part(p);
    SturmChain ch = sturm_chain_squarefree(p);
    auto count = [&](const Rational& lo, const Rational& hi) {
        return sign_variations(ch, DomainEnd::at(lo)) - sign_variations(ch, DomainEnd::at(hi));
    };
    // split point inside (lo, hi) that is not a root of the square-free part
    auto nonroot_split = [&](const Rational& lo, const Rational& hi) {
        static const long nums[] = {1, 1, 2, 1, 3, 2, 3};
        static const long dens[] = {2, 3, 3, 5, 5, 7, 7};
        for (size_t i = 0; i < sizeof(nums) / sizeof(nums[0]); ++i) {
            Rational m = lo + (hi - lo) * Rational(nums[i], dens[i]);
            if (sf.eval(m).sign() != 0) return m;
        }
        throw std::logic_error("isolate_real_roots: could not find a non-root split point");
    };
    int total = count(a, b);
    out.total_real_root_count = total;
    if (total == 0) return out;
    struct Seg {
        Rational lo, hi;
        int n;
    };
    std::vector<Seg> stack{{a, b, total}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            if (sf.eval(s.hi).sign() == 0) {  // the single root of (lo, hi] is hi itself
                out.intervals.emplace_back(s.hi, s.hi);
                continue;
            }
            Rational l = s.lo, h = s.hi;
            for (int i = 0; i < 8; ++i) {  // snug the bracket a little
                Rational m = nonroot_split(l, h);
                if (count(l, m) == 1)
                    h = m;
                else
                    l = m;
            }
            out.intervals.emplace_back(l, h);
            continue;
        }
        Rational mid = nonroot_split(s.lo, s.hi);
        int nl = count(s.lo, mid);
        stack.push_back({s.lo, mid, nl});
        stack.push_back({mid, s.hi, s.n - nl});
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

RootIsolation isolate_real_roots(const PolyQ& p) {
    Rational B = cauchy_root_bound(p);
    return isolate_real_roots(p, -B, B);
}

PositivityCertificate certify_positive(const PolyQ& p, const Rational& a, const Rational& b,
                                       BoundaryMode left, BoundaryMode right) {
    if (p.is_zero()) throw std::invalid_argument("certify_positive: zero polynomial");
    PositivityCertificate cert;
    cert.sample_point = (a + b) / Rational(2);
    cert.sample_value = p.eval(cert.sample_point);
    if (p.degree() == 0) {
        cert.interior_root_count = 0;
        cert.pass = p.coeff(0).sign() > 0;
        if (!cert.pass) cert.failure = "constant polynomial is not positive";
        return cert;
    }
    // roots in (a, b]: subtract an exact root at b to get the open interior
    int n = sturm_root_count(p, DomainEnd::at(a), DomainEnd::at(b));
    bool root_at_b = p.eval(b).sign() == 0;
    bool root_at_a = p.eval(a).sign() == 0;
    cert.interior_root_count = n - (root_at_b ? 1 : 0);
    if (cert.interior_root_count != 0) {
        cert.failure = "polynomial vanishes in the interior";
        return cert;
    }
    if (cert.sample_value.sign() <= 0) {
        cert.failure = "sample value nonpositive at " + cert.sample_point.to_string();
        return cert;
    }
    if (left == BoundaryMode::Closed && (root_at_a || p.eval(a).sign() < 0)) {
        cert.failure = "vanishes or negative at closed left endpoint";
        return cert;
    }
    if (right == BoundaryMode::Closed && (root_at_b || p.eval(b).sign() < 0)) {
        cert.failure = "vanishes or negative at closed right endpoint";
        return cert;
    }
    cert.pass = true;
    return cert;
}

const PolyQ& chebyshev_expand(int ell) {
    if (ell < 0 || ell > 240) throw std::invalid_argument("chebyshev_expand: need 0 <= ell <= 240");
    static std::mutex mu;
    static std::vector<PolyQ> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) {
        cache.push_back(PolyQ::constant(Rational(1)));                 // T_0 = 1
        cache.push_back(PolyQ::monomial(Rational(1), 1));              // T_1 = y
    }
    PolyQ two_y = PolyQ::monomial(Rational(2), 1);
    while (static_cast<int>(cache.size()) <= ell)
        cache.push_back(two_y * cache[cache.size() - 1] - cache[cache.size() - 2]);
    return cache[ell];
}

Interval poly_min_enclosure(const PolyQ& p, const Rational& a, const Rational& b,
                            mpfr_prec_t prec) {
    if (p.is_zero()) return Interval::point(0, prec);
    std::vector<std::pair<Rational, Rational>> candidates{{a, a}, {b, b}};
    PolyQ d = p.derivative();
    if (!d.is_zero() && d.degree() >= 1) {
        RootIsolation crit = isolate_real_roots(d, a, b);
        // refine each isolating interval so the p-image is tight
        for (auto [lo, hi] : crit.intervals) {
            for (int i = 0; i < 40 && lo != hi; ++i) {
                Rational mid = (lo + hi) / Rational(2);
                if (d.eval(mid).sign() == 0) {
                    lo = hi = mid;
                    break;
                }
                if (sturm_root_count(d, DomainEnd::at(lo), DomainEnd::at(mid)) == 1)
                    hi = mid;
                else
                    lo = mid;
            }
            candidates.emplace_back(lo, hi);
        }
    }
    bool first = true;
    Interval best(prec);
    for (const auto& [lo, hi] : candidates) {
        Interval x = Interval::from_endpoints(lo, hi, prec);
        Interval v = p.eval_iv(x);
        if (first) {
            best = v;
            first = false;
        } else {
            Interval nb(prec);
            mpfr_min(nb.mlo(), best.lo(), v.lo(), MPFR_RNDD);
            mpfr_min(nb.mhi(), best.hi(), v.hi(), MPFR_RNDU);
            best = nb;
        }
    }
    return best;
}

}  // namespace zetafree
