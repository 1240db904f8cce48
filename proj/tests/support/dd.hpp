// Minimal double-double arithmetic (~31 significant digits) for test oracles.
// Standard error-free transformations (Dekker / Knuth two_sum, fma two_prod),
// enough surface for the reference integrals used in the tests.
#ifndef STOKES_TESTS_DD_HPP
#define STOKES_TESTS_DD_HPP

#include <cmath>
#include <cstdint>

namespace ddm {

struct DD {
    double hi = 0.0;
    double lo = 0.0;
    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD neg(DD a) { return {-a.hi, -a.lo}; }
inline DD sub(DD a, DD b) { return add(a, neg(b)); }

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul_d(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD div(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = sub(a, mul_d(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul_d(b, q2));
    double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return add(q, DD(q3));
}

inline DD sqr(DD a) { return mul(a, a); }

inline DD dsqrt(DD a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double s = std::sqrt(a.hi);
    DD e = sub(a, sqr(DD(s)));
    return add(DD(s), div(e, DD(2.0 * s)));
}

inline DD ldexp(DD a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline const DD dd_ln2{6.931471805599453094e-01, 2.319046813846299558e-17};
inline const DD dd_pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline const DD dd_half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};

inline DD dexp(DD a) {
    static const DD* inv = [] {
        static DD t[32];
        for (int j = 1; j <= 31; ++j) t[j] = div(DD(1.0), DD(double(j)));
        return t;
    }();
    if (a.hi < -746.0) return {0.0, 0.0};
    double m = std::round(a.hi / dd_ln2.hi);
    DD r = sub(a, mul_d(dd_ln2, m));
    r = ldexp(r, -4);  // exp(r)^(2^4)
    DD sum(1.0);
    DD term(1.0);
    for (int j = 1; j <= 18; ++j) {
        term = mul(mul(term, r), inv[j]);
        sum = add(sum, term);
    }
    for (int k = 0; k < 4; ++k) sum = sqr(sum);
    return ldexp(sum, static_cast<int>(m));
}

inline DD sin_taylor(DD r) {
    static const DD* inv = [] {
        static DD t[21];
        for (int m = 1; m <= 20; ++m) t[m] = div(DD(-1.0), DD(double((2 * m) * (2 * m + 1))));
        return t;
    }();
    DD r2 = sqr(r);
    DD term = r;
    DD sum = r;
    for (int m = 1; m <= 20; ++m) {
        term = mul(mul(term, r2), inv[m]);
        sum = add(sum, term);
    }
    return sum;
}

inline DD cos_taylor(DD r) {
    static const DD* inv = [] {
        static DD t[21];
        for (int m = 1; m <= 20; ++m) t[m] = div(DD(-1.0), DD(double((2 * m - 1) * (2 * m))));
        return t;
    }();
    DD r2 = sqr(r);
    DD term(1.0);
    DD sum(1.0);
    for (int m = 1; m <= 20; ++m) {
        term = mul(mul(term, r2), inv[m]);
        sum = add(sum, term);
    }
    return sum;
}

// sin and cos together, with quadrant reduction against pi/2.
inline void sincos(DD a, DD& s, DD& c) {
    double k = std::round(a.hi / dd_half_pi.hi);
    DD r = sub(a, mul_d(dd_half_pi, k));
    long long q = static_cast<long long>(k) & 3;
    if (q < 0) q += 4;
    DD sr = sin_taylor(r), cr = cos_taylor(r);
    switch (q) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = neg(sr); break;
        case 2: s = neg(sr); c = neg(cr); break;
        default: s = neg(cr); c = sr; break;
    }
}

struct DDC {
    DD re, im;
};

inline DDC add(DDC a, DDC b) { return {add(a.re, b.re), add(a.im, b.im)}; }
inline DDC sub(DDC a, DDC b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }
inline DDC mul(DDC a, DDC b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)),
            add(mul(a.re, b.im), mul(a.im, b.re))};
}
inline DDC mul_d(DDC a, DD b) { return {mul(a.re, b), mul(a.im, b)}; }
inline DDC neg(DDC a) { return {neg(a.re), neg(a.im)}; }

inline DDC dexp(DDC e) {
    DD mag = dexp(e.re);
    DD s, c;
    sincos(e.im, s, c);
    return {mul(mag, c), mul(mag, s)};
}

}  // namespace ddm

#endif
