#ifndef CESARO_COMPENSATED_HPP
#define CESARO_COMPENSATED_HPP

#include <cmath>
#include <complex>

namespace cesaro {

// Error-free transformations (Knuth / Dekker).
inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double quick_two_sum(double a, double b, double& err) {
    // requires |a| >= |b|
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

/// Neumaier-compensated running sum. One extra double of headroom;
/// enough for long prefix sums where naive accumulation loses digits.
class NeumaierSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
    void reset() { sum_ = comp_ = 0.0; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Complex Neumaier sum (componentwise).
class NeumaierSumC {
public:
    void add(std::complex<double> v) {
        re_.add(v.real());
        im_.add(v.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_, im_;
};

/// Double-double value: unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
/// Used where alternating sums of exponentially large terms must keep
/// ~32 significant digits (incomplete-gamma tail recurrences).
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }

    static DD from_sum(double s, double e) {
        double err;
        double h = quick_two_sum(s, e, err);
        return DD(h, err);
    }

    friend DD operator+(DD a, DD b) {
        double e1, e2;
        double s = two_sum(a.hi, b.hi, e1);
        double t = two_sum(a.lo, b.lo, e2);
        e1 += t;
        s = quick_two_sum(s, e1, e1);
        e1 += e2;
        return from_sum(s, e1);
    }
    friend DD operator-(DD a, DD b) { return a + DD(-b.hi, -b.lo); }
    friend DD operator-(DD a) { return DD(-a.hi, -a.lo); }

    friend DD operator*(DD a, DD b) {
        double e;
        double p = two_prod(a.hi, b.hi, e);
        e += a.hi * b.lo + a.lo * b.hi;
        return from_sum(p, e);
    }
    friend DD operator/(DD a, DD b) {
        double q1 = a.hi / b.hi;
        DD r = a - b * DD(q1);
        double q2 = r.hi / b.hi;
        r = r - b * DD(q2);
        double q3 = r.hi / b.hi;
        double e;
        double s = two_sum(q1, q2, e);
        e += q3;
        return from_sum(s, e);
    }

    DD& operator+=(DD b) { return *this = *this + b; }
    DD& operator-=(DD b) { return *this = *this - b; }
    DD& operator*=(DD b) { return *this = *this * b; }
    DD& operator/=(DD b) { return *this = *this / b; }

    friend DD abs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
};

}  // namespace cesaro

#endif
