#pragma once

#include <utility>
#include <vector>

#include "ringkit/polynomial.hpp"

namespace ringkit {

// Coset of M^K in Q[[x1..xn]]: a polynomial representative with every term
// of total degree < K. Precision is checked on every binary operation;
// mixed precision is an error, never a silent coercion.
class TruncatedSeries {
public:
    TruncatedSeries() : prec_(1) {}

    TruncatedSeries(Polynomial rep, unsigned precision)
        : rep_(rep.truncated(precision)), prec_(precision) {
        if (precision < 1) throw Error(Errc::InvalidConfig, "precision must be >= 1");
    }

    static TruncatedSeries constant(unsigned nvars, Rational c, unsigned precision) {
        return TruncatedSeries(Polynomial::constant(nvars, std::move(c)), precision);
    }

    static TruncatedSeries one(unsigned nvars, unsigned precision) {
        return constant(nvars, 1, precision);
    }

    const Polynomial& representative() const { return rep_; }
    unsigned precision() const { return prec_; }
    unsigned nvars() const { return rep_.nvars(); }
    bool is_zero() const { return rep_.is_zero(); }

    bool operator==(const TruncatedSeries& o) const {
        return prec_ == o.prec_ && rep_ == o.rep_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries truncated(unsigned K) const {
        if (K > prec_)
            throw Error(Errc::PrecisionMismatch, "cannot raise precision by truncation");
        return TruncatedSeries(rep_, K);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        return TruncatedSeries(a.rep_ + b.rep_, a.prec_);
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        return TruncatedSeries(a.rep_ - b.rep_, a.prec_);
    }

    TruncatedSeries operator-() const { return TruncatedSeries(-rep_, prec_); }

private:
    void check(const TruncatedSeries& o) const {
        if (rep_.nvars() != o.rep_.nvars())
            throw Error(Errc::AmbientMismatch, "series from different ambient rings");
        if (prec_ != o.prec_)
            throw Error(Errc::PrecisionMismatch, "series precisions differ");
    }

    Polynomial rep_;
    unsigned prec_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.nvars() != b.nvars())
        throw Error(Errc::AmbientMismatch, "series from different ambient rings");
    if (a.precision() != b.precision())
        throw Error(Errc::PrecisionMismatch, "series precisions differ");
    return TruncatedSeries(a.representative() * b.representative(), a.precision());
}

inline bool is_unit(const TruncatedSeries& a) {
    return a.representative().constant_term() != 0;
}

inline bool is_unit(const Polynomial& a) { return a.constant_term() != 0; }

// Inverse of a unit via the Neumann series on the maximal-ideal part:
// a = c(1 + m) with m in M, so a^-1 = c^-1 (1 - m + m^2 - ...) up to M^K.
inline TruncatedSeries series_invert_unit(const TruncatedSeries& a) {
    Rational c = a.representative().constant_term();
    if (c == 0) throw Error(Errc::NotAUnit, "series has zero constant term");
    unsigned K = a.precision();
    unsigned n = a.nvars();
    Polynomial m = Rational(1) / c * a.representative();
    m -= Polynomial::constant(n, 1);  // the M-part of a/c
    Polynomial acc = Polynomial::constant(n, 1);
    Polynomial powm = Polynomial::constant(n, 1);
    for (unsigned i = 1; i < K; ++i) {
        powm = (powm * m).truncated(K);
        if (powm.is_zero()) break;
        if (i % 2 == 1) acc -= powm;
        else acc += powm;
    }
    return TruncatedSeries(Rational(1) / c * acc, K);
}

// Element of the localization of Q[x1..xn] at (x1..xn): a fraction whose
// denominator is a unit (nonzero constant term). Equality is tested by
// cross-multiplication.
class LocalElement {
public:
    LocalElement() = default;

    explicit LocalElement(Polynomial numerator)
        : num_(std::move(numerator)),
          den_(Polynomial::constant(num_.nvars(), 1)) {}

    LocalElement(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (num_.nvars() != den_.nvars())
            throw Error(Errc::AmbientMismatch, "fraction parts from different ambient rings");
        if (den_.constant_term() == 0)
            throw Error(Errc::NotAUnit, "denominator is not a unit of the localization");
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    unsigned nvars() const { return num_.nvars(); }

    bool operator==(const LocalElement& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const LocalElement& o) const { return !(*this == o); }

    // Image in T/M^K, with the denominator inverted as a series.
    TruncatedSeries embed(unsigned K) const {
        TruncatedSeries n(num_, K);
        TruncatedSeries d(den_, K);
        return series_mul(n, series_invert_unit(d));
    }

private:
    Polynomial num_;
    Polynomial den_;
};

inline bool is_unit(const LocalElement& e) { return e.numerator().constant_term() != 0; }

// Polynomial in one indeterminate X with LocalElement coefficients,
// coeffs[i] multiplying X^i.
struct XPolynomial {
    std::vector<LocalElement> coeffs;

    unsigned degree() const {
        return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1);
    }
};

// Horner evaluation of g at a truncated series.
inline TruncatedSeries substitute(const XPolynomial& g, const TruncatedSeries& v) {
    unsigned K = v.precision();
    unsigned n = v.nvars();
    TruncatedSeries acc = TruncatedSeries::constant(n, 0, K);
    for (size_t i = g.coeffs.size(); i-- > 0;) {
        acc = series_mul(acc, v) + g.coeffs[i].embed(K);
    }
    return acc;
}

}  // namespace ringkit
