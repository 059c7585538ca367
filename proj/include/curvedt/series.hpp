#pragma once

// Truncated power series in t over RingElem, with the lambda-ring structure
// psi_n(t) = t^n and the plethystic exponential / logarithm
//
//   Exp(f) = exp( sum_{n>=1} psi_n(f) / n ),
//   Log(F) = sum_{k>=1} mu(k)/k psi_k( log F ).
//
// Every operation truncates silently above the common order rmax.

#include "curvedt/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace curvedt {

/// Moebius function by trial division.
inline int mobius(int n) {
    if (n < 1)
        throw std::invalid_argument("mobius requires n >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

class GradedSeries {
public:
    /// Zero series with coefficients for t^0 .. t^rmax.
    explicit GradedSeries(int rmax) : coeffs_(check_order(rmax) + 1) {}

    GradedSeries(int rmax, std::vector<RingElem> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(check_order(rmax)) + 1);
    }

    static GradedSeries one(int rmax) {
        GradedSeries s(rmax);
        s[0] = RingElem(1);
        return s;
    }

    /// c * t^r, truncated.
    static GradedSeries monomial(int rmax, int r, const RingElem& c) {
        GradedSeries s(rmax);
        if (r >= 0 && r <= rmax)
            s[r] = c;
        return s;
    }

    int rmax() const { return static_cast<int>(coeffs_.size()) - 1; }

    const RingElem& operator[](int r) const { return coeffs_.at(static_cast<std::size_t>(r)); }
    RingElem& operator[](int r) { return coeffs_.at(static_cast<std::size_t>(r)); }

    const std::vector<RingElem>& coefficients() const { return coeffs_; }

    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
        require_same_order(a, b);
        GradedSeries s(a.rmax());
        for (int r = 0; r <= a.rmax(); ++r)
            s[r] = a[r] + b[r];
        return s;
    }

    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
        require_same_order(a, b);
        GradedSeries s(a.rmax());
        for (int r = 0; r <= a.rmax(); ++r)
            s[r] = a[r] - b[r];
        return s;
    }

    friend GradedSeries operator*(const RingElem& c, const GradedSeries& f) {
        GradedSeries s(f.rmax());
        for (int r = 0; r <= f.rmax(); ++r)
            s[r] = c * f[r];
        return s;
    }

    /// Cauchy product; zero coefficients are skipped.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        require_same_order(a, b);
        GradedSeries s(a.rmax());
        for (int i = 0; i <= a.rmax(); ++i) {
            if (a[i].is_zero())
                continue;
            for (int j = 0; i + j <= a.rmax(); ++j)
                if (!b[j].is_zero())
                    s[i + j] += a[i] * b[j];
        }
        return s;
    }

    /// Coefficientwise cross-multiplication equality.
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        if (a.rmax() != b.rmax())
            return false;
        for (int r = 0; r <= a.rmax(); ++r)
            if (!(a[r] == b[r]))
                return false;
        return true;
    }

private:
    std::vector<RingElem> coeffs_;

    static int check_order(int rmax) {
        if (rmax < 0)
            throw std::invalid_argument("series truncation order must be non-negative");
        return rmax;
    }

    static void require_same_order(const GradedSeries& a, const GradedSeries& b) {
        if (a.rmax() != b.rmax())
            throw std::invalid_argument("series truncation orders differ");
    }
};

inline GradedSeries series_mul(const GradedSeries& f, const GradedSeries& g) { return f * g; }

/// Formal logarithm of a series with constant term 1, via n b_n = n a_n - sum_{k<n} k b_k a_{n-k}.
inline GradedSeries series_log(const GradedSeries& f) {
    if (!(f[0] == RingElem(1)))
        throw std::domain_error("series_log requires constant term 1");
    const int rmax = f.rmax();
    GradedSeries out(rmax);
    for (int n = 1; n <= rmax; ++n) {
        RingElem acc = Rational(n) * f[n];
        for (int k = 1; k < n; ++k)
            if (!out[k].is_zero() && !f[n - k].is_zero())
                acc -= Rational(k) * (out[k] * f[n - k]);
        out[n] = make_rational(1, n) * acc;
    }
    return out;
}

/// Formal exponential of a series with constant term 0, via n e_n = sum_{k=1}^n k a_k e_{n-k}.
inline GradedSeries series_exp(const GradedSeries& f) {
    if (!f[0].is_zero())
        throw std::domain_error("series_exp requires constant term 0");
    const int rmax = f.rmax();
    GradedSeries out = GradedSeries::one(rmax);
    for (int n = 1; n <= rmax; ++n) {
        RingElem acc;
        for (int k = 1; k <= n; ++k)
            if (!f[k].is_zero() && !out[n - k].is_zero())
                acc += Rational(k) * (f[k] * out[n - k]);
        out[n] = make_rational(1, n) * acc;
    }
    return out;
}

/// Coefficient of t^r becomes psi_n of the coefficient of t^{r/n}.
inline GradedSeries adams_series(int n, const GradedSeries& f) {
    if (n < 1)
        throw std::invalid_argument("Adams operation requires n >= 1");
    GradedSeries out(f.rmax());
    for (int r = 0; r * n <= f.rmax(); ++r)
        out[r * n] = adams(n, f[r]);
    return out;
}

inline GradedSeries pleth_exp(const GradedSeries& f) {
    if (!f[0].is_zero())
        throw std::domain_error("plethystic Exp requires constant term 0");
    GradedSeries inner(f.rmax());
    for (int n = 1; n <= f.rmax(); ++n)
        inner = inner + RingElem(make_rational(1, n)) * adams_series(n, f);
    return series_exp(inner);
}

inline GradedSeries pleth_log(const GradedSeries& f) {
    if (!(f[0] == RingElem(1)))
        throw std::domain_error("plethystic Log requires constant term 1");
    const GradedSeries log_f = series_log(f);
    GradedSeries out(f.rmax());
    for (int k = 1; k <= f.rmax(); ++k) {
        const int mu = mobius(k);
        if (mu != 0)
            out = out + RingElem(make_rational(mu, k)) * adams_series(k, log_f);
    }
    return out;
}

} // namespace curvedt
